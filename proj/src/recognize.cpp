#include "slie/recognize.hpp"

#include <stdexcept>

namespace slie {

FamilyDescriptor FamilyDescriptor::abelian(std::size_t m, std::size_t n) {
  FamilyDescriptor d;
  d.kind = FamilyKind::Abelian;
  d.m = m;
  d.n = n;
  return d;
}

FamilyDescriptor FamilyDescriptor::even_heisenberg(std::size_t m, std::size_t n) {
  FamilyDescriptor d;
  d.kind = FamilyKind::EvenHeisenberg;
  d.m = m;
  d.n = n;
  return d;
}

FamilyDescriptor FamilyDescriptor::odd_heisenberg(std::size_t m) {
  FamilyDescriptor d;
  d.kind = FamilyKind::OddHeisenberg;
  d.m = m;
  return d;
}

FamilyDescriptor FamilyDescriptor::heisenberg_plus_abelian(const FamilyDescriptor& core, GradedDim pad) {
  if (core.kind != FamilyKind::EvenHeisenberg && core.kind != FamilyKind::OddHeisenberg)
    throw std::invalid_argument("Heisenberg core required");
  if (pad.total() == 0) return core;
  FamilyDescriptor d = core;
  d.kind = FamilyKind::HeisenbergPlusAbelian;
  d.core = core.kind;
  d.pad = pad;
  return d;
}

FamilyDescriptor FamilyDescriptor::generalized_heisenberg(GradedDim rank) {
  FamilyDescriptor d;
  d.kind = FamilyKind::GeneralizedHeisenberg;
  d.rank = rank;
  return d;
}

FamilyDescriptor FamilyDescriptor::core_descriptor() const {
  if (kind != FamilyKind::HeisenbergPlusAbelian) return *this;
  return core == FamilyKind::EvenHeisenberg ? even_heisenberg(m, n) : odd_heisenberg(m);
}

GradedDim FamilyDescriptor::dim() const {
  switch (kind) {
    case FamilyKind::Abelian: return {m, n};
    case FamilyKind::EvenHeisenberg: return {2 * m + 1, n};
    case FamilyKind::OddHeisenberg: return {m, m + 1};
    case FamilyKind::HeisenbergPlusAbelian: return core_descriptor().dim() + pad;
    default: throw std::invalid_argument("dimension not determined by descriptor " + str());
  }
}

std::string FamilyDescriptor::str() const {
  auto num = [](std::size_t v) { return std::to_string(v); };
  switch (kind) {
    case FamilyKind::Abelian: return "A(" + num(m) + "|" + num(n) + ")";
    case FamilyKind::EvenHeisenberg: return "H(" + num(m) + "," + num(n) + ")";
    case FamilyKind::OddHeisenberg: return "H_" + num(m);
    case FamilyKind::HeisenbergPlusAbelian:
      return core_descriptor().str() + " + A(" + num(pad.even) + "|" + num(pad.odd) + ")";
    case FamilyKind::GeneralizedHeisenberg: return "GH" + rank.str();
    case FamilyKind::None: break;
  }
  return "none";
}

namespace {

// Coefficient of the single spanning vector w of a one-dimensional L^2.
Scalar along(const Subspace& line, const Vector& u) {
  return u[line.pivots().front()];
}

}  // namespace

FamilyDescriptor recognize(const SuperAlgebra& a) {
  auto lcs = lower_central_series(a);
  if (!lcs.nilpotency_class) throw NotNilpotent("recognize: " + a.name() + " is not nilpotent");
  auto l2 = derived(a);
  const auto dim = a.dim();
  if (l2.space().is_zero()) return FamilyDescriptor::abelian(dim.even, dim.odd);

  const std::size_t even = dim.even;
  if (l2.dim().total() == 1) {
    const Subspace& line = l2.space();
    if (l2.dim().even == 1) {
      Matrix alt(even, even);
      for (std::size_t i = 0; i < even; ++i)
        for (std::size_t j = 0; j < even; ++j) alt(i, j) = along(line, a.structure(i, j));
      Matrix sym(dim.odd, dim.odd);
      for (std::size_t i = 0; i < dim.odd; ++i)
        for (std::size_t j = 0; j < dim.odd; ++j) sym(i, j) = along(line, a.structure(even + i, even + j));
      const std::size_t m = rank(alt) / 2;
      const std::size_t n = rank(sym);
      auto core = FamilyDescriptor::even_heisenberg(m, n);
      GradedDim pad{dim.even - (2 * m + 1), dim.odd - n};
      return FamilyDescriptor::heisenberg_plus_abelian(core, pad);
    }
    Matrix pairing(even, dim.odd);
    for (std::size_t i = 0; i < even; ++i)
      for (std::size_t j = 0; j < dim.odd; ++j) pairing(i, j) = along(line, a.structure(i, even + j));
    const std::size_t m = rank(pairing);
    auto core = FamilyDescriptor::odd_heisenberg(m);
    GradedDim pad{dim.even - m, dim.odd - (m + 1)};
    return FamilyDescriptor::heisenberg_plus_abelian(core, pad);
  }

  auto z = center(a);
  if (z.space() == l2.space()) return FamilyDescriptor::generalized_heisenberg(z.dim());
  return FamilyDescriptor::none();
}

SuperAlgebra build_canonical(const FamilyDescriptor& d) {
  auto name = d.str();
  switch (d.kind) {
    case FamilyKind::Abelian: return abelian(d.m, d.n).renamed(name);
    case FamilyKind::EvenHeisenberg: {
      if (d.m + d.n == 0) throw std::invalid_argument("H(0,0) is not a Heisenberg superalgebra");
      std::vector<std::string> even, odd;
      for (std::size_t i = 1; i <= 2 * d.m; ++i) even.push_back("x" + std::to_string(i));
      even.push_back("z");
      for (std::size_t j = 1; j <= d.n; ++j) odd.push_back("y" + std::to_string(j));
      const std::size_t size = 2 * d.m + 1 + d.n;
      const std::size_t z = 2 * d.m;
      std::vector<SuperAlgebra::Entry> entries;
      for (std::size_t i = 0; i < d.m; ++i) entries.push_back({i, d.m + i, unit_vector(size, z)});
      for (std::size_t j = 0; j < d.n; ++j) entries.push_back({z + 1 + j, z + 1 + j, unit_vector(size, z)});
      return SuperAlgebra::from_brackets(name, std::move(even), std::move(odd), entries);
    }
    case FamilyKind::OddHeisenberg: {
      if (d.m == 0) throw std::invalid_argument("H_0 is not a Heisenberg superalgebra");
      std::vector<std::string> even, odd;
      for (std::size_t i = 1; i <= d.m; ++i) even.push_back("x" + std::to_string(i));
      for (std::size_t j = 1; j <= d.m; ++j) odd.push_back("y" + std::to_string(j));
      odd.push_back("z");
      const std::size_t size = 2 * d.m + 1;
      const std::size_t z = 2 * d.m;
      std::vector<SuperAlgebra::Entry> entries;
      for (std::size_t j = 0; j < d.m; ++j) entries.push_back({j, d.m + j, unit_vector(size, z)});
      return SuperAlgebra::from_brackets(name, std::move(even), std::move(odd), entries);
    }
    case FamilyKind::HeisenbergPlusAbelian:
      return direct_sum(build_canonical(d.core_descriptor()), abelian(d.pad.even, d.pad.odd)).renamed(name);
    case FamilyKind::GeneralizedHeisenberg:
      throw std::invalid_argument("generalized Heisenberg rank does not fix a canonical form");
    case FamilyKind::None: break;
  }
  throw std::invalid_argument("no canonical algebra for descriptor 'none'");
}

ClassTwoSplit class_two_decompose(const SuperAlgebra& a) {
  auto lcs = lower_central_series(a);
  if (!lcs.nilpotency_class || *lcs.nilpotency_class > 2)
    throw AlgebraError("class_two_decompose: " + a.name() + " has nilpotency class > 2");
  auto l2 = derived(a);
  auto z = center(a);
  GradedDim pad;
  for (const auto& v : complement(l2.space(), z.space())) ++pad[*homogeneous_parity(a, v)];
  GradedDim h = a.dim();
  h.even -= pad.even;
  h.odd -= pad.odd;
  return {h, pad};
}

}  // namespace slie
