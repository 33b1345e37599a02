#include "slie/multiplier.hpp"

#include <optional>

namespace slie {

std::string to_string(MultiplierMethod m) {
  switch (m) {
    case MultiplierMethod::Tags: return "tags";
    case MultiplierMethod::Homology: return "homology";
    case MultiplierMethod::Formula: return "formula";
    case MultiplierMethod::DirectSum: return "direct-sum";
  }
  return "?";
}

namespace {

// Position of each sorted pair in the C_2 basis, -1 where the pair is absent.
struct PairIndex {
  std::size_t n = 0;
  std::vector<long> pos;
  std::vector<std::array<std::size_t, 2>> pairs;

  explicit PairIndex(const SuperAlgebra& a) : n(a.size()), pos(n * n, -1) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (i == j && a.parity(i) == Parity::Even) continue;
        pos[i * n + j] = static_cast<long>(pairs.size());
        pairs.push_back({i, j});
      }
  }

  struct Term {
    std::size_t index;
    int sign;
  };

  // x_i ^ x_j in basis coordinates; x ^ y = -(-1)^{|x||y|} y ^ x.
  std::optional<Term> element(const SuperAlgebra& a, std::size_t i, std::size_t j) const {
    if (i <= j) {
      long p = pos[i * n + j];
      if (p < 0) return std::nullopt;
      return Term{static_cast<std::size_t>(p), 1};
    }
    return Term{static_cast<std::size_t>(pos[j * n + i]), -koszul_sign(a.parity(i), a.parity(j))};
  }

  // Adds c * (x_i ^ v) to out.
  void add_wedge(const SuperAlgebra& a, Vector& out, const Scalar& c, std::size_t i, const Vector& v) const {
    if (sgn(c) == 0) return;
    for (std::size_t l = 0; l < n; ++l) {
      if (sgn(v[l]) == 0) continue;
      if (auto t = element(a, i, l)) out[t->index] += c * t->sign * v[l];
    }
  }
};

void require_valid_nilpotent(const SuperAlgebra& a, const char* who) {
  auto violations = validate(a);
  if (!violations.empty())
    throw AlgebraError(std::string(who) + ": " + a.name() + " is not a Lie superalgebra (" +
                       violations.front().axiom + ": " + violations.front().detail + ")");
  if (!is_nilpotent(a)) throw NotNilpotent(std::string(who) + ": " + a.name() + " is not nilpotent");
}

Parity pair_parity(const SuperAlgebra& a, std::size_t i, std::size_t j) {
  return a.parity(i) + a.parity(j);
}

}  // namespace

TagPresentation tag_presentation(const SuperAlgebra& a) {
  const PairIndex idx(a);
  const std::size_t n = a.size();
  TagPresentation p;
  for (const auto& [i, j] : idx.pairs) p.tags.push_back({i, j, pair_parity(a, i, j)});

  const auto l2 = derived(a);
  Subspace reached(n);
  for (std::size_t t = 0; t < p.tags.size() && reached.dim() < l2.dim().total(); ++t) {
    const Vector& value = a.structure(p.tags[t].i, p.tags[t].j);
    if (reached.contains(value)) continue;
    p.absorbed.push_back(t);
    reached = sum(reached, Subspace::span(n, {value}));
  }

  // Cyclic terms of (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]].
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      for (std::size_t z = y; z < n; ++z) {
        const std::array<std::array<std::size_t, 3>, 3> cyc{{{x, y, z}, {y, z, x}, {z, x, y}}};
        Vector row = zero_vector(p.tags.size());
        Vector body = zero_vector(n);
        for (const auto& [u, v, w] : cyc) {
          const int s = koszul_sign(a.parity(u), a.parity(w));
          const Vector& inner = a.structure(v, w);
          idx.add_wedge(a, row, Scalar(s), u, inner);
          const Vector outer = a.bracket_basis(u, inner);
          for (std::size_t l = 0; l < n; ++l) body[l] += s * outer[l];
        }
        if (!is_zero(body)) throw AlgebraError("tag_presentation: Jacobi identity fails in " + a.name());
        if (is_zero(row)) continue;
        p.relations.push_back(std::move(row));
        p.relation_triples.push_back({x, y, z});
      }
  return p;
}

std::string tag_label(const SuperAlgebra& a, const TagPresentation& p, std::size_t t) {
  const auto& names = a.basis_names();
  return "m" + std::to_string(t + 1) + "[" + names[p.tags[t].i] + "," + names[p.tags[t].j] + "]";
}

MultiplierResult multiplier_tags(const SuperAlgebra& a) {
  require_valid_nilpotent(a, "multiplier_tags");
  const auto p = tag_presentation(a);
  const std::size_t count = p.tags.size();

  std::vector<bool> is_absorbed(count, false);
  for (auto t : p.absorbed) is_absorbed[t] = true;

  std::vector<Vector> projected[2];
  for (const auto& r : p.relations) {
    Vector v = r;
    std::optional<Parity> parity;
    for (std::size_t t = 0; t < count; ++t) {
      if (is_absorbed[t]) v[t] = 0;
      if (sgn(v[t]) == 0) continue;
      if (parity && *parity != p.tags[t].parity)
        throw AlgebraError("multiplier_tags: inhomogeneous Jacobi relation in " + a.name());
      parity = p.tags[t].parity;
    }
    if (parity) projected[static_cast<int>(*parity)].push_back(std::move(v));
  }

  MultiplierResult res;
  res.method = MultiplierMethod::Tags;
  res.tag_count = count;
  for (Parity par : {Parity::Even, Parity::Odd}) {
    std::size_t tags = 0, absorbed = 0;
    for (std::size_t t = 0; t < count; ++t) {
      if (p.tags[t].parity != par) continue;
      ++tags;
      if (is_absorbed[t]) ++absorbed;
    }
    const std::size_t r = rank(count, projected[static_cast<int>(par)]);
    res.relation_rank += r;
    res.dim[par] = tags - absorbed - r;
  }

  std::vector<Vector> all = projected[0];
  all.insert(all.end(), projected[1].begin(), projected[1].end());
  Subspace acc = Subspace::span(count, all);
  for (std::size_t t = 0; t < count; ++t) {
    if (is_absorbed[t]) continue;
    Vector e = unit_vector(count, t);
    if (acc.contains(e)) continue;
    res.free_tags.push_back(t);
    res.free_generators.push_back(tag_label(a, p, t));
    acc = sum(acc, Subspace::span(count, {e}));
  }
  for (auto t : p.absorbed) res.absorbed.push_back(tag_label(a, p, t));
  return res;
}

namespace chain {

std::vector<std::array<std::size_t, 2>> c2_basis(const SuperAlgebra& a) { return PairIndex(a).pairs; }

std::vector<std::array<std::size_t, 3>> c3_basis(const SuperAlgebra& a) {
  std::vector<std::array<std::size_t, 3>> out;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && a.parity(i) == Parity::Even) continue;
      for (std::size_t k = j; k < n; ++k) {
        if (j == k && a.parity(j) == Parity::Even) continue;
        out.push_back({i, j, k});
      }
    }
  return out;
}

namespace {

// c * (v ^ x_k), with v ^ x_k = -(-1)^{|v||x_k|} x_k ^ v for homogeneous v of parity pv.
void add_wedge_right(const SuperAlgebra& a, const PairIndex& idx, Vector& out, const Scalar& c,
                     const Vector& v, Parity pv, std::size_t k) {
  idx.add_wedge(a, out, -c * koszul_sign(pv, a.parity(k)), k, v);
}

Vector boundary3_with(const SuperAlgebra& a, const PairIndex& idx, std::size_t i, std::size_t j, std::size_t k) {
  // d3(x ^ y ^ z) = [x,y]^z - (-1)^{|y||z|}[x,z]^y + (-1)^{|x|(|y|+|z|)}[y,z]^x
  const Parity px = a.parity(i), py = a.parity(j), pz = a.parity(k);
  Vector out = zero_vector(idx.pairs.size());
  add_wedge_right(a, idx, out, Scalar(1), a.structure(i, j), px + py, k);
  add_wedge_right(a, idx, out, Scalar(-koszul_sign(py, pz)), a.structure(i, k), px + pz, j);
  add_wedge_right(a, idx, out, Scalar(koszul_sign(px, py + pz)), a.structure(j, k), py + pz, i);
  return out;
}

}  // namespace

Vector boundary3(const SuperAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
  return boundary3_with(a, PairIndex(a), i, j, k);
}

Vector boundary2(const SuperAlgebra& a, const Vector& c2) {
  const auto pairs = c2_basis(a);
  if (c2.size() != pairs.size()) throw DimensionError("boundary2: wrong C_2 dimension");
  Vector out = zero_vector(a.size());
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    if (sgn(c2[t]) == 0) continue;
    const Vector& b = a.structure(pairs[t][0], pairs[t][1]);
    for (std::size_t l = 0; l < out.size(); ++l) out[l] += c2[t] * b[l];
  }
  return out;
}

Subspace boundaries(const SuperAlgebra& a) {
  const PairIndex idx(a);
  std::vector<Vector> rows;
  for (const auto& [i, j, k] : c3_basis(a)) rows.push_back(boundary3_with(a, idx, i, j, k));
  return Subspace::span(idx.pairs.size(), rows);
}

Vector wedge(const SuperAlgebra& a, std::size_t i, const Vector& v) {
  const PairIndex idx(a);
  Vector out = zero_vector(idx.pairs.size());
  idx.add_wedge(a, out, Scalar(1), i, v);
  return out;
}

Vector wedge(const SuperAlgebra& a, const Vector& u, const Vector& v) {
  const PairIndex idx(a);
  Vector out = zero_vector(idx.pairs.size());
  for (std::size_t i = 0; i < u.size(); ++i) idx.add_wedge(a, out, u[i], i, v);
  return out;
}

}  // namespace chain

MultiplierResult multiplier_homology(const SuperAlgebra& a) {
  require_valid_nilpotent(a, "multiplier_homology");
  const PairIndex idx(a);
  const std::size_t n = a.size();

  std::vector<Vector> d2_rows[2];
  for (const auto& [i, j] : idx.pairs)
    d2_rows[static_cast<int>(pair_parity(a, i, j))].push_back(a.structure(i, j));

  std::vector<Vector> d3_rows[2];
  for (const auto& [i, j, k] : chain::c3_basis(a)) {
    Vector b = chain::boundary3_with(a, idx, i, j, k);
    if (!is_zero(chain::boundary2(a, b)))
      throw HomologyError("multiplier_homology: d2 o d3 != 0 on " + a.basis_names()[i] + "^" +
                          a.basis_names()[j] + "^" + a.basis_names()[k]);
    d3_rows[static_cast<int>(a.parity(i) + a.parity(j) + a.parity(k))].push_back(std::move(b));
  }

  MultiplierResult res;
  res.method = MultiplierMethod::Homology;
  res.tag_count = idx.pairs.size();
  for (Parity par : {Parity::Even, Parity::Odd}) {
    const int p = static_cast<int>(par);
    const std::size_t cycles = d2_rows[p].size() - rank(n, d2_rows[p]);
    const std::size_t bounds = rank(idx.pairs.size(), d3_rows[p]);
    res.relation_rank += bounds;
    res.dim[par] = cycles - bounds;
  }
  return res;
}

GradedDim abelian_multiplier(std::size_t m, std::size_t n) {
  return {(m * m + n * n + n - m) / 2, m * n};
}

GradedDim even_heisenberg_multiplier(std::size_t m, std::size_t n) {
  if (m + n == 0) throw UnsupportedFamily("H(0,0) is not a Heisenberg superalgebra");
  if (m == 0 && n == 1) return {0, 0};
  if (m == 1 && n == 0) return {2, 0};
  return {2 * m * m - m + n * (n + 1) / 2 - 1, 2 * m * n};
}

GradedDim odd_heisenberg_multiplier(std::size_t m) {
  if (m == 0) throw UnsupportedFamily("H_0 is not a Heisenberg superalgebra");
  if (m == 1) return {1, 1};
  return {m * m, m * m - 1};
}

namespace {

GradedDim heisenberg_multiplier(const FamilyDescriptor& core) {
  return core.kind == FamilyKind::EvenHeisenberg ? even_heisenberg_multiplier(core.m, core.n)
                                                 : odd_heisenberg_multiplier(core.m);
}

GradedDim heisenberg_abelianization(const FamilyDescriptor& core) {
  return core.kind == FamilyKind::EvenHeisenberg ? GradedDim{2 * core.m, core.n}
                                                 : GradedDim{core.m, core.m};
}

}  // namespace

MultiplierResult multiplier_formula(const FamilyDescriptor& d) {
  MultiplierResult res;
  res.method = MultiplierMethod::Formula;
  res.family = d.str();
  switch (d.kind) {
    case FamilyKind::Abelian: res.dim = abelian_multiplier(d.m, d.n); break;
    case FamilyKind::EvenHeisenberg:
    case FamilyKind::OddHeisenberg: res.dim = heisenberg_multiplier(d); break;
    case FamilyKind::HeisenbergPlusAbelian: {
      const auto core = d.core_descriptor();
      res.dim = heisenberg_multiplier(core) + abelian_multiplier(d.pad.even, d.pad.odd) +
                tensor(heisenberg_abelianization(core), d.pad);
      break;
    }
    default: throw UnsupportedFamily("no closed multiplier formula for " + d.str());
  }
  return res;
}

MultiplierResult multiplier_direct_sum(const SuperAlgebra& h, const SuperAlgebra& k) {
  auto abelianization = [](const SuperAlgebra& x) {
    auto d = derived(x).dim();
    return GradedDim{x.dim().even - d.even, x.dim().odd - d.odd};
  };
  MultiplierResult res;
  res.method = MultiplierMethod::DirectSum;
  res.dim = multiplier_tags(h).dim + multiplier_tags(k).dim + tensor(abelianization(h), abelianization(k));
  return res;
}

}  // namespace slie
