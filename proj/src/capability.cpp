#include "slie/capability.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "slie/recognize.hpp"

namespace slie {

std::string to_string(CapabilityStatus s) {
  switch (s) {
    case CapabilityStatus::Capable: return "Capable";
    case CapabilityStatus::NonCapable: return "NonCapable";
    case CapabilityStatus::Undetermined: return "Undetermined";
  }
  return "?";
}

namespace {

void require_central(const SuperAlgebra& a, const GradedIdeal& n) {
  if (n.space().ambient_dim() != a.size()) throw DimensionError("ideal belongs to a different algebra");
  if (!center(a).space().contains(n.space()))
    throw std::invalid_argument("epicenter test needs a central ideal");
}

EpicenterTest epicenter_with(const SuperAlgebra& a, const GradedIdeal& n, const GradedDim& m_l) {
  EpicenterTest t;
  t.dim_M_L = m_l;
  t.dim_M_quotient = multiplier_tags(quotient(a, n)).dim;
  t.dim_N_cap_L2 = intersect(n.space(), derived(a).space()).dim();
  t.contained = t.dim_M_quotient.total() == t.dim_M_L.total() + t.dim_N_cap_L2;
  return t;
}

}  // namespace

EpicenterTest epicenter_contains(const SuperAlgebra& a, const GradedIdeal& n) {
  require_central(a, n);
  return epicenter_with(a, n, multiplier_tags(a).dim);
}

bool epicenter_contains_exact(const SuperAlgebra& a, const GradedIdeal& n) {
  require_central(a, n);
  const auto b = chain::boundaries(a);
  for (const auto& v : n.basis_vectors())
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!b.contains(chain::wedge(a, v, unit_vector(a.size(), k)))) return false;
  return true;
}

GradedIdeal epicenter(const SuperAlgebra& a) {
  const auto z = center(a).basis_vectors();
  if (z.empty()) return GradedIdeal::zero(a);
  const auto b = chain::boundaries(a);
  const std::size_t c2 = b.ambient_dim();
  // Row i collects the classes of z_i ^ x_k modulo the boundaries, for all k.
  Matrix classes(z.size(), c2 * a.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) {
      auto r = b.reduce(chain::wedge(a, z[i], unit_vector(a.size(), k)));
      for (std::size_t t = 0; t < c2; ++t) classes(i, k * c2 + t) = r[t];
    }
  auto coeffs = kernel(classes.transpose());
  std::vector<Vector> gens;
  for (const auto& c : coeffs.basis_vectors()) {
    Vector v = zero_vector(a.size());
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t l = 0; l < a.size(); ++l) v[l] += c[i] * z[i][l];
    gens.push_back(std::move(v));
  }
  return GradedIdeal(a, gens);
}

std::optional<GradedIdeal> witness_search(const SuperAlgebra& a, std::size_t grid_bound) {
  const auto m_l = multiplier_tags(a).dim;
  const auto z = center(a);
  auto contained = [&](const GradedIdeal& n) { return epicenter_with(a, n, m_l).contained; };

  for (const auto& v : z.basis_vectors()) {
    GradedIdeal ray(a, {v});
    if (contained(ray)) return ray;
  }

  const long bound = static_cast<long>(grid_bound);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto basis = z.part(p);
    const std::size_t r = basis.size();
    if (r < 2 || bound == 0) continue;
    std::set<std::vector<long>> seen;
    std::vector<long> c(r, -bound);
    while (true) {
      std::vector<long> norm = c;
      long g = 0;
      for (long x : norm) g = std::gcd(g, std::labs(x));
      if (g != 0) {
        long lead = 0;
        for (long x : norm)
          if (x != 0) {
            lead = x;
            break;
          }
        const long scale = lead < 0 ? -g : g;
        for (auto& x : norm) x /= scale;
        const bool is_ray = std::count_if(norm.begin(), norm.end(), [](long x) { return x != 0; }) == 1;
        if (!is_ray && seen.insert(norm).second) {
          Vector v = zero_vector(a.size());
          for (std::size_t i = 0; i < r; ++i)
            for (std::size_t l = 0; l < a.size(); ++l) v[l] += Scalar(norm[i]) * basis[i][l];
          GradedIdeal line(a, {v});
          if (contained(line)) return line;
        }
      }
      std::size_t pos = 0;
      while (pos < r && c[pos] == bound) c[pos++] = -bound;
      if (pos == r) break;
      ++c[pos];
    }
  }

  auto meet = intersect(derived(a).space(), z.space());
  if (meet.dim() > 1) {
    GradedIdeal whole(a, meet);
    if (contained(whole)) return whole;
  }
  return std::nullopt;
}

std::size_t default_grid_bound() {
  if (const char* env = std::getenv("SLIE_GRID_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<std::size_t>(v);
  }
  return 2;
}

namespace {

std::vector<std::size_t> series_dims(const LowerCentralSeries& lcs) {
  std::vector<std::size_t> out;
  for (const auto& t : lcs.terms) out.push_back(t.dim().total());
  return out;
}

// dim of {x : [x, L^2] = 0}
std::size_t centralizer_of_derived(const SuperAlgebra& a) {
  const auto w = derived(a).basis_vectors();
  const std::size_t n = a.size();
  Matrix system(n * w.size(), n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t t = 0; t < w.size(); ++t) {
      auto v = a.bracket_basis(c, w[t]);
      for (std::size_t k = 0; k < n; ++k) system(t * n + k, c) = v[k];
    }
  return kernel(system).dim();
}

// Five-dimensional nilpotent Lie algebras whose capability is imported as data,
// identified by lower central series dims, center and centralizer of L^2.
std::optional<std::string> five_dim_capable_label(const SuperAlgebra& e, const LowerCentralSeries& lcs) {
  if (e.size() != 5) return std::nullopt;
  const auto dims = series_dims(lcs);
  using D = std::vector<std::size_t>;
  if (dims == D{5, 2, 0}) return "L5,8";
  if (dims == D{5, 2, 1, 0} && center(e).dim().total() == 1) return "L5,5";
  if (dims == D{5, 3, 2, 0}) return "L5,9";
  if (dims == D{5, 3, 2, 1, 0}) return centralizer_of_derived(e) == 3 ? "L5,6" : "L5,7";
  return std::nullopt;
}

}  // namespace

PartialCapability partial_capability(const SuperAlgebra& a) {
  const auto e = even_part(a);
  PartialCapability pc;
  auto decided = [&](bool capable, std::string rule, std::string notes = {}) {
    pc.status = capable ? CapabilityStatus::Capable : CapabilityStatus::NonCapable;
    pc.rule = std::move(rule);
    pc.notes = std::move(notes);
    return pc;
  };

  if (!validate(e).empty()) {
    pc.rule = "even-part-invalid";
    return pc;
  }
  const auto lcs = lower_central_series(e);
  if (!lcs.nilpotency_class) {
    pc.rule = "even-part-not-nilpotent";
    return pc;
  }
  const std::size_t dim = e.size();
  if (dim == 0) return decided(true, "even-zero");
  if (e.is_abelian())
    return decided(dim >= 2, "even-abelian", "even part A(" + std::to_string(dim) + "|0)");

  const std::size_t d2 = derived(e).dim().total();
  if (d2 == 1) {
    const auto f = recognize(e);
    const auto core = f.core_descriptor();
    return decided(core == FamilyDescriptor::even_heisenberg(1, 0), "even-heisenberg-plus-abelian",
                   "even part " + f.str());
  }
  if (auto label = five_dim_capable_label(e, lcs))
    return decided(true, "even-five-dim-table", "even part " + *label);
  if (*lcs.nilpotency_class == 2 && d2 == 2 && (dim < 5 || dim > 7))
    return decided(false, "even-class-two-bound",
                   "class two with dim L^2 = 2 needs 5 <= dim <= 7 (dim L^2 = 2 hypothesis reconstructed)");
  pc.rule = "even-part-uncovered";
  return pc;
}

namespace {

std::string ideal_str(const SuperAlgebra& a, const GradedSubspace& s) {
  if (s.space().is_zero()) return "0";
  std::string out;
  for (const auto& v : s.basis_vectors()) {
    if (!out.empty()) out += "; ";
    out += format_vector(a, v);
  }
  return "<" + out + ">";
}

void append_note(std::string& notes, const std::string& more) {
  if (more.empty()) return;
  if (!notes.empty()) notes += "; ";
  notes += more;
}

}  // namespace

CapabilityVerdict capability_verdict(const SuperAlgebra& a, std::size_t grid_bound) {
  CapabilityVerdict v;
  auto capable = [&](std::string rule, std::string notes = {}) {
    v.status = CapabilityStatus::Capable;
    v.rule = std::move(rule);
    append_note(v.notes, notes);
  };

  const auto violations = validate(a);
  const bool nilpotent = violations.empty() && is_nilpotent(a);
  if (!nilpotent) {
    const auto pc = partial_capability(a);
    const std::string why = violations.empty()
                                ? std::string("algebra is not nilpotent")
                                : "algebra fails validation (" + violations.front().axiom + ": " +
                                      violations.front().detail + ")";
    if (pc.status == CapabilityStatus::NonCapable) {
      v.status = CapabilityStatus::NonCapable;
      v.rule = "not-partially-capable";
      append_note(v.notes, why + "; decided on the even part alone");
      append_note(v.notes, pc.rule + ": " + pc.notes);
      return v;
    }
    if (violations.empty()) throw NotNilpotent("capability_verdict: " + a.name() + " is not nilpotent");
    throw AlgebraError("capability_verdict: " + a.name() + ": " + why);
  }

  // Emits NonCapable only if the dimension criterion confirms the witness.
  auto noncapable = [&](const GradedIdeal& w, std::string rule, std::string notes = {}) {
    if (!epicenter_contains(a, w).contained) {
      append_note(v.notes, rule + " witness " + ideal_str(a, w) + " rejected by the dimension criterion");
      return false;
    }
    v.status = CapabilityStatus::NonCapable;
    v.rule = std::move(rule);
    v.witness = w;
    append_note(v.notes, notes);
    return true;
  };

  const auto exact = epicenter(a);
  v.cross_check = "exact epicenter " + exact.dim().str() + " -> " +
                  (exact.space().is_zero() ? "Capable" : "NonCapable");

  auto finish = [&]() {
    if (v.status == CapabilityStatus::Undetermined) return v;
    const bool exact_capable = exact.space().is_zero();
    if (exact_capable != (v.status == CapabilityStatus::Capable))
      append_note(v.notes, "exact epicenter disagrees with rule " + v.rule);
    return v;
  };

  const auto family = recognize(a);
  const auto l2 = derived(a);
  switch (family.kind) {
    case FamilyKind::Abelian: {
      const bool ok = (family.m == 0 && family.n == 1) || family.m + family.n >= 2;
      if (a.size() == 0) {
        capable("zero-algebra");
        return finish();
      }
      if (ok) {
        capable("abelian", family.str());
        return finish();
      }
      if (noncapable(GradedIdeal(a, Subspace::full(a.size())), "abelian", family.str())) return finish();
      break;
    }
    case FamilyKind::EvenHeisenberg:
      if (family.m == 1 && family.n == 0) {
        capable("heisenberg-even-m1n0", family.str());
        return finish();
      }
      if (noncapable(l2, "heisenberg-even", family.str())) return finish();
      break;
    case FamilyKind::OddHeisenberg:
      if (family.m == 1) {
        capable("heisenberg-odd-m1", family.str());
        return finish();
      }
      if (noncapable(l2, "heisenberg-odd", family.str())) return finish();
      break;
    case FamilyKind::HeisenbergPlusAbelian: {
      const auto core = family.core_descriptor();
      if (core == FamilyDescriptor::even_heisenberg(1, 0) || core == FamilyDescriptor::odd_heisenberg(1)) {
        capable("heisenberg-plus-abelian", family.str());
        return finish();
      }
      if (noncapable(l2, "heisenberg-plus-abelian", family.str())) return finish();
      break;
    }
    default: break;
  }

  const auto pc = partial_capability(a);
  if (pc.status == CapabilityStatus::NonCapable) {
    v.status = CapabilityStatus::NonCapable;
    v.rule = "not-partially-capable";
    append_note(v.notes, pc.rule + ": " + pc.notes);
    return finish();
  }

  const auto lcs = lower_central_series(a);
  const auto z = center(a);
  if (*lcs.nilpotency_class == 2) {
    const long r = static_cast<long>(a.dim().even - z.dim().even);
    const long s = static_cast<long>(a.dim().odd - z.dim().odd);
    const long target = ((r + s) * (r + s) + (s - r)) / 2;
    if (static_cast<long>(l2.dim().total()) == target) {
      capable("class-two-dimension",
              "dim L/Z(L) = " + GradedDim{a.dim().even - z.dim().even, a.dim().odd - z.dim().odd}.str() +
                  ", dim L^2 = " + std::to_string(target));
      return finish();
    }
  }

  if (auto w = witness_search(a, grid_bound)) {
    noncapable(*w, "epicenter-witness");
    return finish();
  }

  if (z.dim().even <= 1 && z.dim().odd <= 1) {
    capable("exhaustive-exclusion", "no homogeneous central ray lies in the epicenter");
    return finish();
  }

  if (exact.space().is_zero()) {
    capable("exact-epicenter", "N ^ L is not contained in im d3 for any nonzero central N");
    return finish();
  }
  if (noncapable(exact, "exact-epicenter")) return finish();
  v.status = CapabilityStatus::Undetermined;
  v.rule = "undetermined";
  return v;
}

}  // namespace slie
