#include "slie/superalg.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>
#include <utility>

namespace slie {

std::string GradedDim::str() const {
  return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
}

GradedDim tensor(const GradedDim& a, const GradedDim& b) {
  return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
}

SuperAlgebra::SuperAlgebra(std::string name, std::vector<std::string> even_names,
                           std::vector<std::string> odd_names)
    : name_(std::move(name)), dim_{even_names.size(), odd_names.size()} {
  names_ = std::move(even_names);
  names_.insert(names_.end(), odd_names.begin(), odd_names.end());
  std::unordered_set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw AlgebraError("duplicate basis name '" + n + "'");
  table_.assign(size() * size(), zero_vector(size()));
}

SuperAlgebra SuperAlgebra::from_brackets(std::string name, std::vector<std::string> even_names,
                                         std::vector<std::string> odd_names,
                                         const std::vector<Entry>& entries) {
  SuperAlgebra a(std::move(name), std::move(even_names), std::move(odd_names));
  const std::size_t n = a.size();
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n || e.value.size() != n)
      throw DimensionError("bracket entry out of range");
    const int sign = -koszul_sign(a.parity(e.i), a.parity(e.j));
    a.table_[e.i * n + e.j] = e.value;
    Vector mirror = e.value;
    for (auto& c : mirror) c *= sign;
    a.table_[e.j * n + e.i] = std::move(mirror);
  }
  return a;
}

SuperAlgebra SuperAlgebra::with_raw_entry(std::size_t i, std::size_t j, Vector value) const {
  if (i >= size() || j >= size() || value.size() != size())
    throw DimensionError("bracket entry out of range");
  SuperAlgebra copy = *this;
  copy.table_[i * size() + j] = std::move(value);
  return copy;
}

SuperAlgebra SuperAlgebra::renamed(std::string name) const {
  SuperAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::optional<std::size_t> SuperAlgebra::index_of(const std::string& basis_name) const {
  auto it = std::find(names_.begin(), names_.end(), basis_name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Vector SuperAlgebra::bracket(const Vector& u, const Vector& v) const {
  if (u.size() != size() || v.size() != size())
    throw DimensionError("bracket operands must have length " + std::to_string(size()));
  Vector out = zero_vector(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < size(); ++j) {
      if (sgn(v[j]) == 0) continue;
      const Scalar f = u[i] * v[j];
      const auto& t = structure(i, j);
      for (std::size_t k = 0; k < size(); ++k)
        if (sgn(t[k]) != 0) out[k] += f * t[k];
    }
  }
  return out;
}

Vector SuperAlgebra::bracket_basis(std::size_t i, const Vector& v) const {
  return bracket(unit_vector(size(), i), v);
}

bool SuperAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const Vector& v) { return is_zero(v); });
}

std::optional<Parity> homogeneous_parity(const SuperAlgebra& a, std::span<const Scalar> v) {
  bool has_even = false, has_odd = false;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    (a.parity(k) == Parity::Even ? has_even : has_odd) = true;
  }
  if (has_even == has_odd) return std::nullopt;
  return has_even ? Parity::Even : Parity::Odd;
}

namespace {

std::string tuple_str(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + ")";
}

}  // namespace

std::vector<Violation> validate(const SuperAlgebra& a) {
  std::vector<Violation> out;
  const std::size_t n = a.size();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Parity target = a.parity(i) + a.parity(j);
      const auto& t = a.structure(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(t[k]) != 0 && a.parity(k) != target) {
          out.push_back({"grading", {i + 1, j + 1},
                         "[" + a.basis_names()[i] + "," + a.basis_names()[j] + "] has a component on " +
                             a.basis_names()[k] + " of the wrong parity"});
          break;
        }
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const int sign = -koszul_sign(a.parity(i), a.parity(j));
      const auto& tij = a.structure(i, j);
      const auto& tji = a.structure(j, i);
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) ok = (tji[k] == sign * tij[k]);
      if (!ok)
        out.push_back({"skew-symmetry", {j + 1, i + 1},
                       "[" + a.basis_names()[j] + "," + a.basis_names()[i] +
                           "] disagrees with graded skew-symmetry"});
    }

  std::set<std::array<std::size_t, 3>> reported;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Parity px = a.parity(x), py = a.parity(y), pz = a.parity(z);
        Vector sum = zero_vector(n);
        auto accumulate = [&](int sign, std::size_t u, std::size_t v, std::size_t w) {
          auto inner = a.bracket_basis(u, a.structure(v, w));
          for (std::size_t k = 0; k < n; ++k) sum[k] += sign * inner[k];
        };
        accumulate(koszul_sign(px, pz), x, y, z);
        accumulate(koszul_sign(py, px), y, z, x);
        accumulate(koszul_sign(pz, py), z, x, y);
        if (is_zero(sum)) continue;
        std::array<std::size_t, 3> key{x, y, z};
        std::sort(key.begin(), key.end());
        if (!reported.insert(key).second) continue;
        out.push_back({"jacobi", {x + 1, y + 1, z + 1},
                       "graded Jacobi sum on " + tuple_str({x, y, z}) + " is " + format_vector(a, sum)});
      }
  return out;
}

GradedSubspace::GradedSubspace(const SuperAlgebra& a, const std::vector<Vector>& spanning)
    : GradedSubspace(a, Subspace::span(a.size(), spanning)) {}

GradedSubspace::GradedSubspace(const SuperAlgebra& a, Subspace space) : space_(std::move(space)) {
  if (space_.ambient_dim() != a.size()) throw DimensionError("subspace ambient dimension mismatch");
  for (std::size_t r = 0; r < space_.dim(); ++r) {
    auto p = homogeneous_parity(a, space_.basis().row(r));
    if (!p) throw AlgebraError("subspace is not Z2-graded (mixed-parity basis row)");
    row_parity_.push_back(*p);
    ++dim_[*p];
  }
}

std::vector<Vector> GradedSubspace::part(Parity p) const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < space_.dim(); ++r)
    if (row_parity_[r] == p) out.push_back(space_.basis().row_vector(r));
  return out;
}

bool is_ideal(const SuperAlgebra& a, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r) {
    auto v = s.basis().row_vector(r);
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!s.contains(a.bracket(v, unit_vector(a.size(), k)))) return false;
  }
  return true;
}

GradedIdeal::GradedIdeal(const SuperAlgebra& a, const std::vector<Vector>& spanning)
    : GradedIdeal(a, Subspace::span(a.size(), spanning)) {}

GradedIdeal::GradedIdeal(const SuperAlgebra& a, Subspace space) : GradedSubspace(a, std::move(space)) {
  if (!is_ideal(a, this->space())) throw AlgebraError("subspace is not an ideal");
}

GradedIdeal derived(const SuperAlgebra& a) {
  std::vector<Vector> values;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      if (!is_zero(a.structure(i, j))) values.push_back(a.structure(i, j));
  return GradedIdeal(a, values);
}

GradedIdeal center(const SuperAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<Vector> gens;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i)
      if (a.parity(i) == p) cols.push_back(i);
    if (cols.empty()) continue;
    Matrix system(n * n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& t = a.structure(cols[c], j);
        for (std::size_t k = 0; k < n; ++k) system(j * n + k, c) = t[k];
      }
    auto ker = kernel(system);
    for (std::size_t r = 0; r < ker.dim(); ++r) {
      Vector v = zero_vector(n);
      for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = ker.basis()(r, c);
      gens.push_back(std::move(v));
    }
  }
  return GradedIdeal(a, gens);
}

LowerCentralSeries lower_central_series(const SuperAlgebra& a) {
  LowerCentralSeries lcs;
  lcs.terms.push_back(GradedIdeal(a, Subspace::full(a.size())));
  while (true) {
    const auto& current = lcs.terms.back();
    if (current.space().is_zero()) {
      lcs.nilpotency_class = lcs.terms.size() - 1;
      return lcs;
    }
    std::vector<Vector> values;
    for (const auto& v : current.basis_vectors())
      for (std::size_t k = 0; k < a.size(); ++k) {
        auto w = a.bracket(v, unit_vector(a.size(), k));
        if (!is_zero(w)) values.push_back(std::move(w));
      }
    GradedIdeal next(a, values);
    if (next.space() == current.space()) return lcs;  // stabilized above zero
    lcs.terms.push_back(std::move(next));
  }
}

bool is_nilpotent(const SuperAlgebra& a) { return lower_central_series(a).nilpotency_class.has_value(); }

SuperAlgebra quotient(const SuperAlgebra& a, const GradedIdeal& n) {
  if (n.space().ambient_dim() != a.size()) throw DimensionError("ideal belongs to a different algebra");
  GradedIdeal checked(a, n.space());  // re-validates ideal and homogeneity against `a`
  auto chosen = complement(checked.space(), Subspace::full(a.size()));
  std::vector<std::size_t> keep;
  for (const auto& e : chosen)
    for (std::size_t k = 0; k < e.size(); ++k)
      if (sgn(e[k]) != 0) keep.push_back(k);

  std::vector<std::string> even_names, odd_names;
  for (auto k : keep)
    (a.parity(k) == Parity::Even ? even_names : odd_names).push_back(a.basis_names()[k]);

  Matrix coords(0, a.size());
  for (const auto& e : chosen) coords.append_row(e);
  for (const auto& v : checked.basis_vectors()) coords.append_row(v);

  const std::size_t r = keep.size();
  std::vector<SuperAlgebra::Entry> entries;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      const auto& w = a.structure(keep[i], keep[j]);
      if (is_zero(w)) continue;
      auto x = solve_rows(coords, w);
      Vector value(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(r));
      if (!is_zero(value)) entries.push_back({i, j, std::move(value)});
    }
  return SuperAlgebra::from_brackets(a.name() + "/N", std::move(even_names), std::move(odd_names),
                                     entries);
}

SuperAlgebra direct_sum(const SuperAlgebra& h, const SuperAlgebra& k) {
  std::unordered_set<std::string> used(h.basis_names().begin(), h.basis_names().end());
  std::vector<std::string> k_names;
  for (const auto& name : k.basis_names()) {
    std::string candidate = name;
    for (int suffix = 2; used.count(candidate) != 0; ++suffix) candidate = name + "_" + std::to_string(suffix);
    used.insert(candidate);
    k_names.push_back(candidate);
  }

  // position of each summand basis element in the sum
  const std::size_t he = h.dim().even, ke = k.dim().even;
  std::vector<std::size_t> hpos(h.size()), kpos(k.size());
  for (std::size_t i = 0; i < h.size(); ++i) hpos[i] = i < he ? i : ke + i;
  for (std::size_t i = 0; i < k.size(); ++i) kpos[i] = i < ke ? he + i : h.size() + i;

  std::vector<std::string> even_names, odd_names;
  for (std::size_t i = 0; i < he; ++i) even_names.push_back(h.basis_names()[i]);
  for (std::size_t i = 0; i < ke; ++i) even_names.push_back(k_names[i]);
  for (std::size_t i = he; i < h.size(); ++i) odd_names.push_back(h.basis_names()[i]);
  for (std::size_t i = ke; i < k.size(); ++i) odd_names.push_back(k_names[i]);

  const std::size_t n = h.size() + k.size();
  std::vector<SuperAlgebra::Entry> entries;
  auto embed = [&](const SuperAlgebra& s, const std::vector<std::size_t>& pos) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i; j < s.size(); ++j) {
        const auto& t = s.structure(i, j);
        if (is_zero(t)) continue;
        Vector v = zero_vector(n);
        for (std::size_t c = 0; c < s.size(); ++c) v[pos[c]] = t[c];
        entries.push_back({pos[i], pos[j], std::move(v)});
      }
  };
  embed(h, hpos);
  embed(k, kpos);
  return SuperAlgebra::from_brackets(h.name() + "+" + k.name(), std::move(even_names),
                                     std::move(odd_names), entries);
}

SuperAlgebra even_part(const SuperAlgebra& a) {
  const std::size_t m = a.dim().even;
  std::vector<std::string> names(a.basis_names().begin(), a.basis_names().begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<SuperAlgebra::Entry> entries;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& t = a.structure(i, j);
      Vector v(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(m));
      if (!is_zero(v)) entries.push_back({i, j, std::move(v)});
    }
  return SuperAlgebra::from_brackets(a.name() + "_even", std::move(names), {}, entries);
}

SuperAlgebra abelian(std::size_t even, std::size_t odd) {
  std::vector<std::string> e, o;
  for (std::size_t i = 1; i <= even; ++i) e.push_back("a" + std::to_string(i));
  for (std::size_t i = 1; i <= odd; ++i) o.push_back("b" + std::to_string(i));
  return SuperAlgebra("A(" + std::to_string(even) + "|" + std::to_string(odd) + ")", std::move(e),
                      std::move(o));
}

SuperAlgebra change_basis(const SuperAlgebra& a, const Matrix& p) {
  const std::size_t n = a.size();
  if (p.rows() != n || p.cols() != n) throw DimensionError("basis change must be square of algebra size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a.parity(i) != a.parity(k) && sgn(p(i, k)) != 0)
        throw AlgebraError("basis change mixes parities");
  auto inv = inverse(p);
  if (!inv) throw AlgebraError("basis change is singular");

  std::vector<Vector> rows = p.row_vectors();
  std::vector<SuperAlgebra::Entry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto w = a.bracket(rows[i], rows[j]);
      if (is_zero(w)) continue;
      entries.push_back({i, j, multiply(w, *inv)});
    }
  std::vector<std::string> even(a.basis_names().begin(), a.basis_names().begin() + static_cast<std::ptrdiff_t>(a.dim().even));
  std::vector<std::string> odd(a.basis_names().begin() + static_cast<std::ptrdiff_t>(a.dim().even), a.basis_names().end());
  return SuperAlgebra::from_brackets(a.name(), std::move(even), std::move(odd), entries);
}

std::string format_vector(const SuperAlgebra& a, std::span<const Scalar> v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    if (!out.empty()) out += " + ";
    if (v[k] != 1) out += v[k].get_str() + " ";
    out += a.basis_names()[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace slie
