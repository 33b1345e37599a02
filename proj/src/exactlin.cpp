#include "slie/exactlin.hpp"

#include <utility>

namespace slie {

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n, Scalar(0));
  v.at(k) = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void Matrix::append_row(std::span<const Scalar> v) {
  if (v.size() != cols_)
    throw DimensionError("row length " + std::to_string(v.size()) + " != " +
                         std::to_string(cols_) + " columns");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Vector multiply(std::span<const Scalar> v, const Matrix& m) {
  if (v.size() != m.rows()) throw DimensionError("vector/matrix shape mismatch");
  Vector out = zero_vector(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Scalar inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix form(0, cols);
  for (std::size_t i = 0; i < r; ++i) form.append_row(a.row(i));
  return {std::move(form), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::size_t rank(std::size_t cols, const std::vector<Vector>& rows) {
  return rank(Matrix::from_rows(cols, rows));
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.form(i, n + j);
  return inv;
}

std::optional<Vector> solve_rows(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.cols()) throw DimensionError("right-hand side length mismatch");
  // x A = b  <=>  A^T x^T = b^T; reduce [A^T | b].
  const std::size_t n = a.rows();
  Matrix aug(a.cols(), n + 1);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
    aug(i, n) = b[i];
  }
  auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
  Vector x = zero_vector(n);
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.form(i, n);
  return x;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  auto red = rref(Matrix::from_rows(ambient_dim, vectors));
  s.basis_ = std::move(red.form);
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  Vector out(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Scalar f = out[pivots_[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) out[j] -= f * basis_(r, j);
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return slie::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  const std::size_t cols = m.cols();
  auto red = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.form(r, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(cols, gens);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  auto rows = a.basis_vectors();
  auto more = b.basis_vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  return Subspace::span(a.ambient_dim(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace(n);
  // Solve sum_i s_i a_i - sum_j t_j b_j = 0; columns of the system are basis vectors.
  const std::size_t da = a.dim(), db = b.dim();
  Matrix system(n, da + db);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < da; ++i) system(k, i) = a.basis()(i, k);
    for (std::size_t j = 0; j < db; ++j) system(k, da + j) = -b.basis()(j, k);
  }
  auto ker = kernel(system);
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    Vector v = zero_vector(n);
    for (std::size_t i = 0; i < da; ++i) {
      const Scalar& s = ker.basis()(r, i);
      if (sgn(s) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] += s * a.basis()(i, k);
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

std::vector<Vector> complement(const Subspace& sub, const Subspace& within) {
  if (sub.ambient_dim() != within.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  std::vector<Vector> chosen;
  Subspace acc = sub;
  for (std::size_t r = 0; r < within.dim(); ++r) {
    auto candidate = within.basis().row_vector(r);
    if (acc.contains(candidate)) continue;
    chosen.push_back(candidate);
    acc = sum(acc, Subspace::span(acc.ambient_dim(), {candidate}));
  }
  return chosen;
}

}  // namespace slie
