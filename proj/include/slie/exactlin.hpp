#pragma once

// Exact rational linear algebra: dense matrices over Q, canonical row
// reduction, kernels, linear solves and subspace arithmetic.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace slie {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(std::span<const Scalar> v);
std::string to_string(const Scalar& s);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// All rows must have length `cols`.
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const;
  std::vector<Vector> row_vectors() const;

  void append_row(std::span<const Scalar> v);
  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;

  bool operator==(const Matrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row vector times matrix.
Vector multiply(std::span<const Scalar> v, const Matrix& m);

struct RrefResult {
  Matrix form;  // nonzero rows only
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Canonical reduced row echelon form; zero rows are dropped.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::size_t rank(std::size_t cols, const std::vector<Vector>& rows);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Solves x * A = b for a row vector x (b in the row space of A).
std::optional<Vector> solve_rows(const Matrix& a, std::span<const Scalar> b);

/// A subspace of Q^n held by its canonical RREF basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// v minus its projection along the basis onto the pivot coordinates; zero iff v is in the span.
  Vector reduce(std::span<const Scalar> v) const;

  bool operator==(const Subspace& rhs) const = default;

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space {x : m x = 0}.
Subspace kernel(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Pivot-greedy extension: rows of `within`'s canonical basis, lowest first,
/// that are independent of `sub` and of the rows already chosen.
std::vector<Vector> complement(const Subspace& sub, const Subspace& within);

}  // namespace slie
