#pragma once

// Lie superalgebras given by structure constants on a homogeneous basis.
//
// The basis is ordered with the even elements first. The bracket table keeps
// every ordered pair (i, j); graded skew-symmetry is checked by validate()
// rather than assumed by the storage.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slie/exactlin.hpp"

namespace slie {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

/// (-1)^{|a||b|}
inline int koszul_sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

struct GradedDim {
  std::size_t even = 0;
  std::size_t odd = 0;

  std::size_t total() const { return even + odd; }
  std::size_t& operator[](Parity p) { return p == Parity::Even ? even : odd; }
  std::size_t operator[](Parity p) const { return p == Parity::Even ? even : odd; }

  GradedDim& operator+=(const GradedDim& o) {
    even += o.even;
    odd += o.odd;
    return *this;
  }
  friend GradedDim operator+(GradedDim a, const GradedDim& b) { return a += b; }
  bool operator==(const GradedDim&) const = default;

  std::string str() const;  // "(even|odd)"
};

/// Graded tensor product dimension of two superspaces.
GradedDim tensor(const GradedDim& a, const GradedDim& b);

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotNilpotent : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class SuperAlgebra {
 public:
  struct Entry {
    std::size_t i;
    std::size_t j;
    Vector value;
  };

  SuperAlgebra() = default;
  /// Algebra with all brackets zero.
  SuperAlgebra(std::string name, std::vector<std::string> even_names,
               std::vector<std::string> odd_names);

  /// Sets [x_i, x_j] and fills [x_j, x_i] by graded skew-symmetry.
  static SuperAlgebra from_brackets(std::string name, std::vector<std::string> even_names,
                                    std::vector<std::string> odd_names,
                                    const std::vector<Entry>& entries);

  /// Copy with the single ordered entry (i, j) replaced; no mirror fill.
  SuperAlgebra with_raw_entry(std::size_t i, std::size_t j, Vector value) const;
  SuperAlgebra renamed(std::string name) const;

  const std::string& name() const { return name_; }
  const GradedDim& dim() const { return dim_; }
  std::size_t size() const { return dim_.total(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  Parity parity(std::size_t i) const { return i < dim_.even ? Parity::Even : Parity::Odd; }
  std::optional<std::size_t> index_of(const std::string& basis_name) const;

  const Vector& structure(std::size_t i, std::size_t j) const { return table_[i * size() + j]; }
  /// Bilinear extension of the structure table.
  Vector bracket(const Vector& u, const Vector& v) const;
  /// [x_i, v]
  Vector bracket_basis(std::size_t i, const Vector& v) const;

  bool is_abelian() const;
  bool operator==(const SuperAlgebra&) const = default;

 private:
  std::string name_;
  GradedDim dim_;
  std::vector<std::string> names_;
  std::vector<Vector> table_;
};

/// Parity of a vector's support: nullopt for zero or mixed vectors.
std::optional<Parity> homogeneous_parity(const SuperAlgebra& a, std::span<const Scalar> v);

struct Violation {
  std::string axiom;  // "grading", "skew-symmetry", "jacobi"
  std::vector<std::size_t> basis;  // 1-based indices of the offending tuple
  std::string detail;
};

std::vector<Violation> validate(const SuperAlgebra& a);

/// Graded subspace carried with its per-parity dimensions. The canonical RREF
/// rows of a graded subspace are homogeneous since even coordinates come first.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  /// Throws AlgebraError when the span is not Z2-graded.
  GradedSubspace(const SuperAlgebra& a, const std::vector<Vector>& spanning);
  GradedSubspace(const SuperAlgebra& a, Subspace space);

  const Subspace& space() const { return space_; }
  const GradedDim& dim() const { return dim_; }
  std::vector<Vector> basis_vectors() const { return space_.basis_vectors(); }
  /// Canonical basis rows of one parity.
  std::vector<Vector> part(Parity p) const;

  bool operator==(const GradedSubspace&) const = default;

 private:
  Subspace space_;
  GradedDim dim_;
  std::vector<Parity> row_parity_;
};

/// Graded ideal of a specific algebra. Construction checks homogeneity and [I, L] in I.
class GradedIdeal : public GradedSubspace {
 public:
  GradedIdeal() = default;
  GradedIdeal(const SuperAlgebra& a, const std::vector<Vector>& spanning);
  GradedIdeal(const SuperAlgebra& a, Subspace space);

  static GradedIdeal zero(const SuperAlgebra& a) { return GradedIdeal(a, Subspace(a.size())); }
};

bool is_ideal(const SuperAlgebra& a, const Subspace& s);

GradedIdeal derived(const SuperAlgebra& a);
GradedIdeal center(const SuperAlgebra& a);

struct LowerCentralSeries {
  std::vector<GradedIdeal> terms;  // L^1, L^2, ... ending at the first zero or repeated term
  std::optional<std::size_t> nilpotency_class;  // nullopt: not nilpotent
};

LowerCentralSeries lower_central_series(const SuperAlgebra& a);
bool is_nilpotent(const SuperAlgebra& a);

/// L/N on the pivot-greedy complement of N in the standard basis.
SuperAlgebra quotient(const SuperAlgebra& a, const GradedIdeal& n);
/// Even parts first (h then k), then odd parts; clashing names of k get a suffix.
SuperAlgebra direct_sum(const SuperAlgebra& h, const SuperAlgebra& k);
SuperAlgebra even_part(const SuperAlgebra& a);
SuperAlgebra abelian(std::size_t even, std::size_t odd);

/// Rewrites the algebra in the basis f_i = sum_k P(i,k) x_k. P must be
/// invertible and block-diagonal with respect to parity.
SuperAlgebra change_basis(const SuperAlgebra& a, const Matrix& p);

/// "x1 + 1/2 x3" style rendering of a coefficient vector.
std::string format_vector(const SuperAlgebra& a, std::span<const Scalar> v);

}  // namespace slie
