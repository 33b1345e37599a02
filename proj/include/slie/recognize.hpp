#pragma once

// Family recognition by rank invariants. Over C the isomorphism class of an
// algebra with one-dimensional derived algebra is fixed by these ranks, so
// recognition reports descriptors and never an explicit isomorphism.

#include <cstddef>
#include <string>

#include "slie/superalg.hpp"

namespace slie {

enum class FamilyKind {
  Abelian,                // A(m|n)
  EvenHeisenberg,         // H(m,n), even center, dim (2m+1|n)
  OddHeisenberg,          // H_m, odd center, dim (m|m+1)
  HeisenbergPlusAbelian,  // H(m,n) + A(pad) or H_m + A(pad), pad nonzero
  GeneralizedHeisenberg,  // L^2 = Z(L), rank (r|s) with r+s >= 2
  None,
};

struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::None;
  std::size_t m = 0;
  std::size_t n = 0;
  FamilyKind core = FamilyKind::None;  // HeisenbergPlusAbelian only
  GradedDim pad;                       // HeisenbergPlusAbelian only
  GradedDim rank;                      // GeneralizedHeisenberg only

  static FamilyDescriptor abelian(std::size_t m, std::size_t n);
  static FamilyDescriptor even_heisenberg(std::size_t m, std::size_t n);
  static FamilyDescriptor odd_heisenberg(std::size_t m);
  /// Collapses to the core when the pad is zero.
  static FamilyDescriptor heisenberg_plus_abelian(const FamilyDescriptor& core, GradedDim pad);
  static FamilyDescriptor generalized_heisenberg(GradedDim rank);
  static FamilyDescriptor none() { return {}; }

  /// The Heisenberg summand of a HeisenbergPlusAbelian descriptor, or itself.
  FamilyDescriptor core_descriptor() const;
  /// Superdimension of the described algebra (not defined for GeneralizedHeisenberg/None).
  GradedDim dim() const;
  std::string str() const;

  bool operator==(const FamilyDescriptor&) const = default;
};

FamilyDescriptor recognize(const SuperAlgebra& a);

/// Canonical-basis algebra for a family. Throws std::invalid_argument for
/// None, GeneralizedHeisenberg and inconsistent parameters (H(0,0), H_0).
SuperAlgebra build_canonical(const FamilyDescriptor& d);

struct ClassTwoSplit {
  GradedDim heisenberg_part;
  GradedDim abelian_pad;
};

/// Splits a central complement of L^2 in Z(L) off as an abelian summand.
ClassTwoSplit class_two_decompose(const SuperAlgebra& a);

}  // namespace slie
