#pragma once

// Schur multiplier M(L) = H_2(L) of a nilpotent Lie superalgebra.
//
// Tag method: a free central extension by tags m(i,j) over the graded
// symmetric square of the basis, minus the tags absorbed by a basis of L^2,
// minus the relations forced by the graded Jacobi identity in the cover.
// Homology method: dim ker d2 - rank d3 on the Chevalley-Eilenberg complex.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "slie/recognize.hpp"
#include "slie/superalg.hpp"

namespace slie {

enum class MultiplierMethod { Tags, Homology, Formula, DirectSum };
std::string to_string(MultiplierMethod m);

class HomologyError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class UnsupportedFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator m(i,j), 0-based, i <= j; i == j only for odd basis vectors.
struct Tag {
  std::size_t i;
  std::size_t j;
  Parity parity;
};

struct TagPresentation {
  std::vector<Tag> tags;                // lexicographic pair order
  std::vector<std::size_t> absorbed;    // tag positions spanning the L^2 direction
  std::vector<Vector> relations;        // Jacobi relations over all tags, nonzero only
  std::vector<std::array<std::size_t, 3>> relation_triples;  // 0-based i <= j <= k
};

TagPresentation tag_presentation(const SuperAlgebra& a);

/// "m(i,j)" positioned label, e.g. "m2[x1,x3]", using the algebra's basis names.
std::string tag_label(const SuperAlgebra& a, const TagPresentation& p, std::size_t t);

struct MultiplierResult {
  GradedDim dim;
  MultiplierMethod method = MultiplierMethod::Tags;
  std::size_t tag_count = 0;
  std::size_t relation_rank = 0;
  std::vector<std::string> absorbed;         // tag labels
  std::vector<std::size_t> free_tags;        // tag positions, lowest-first greedy
  std::vector<std::string> free_generators;  // tag labels
  std::string family;                        // formula route only
};

MultiplierResult multiplier_tags(const SuperAlgebra& a);
MultiplierResult multiplier_homology(const SuperAlgebra& a);
MultiplierResult multiplier_formula(const FamilyDescriptor& d);
/// M(H + K) = M(H) + M(K) + (H/H^2 (x) K/K^2).
MultiplierResult multiplier_direct_sum(const SuperAlgebra& h, const SuperAlgebra& k);

GradedDim abelian_multiplier(std::size_t m, std::size_t n);
GradedDim even_heisenberg_multiplier(std::size_t m, std::size_t n);
GradedDim odd_heisenberg_multiplier(std::size_t m);

namespace chain {

/// Basis of C_2: pairs i <= j, no repeated even index.
std::vector<std::array<std::size_t, 2>> c2_basis(const SuperAlgebra& a);
/// Basis of C_3: triples i <= j <= k, no repeated even index.
std::vector<std::array<std::size_t, 3>> c3_basis(const SuperAlgebra& a);
/// d3(x_i ^ x_j ^ x_k) for any ordered triple, in c2_basis coordinates.
Vector boundary3(const SuperAlgebra& a, std::size_t i, std::size_t j, std::size_t k);
/// d2 on a C_2 vector.
Vector boundary2(const SuperAlgebra& a, const Vector& c2);
/// Image of d3 as a subspace of C_2 (cycles of the form boundaries).
Subspace boundaries(const SuperAlgebra& a);
/// Coordinates of x_i ^ v in c2_basis, v any vector of L.
Vector wedge(const SuperAlgebra& a, std::size_t i, const Vector& v);
Vector wedge(const SuperAlgebra& a, const Vector& u, const Vector& v);

}  // namespace chain

}  // namespace slie
