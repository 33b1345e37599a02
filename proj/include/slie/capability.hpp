#pragma once

// Epicenter membership and capability.
//
// Primary test: N (central) lies in Z*(L) iff dim M(L/N) = dim M(L) + dim(N ∩ L^2).
// Cross-check: for central N this is the same as N ^ L lying in the image of d3,
// which is linear in N and yields Z*(L) exactly.

#include <cstddef>
#include <optional>
#include <string>

#include "slie/multiplier.hpp"
#include "slie/superalg.hpp"

namespace slie {

struct EpicenterTest {
  GradedDim dim_M_L;
  GradedDim dim_M_quotient;
  std::size_t dim_N_cap_L2 = 0;
  bool contained = false;
};

/// Throws std::invalid_argument if n is not central.
EpicenterTest epicenter_contains(const SuperAlgebra& a, const GradedIdeal& n);
/// Same question answered by the boundary condition N ^ L within im d3.
bool epicenter_contains_exact(const SuperAlgebra& a, const GradedIdeal& n);
/// Z*(L) computed exactly through the boundary condition.
GradedIdeal epicenter(const SuperAlgebra& a);

std::optional<GradedIdeal> witness_search(const SuperAlgebra& a, std::size_t grid_bound);

enum class CapabilityStatus { Capable, NonCapable, Undetermined };
std::string to_string(CapabilityStatus s);

struct CapabilityVerdict {
  CapabilityStatus status = CapabilityStatus::Undetermined;
  std::string rule;
  std::optional<GradedIdeal> witness;  // NonCapable, except for the even-part rule
  std::string notes;
  std::string cross_check;  // exact-epicenter status, empty when not computable
};

/// Capability of the even part as a Lie algebra.
struct PartialCapability {
  CapabilityStatus status = CapabilityStatus::Undetermined;  // Capable = partially capable
  std::string rule;
  std::string notes;
};

PartialCapability partial_capability(const SuperAlgebra& a);

/// SLIE_GRID_BOUND if set to a nonnegative integer, else 2.
std::size_t default_grid_bound();

CapabilityVerdict capability_verdict(const SuperAlgebra& a, std::size_t grid_bound);
inline CapabilityVerdict capability_verdict(const SuperAlgebra& a) {
  return capability_verdict(a, default_grid_bound());
}

}  // namespace slie
