#pragma once

// Nilpotent Lie superalgebras of dimension at most 5 with dim L^2 in {1,2,3},
// transcribed as printed, with the published multiplier values and verdicts.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "slie/capability.hpp"
#include "slie/superalg.hpp"

namespace slie {

struct CatalogEntry {
  std::string id;                    // e.g. "L27_3_2"
  std::vector<std::string> aliases;
  std::size_t group = 0;             // published dim L^2
  SuperAlgebra algebra;              // as printed
  std::optional<std::size_t> expected_multiplier;   // total
  std::optional<GradedDim> expected_multiplier_graded;
  CapabilityStatus expected_verdict = CapabilityStatus::NonCapable;
  std::string provenance;
  std::vector<std::string> flags;    // anomalies in the printed presentation
  std::string note;
  std::vector<std::string> alternate_readings;
};

const std::vector<CatalogEntry>& load_catalog();
/// Lookup by id or alias.
const CatalogEntry* find_entry(std::string_view id);

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct EntryReport {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::optional<GradedDim> multiplier_tags;
  std::optional<GradedDim> multiplier_homology;
  std::optional<CapabilityVerdict> verdict;
  std::vector<std::string> failures;
  std::string reason;  // Skipped only
};

struct VerifyOptions {
  std::size_t grid_bound = 2;
  std::optional<std::string> only_id;
};

struct VerifyReport {
  std::vector<EntryReport> entries;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  bool ok() const { return failed == 0; }
};

VerifyReport verify_catalog(const std::vector<CatalogEntry>& entries, const VerifyOptions& options);
EntryReport verify_entry(const CatalogEntry& entry, std::size_t grid_bound);

}  // namespace slie
