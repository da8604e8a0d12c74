#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tamari {

// Expected counts per family, indexed by size - 1. Families use the names of
// CensusEntry::family.
using GoldenCounts = std::map<std::string, std::vector<std::uint64_t>>;

// Stored counts for sizes 1..6.
const GoldenCounts& golden_counts();

struct CheckResult {
  std::string name;
  bool passed = true;
  // First counterexample or mismatch, empty on success.
  std::string detail;
};

// Runs every cross-check up to max_size (figure fixtures, census against
// goldens and formulas, oracle agreement, bijection round trips, the
// triangle). Sizes past the stored goldens are checked against formulas
// only.
std::vector<CheckResult> run_verification(int max_size, const GoldenCounts& golden);

}  // namespace tamari
