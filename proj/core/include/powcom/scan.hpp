#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "powcom/group.hpp"
#include "powcom/property.hpp"

namespace powcom {

using ExponentPair = std::pair<std::uint64_t, std::uint64_t>;

struct ScanSummary {
  std::size_t rows = 0;
  std::size_t p_and_abelian = 0;
  std::size_t p_and_nonabelian = 0;
  std::size_t not_p_and_abelian = 0;
  std::size_t not_p_and_nonabelian = 0;
};

struct ScanReport {
  std::vector<PropertyReport> rows;
  ScanSummary summary;
  /// Rows satisfying the property while nonabelian. For finite groups this
  /// must stay empty.
  std::vector<PropertyReport> counterexamples;
};

/// Runs satisfies_p for every (group, pair). Rows are ordered by
/// (group order, group name, pair) whatever the worker count.
/// Throws NotCoprime before any work if a pair is not coprime.
ScanReport scan(const std::vector<FiniteGroup>& groups, const std::vector<ExponentPair>& pairs,
                unsigned workers = 1);

}  // namespace powcom
