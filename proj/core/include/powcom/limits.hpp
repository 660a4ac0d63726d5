#pragma once

#include <cstddef>
#include <cstdint>

namespace powcom {

/// Size guards for the expensive operations.
///
/// Defaults keep every cubic or backtracking routine at desk scale. The CLI
/// reads overrides from the environment (see `Limits::from_env`).
struct Limits {
  /// Largest group materialized by permutation closure or products.
  std::size_t element_cap = 10080;
  /// Largest group handed to the subgroup lattice or isomorphism search.
  std::size_t lattice_cap = 48;
  /// Largest order accepted by `enumerate_order`.
  std::size_t enumeration_cap = 12;
  /// Maximum number of assignments tried by `holds`.
  std::uint64_t law_budget = 10'000'000;

  /// Hard ceiling for enumeration regardless of configuration.
  static constexpr std::size_t kEnumerationCeiling = 16;

  /// Reads POWCOM_ELEMENT_CAP, POWCOM_LATTICE_CAP, POWCOM_ENUMERATION_CAP and
  /// POWCOM_LAW_BUDGET; unset or unparsable variables keep the default.
  static Limits from_env();
};

}  // namespace powcom
