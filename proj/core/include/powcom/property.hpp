#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powcom/group.hpp"

namespace powcom {

/// A pair whose k-th powers fail to commute.
struct PowerWitness {
  Element a;
  Element b;
  std::uint64_t exponent;
  friend bool operator==(const PowerWitness&, const PowerWitness&) = default;
};

struct PowerCommuteResult {
  bool holds = true;
  /// {a^m : a in G}, sorted.
  std::vector<Element> image;
  /// Lexicographically first (a, b) in G x G with [a^m, b^m] != 1.
  std::optional<PowerWitness> witness;
};

/// Whether all m-th powers commute, checked pairwise over the image set.
/// Agrees with holds(G, "[x^m,y^m]=1").
PowerCommuteResult power_commute(const FiniteGroup& g, std::uint64_t m);

/// Whether a^m b^m = b^m a^m and a^n b^n = b^n a^n for all a, b.
struct PropertyReport {
  std::string group;
  std::size_t order = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  /// False when (m, n) were accepted through the non-coprime override; the
  /// theorems do not apply to such a row.
  bool theorems_applicable = true;
  bool satisfies_p = false;
  bool is_abelian = false;
  /// Set exactly when satisfies_p is false; the m-law is tried first.
  std::optional<PowerWitness> witness;
  double wall_seconds = 0.0;
};

/// Throws NotCoprime unless gcd(m, n) = 1 or `allow_non_coprime` is set,
/// and InvalidArgument when m or n is zero.
PropertyReport satisfies_p(const FiniteGroup& g, std::uint64_t m, std::uint64_t n,
                           bool allow_non_coprime = false);

/// Re-evaluates a witness from scratch: true iff a^k b^k != b^k a^k.
bool witness_is_violation(const FiniteGroup& g, const PowerWitness& w);

}  // namespace powcom
