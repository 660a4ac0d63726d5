#pragma once

#include <cstdint>
#include <vector>

#include "powcom/group.hpp"

namespace powcom {

struct EnumerationStats {
  /// Complete tables reached by the pruned search, before isomorphism dedup.
  std::uint64_t tables = 0;
  /// Search nodes visited.
  std::uint64_t nodes = 0;
};

/// One group per isomorphism class of order n.
///
/// Backtracking fill of the Cayley table with the identity at 0 and element
/// 1 fixed as an element of the largest prime order dividing n, whose row is
/// then the fixed cycle layout 0->1->...->p-1->0, p->p+1->... Each placement
/// is followed by Latin-square and associativity propagation. Right cosets
/// of <1> not yet touched by a decision are interchangeable, so only one
/// representative value is tried among them. A final are_isomorphic pass
/// removes the remaining duplicates.
///
/// Throws OrderCapExceeded when n exceeds `limits.enumeration_cap` or the
/// hard ceiling of 16.
std::vector<FiniteGroup> enumerate_order(std::size_t n, const Limits& limits = {},
                                         EnumerationStats* stats = nullptr);

}  // namespace powcom
