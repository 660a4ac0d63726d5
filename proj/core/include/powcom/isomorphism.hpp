#pragma once

#include <optional>
#include <vector>

#include "powcom/group.hpp"

namespace powcom {

/// A generating set chosen greedily: scan elements in id order and keep each
/// one not already in the span of those kept.
std::vector<Element> greedy_generators(const FiniteGroup& g);

/// An isomorphism G -> H as an image table, or nullopt.
///
/// Cheap invariants (order, element-order histogram, abelian flag, center
/// size) reject most pairs; the rest are settled by backtracking over images
/// of a greedy generating set. Throws OrderCapExceeded above
/// `limits.lattice_cap`.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                     const Limits& limits = {});

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

/// |Aut(G)|, counted with the same generator-image backtracking.
std::size_t automorphism_count(const FiniteGroup& g, const Limits& limits = {});

}  // namespace powcom
