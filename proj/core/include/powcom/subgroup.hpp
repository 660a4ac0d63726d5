#pragma once

#include <span>
#include <vector>

#include "powcom/group.hpp"

namespace powcom {

/// A set of element ids of a parent group, with its structural flags.
///
/// Flags are computed once at construction: is_normal and is_abelian are
/// only meaningful (and only set) when the set is a subgroup.
class SubgroupSet {
 public:
  SubgroupSet(FiniteGroup parent, std::vector<Element> members);

  const FiniteGroup& parent() const noexcept { return parent_; }
  /// Members in increasing order.
  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Element x) const noexcept { return x < membership_.size() && membership_[x]; }

  bool is_subgroup() const noexcept { return is_subgroup_; }
  bool is_normal() const noexcept { return is_normal_; }
  bool is_abelian() const noexcept { return is_abelian_; }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.elements_ == b.elements_;
  }
  /// Ordered by (size, member list).
  friend bool operator<(const SubgroupSet& a, const SubgroupSet& b);

 private:
  FiniteGroup parent_;
  std::vector<Element> elements_;
  std::vector<bool> membership_;
  bool is_subgroup_ = false;
  bool is_normal_ = false;
  bool is_abelian_ = false;
};

/// Least subgroup containing `seed`.
SubgroupSet closure(const FiniteGroup& g, std::span<const Element> seed);

/// True iff gHg^-1 = H for all g. Throws NotASubgroup.
bool is_normal(const FiniteGroup& g, const SubgroupSet& h);

/// Every subgroup exactly once, built by joining cyclic subgroups until no
/// new subgroup appears. Sorted by (size, member list). Throws
/// OrderCapExceeded above `limits.lattice_cap`.
std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, const Limits& limits = {});

/// The subgroup as a group in its own right; member i of `elements()` becomes
/// element id i (the identity is member 0). Throws NotASubgroup.
FiniteGroup subgroup_as_group(const SubgroupSet& h, std::string name = {});

/// G/N for a normal subgroup N; cosets numbered by their least member.
/// Throws NotASubgroup or PreconditionFailed when N is not normal.
FiniteGroup quotient(const FiniteGroup& g, const SubgroupSet& n, std::string name = {});

}  // namespace powcom
