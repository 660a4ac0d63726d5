#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "powcom/group.hpp"

namespace powcom {

/// One factor of a group spec.
struct SpecBase {
  enum class Kind { Cyclic, Dihedral, Symmetric, Alternating, Quaternion, Heisenberg, File };

  Kind kind = Kind::Cyclic;
  std::uint64_t parameter = 0;  // n for C/D/S/A, p for Heis, 8 for Q8
  std::string path;             // File only

  friend bool operator==(const SpecBase&, const SpecBase&) = default;
};

/// spec := base ("x" base)*, with
///   base := C<n> | D<n> | S<n> | A<n> | Q8 | Heis<p> | @<path>
/// D<n> is the dihedral group of order 2n. Products associate left. An @path
/// runs to the end of the text, so a file factor must come last.
struct GroupSpec {
  std::vector<SpecBase> factors;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws BadSpec.
GroupSpec parse_group_spec(std::string_view text);
std::string to_string(const GroupSpec& spec);

FiniteGroup make(const GroupSpec& spec, const Limits& limits = {});
/// parse_group_spec + make; the group is named after the spec text, except
/// that a lone @file keeps the name recorded in the file when it has one.
FiniteGroup make(std::string_view spec, const Limits& limits = {});

FiniteGroup cyclic(std::size_t n);
/// Order 2n: r^i s^j has id j*n + i.
FiniteGroup dihedral(std::size_t n);
FiniteGroup symmetric(std::size_t n, const Limits& limits = {});
FiniteGroup alternating(std::size_t n, const Limits& limits = {});
FiniteGroup quaternion();
/// Upper unitriangular 3x3 matrices over Z/p; (a, b, c) has id a + p b + p^2 c.
FiniteGroup heisenberg(std::size_t p);

/// The named catalog used by the test and acceptance suites: cyclic,
/// dihedral, symmetric, alternating, quaternion, Heisenberg and assorted
/// products, every one of order <= max_order. Sorted by (order, name).
std::vector<FiniteGroup> standard_catalog(std::size_t max_order);

}  // namespace powcom
