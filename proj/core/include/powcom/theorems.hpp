#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powcom/group.hpp"
#include "powcom/property.hpp"
#include "powcom/subgroup.hpp"

namespace powcom {

enum class VerdictStatus {
  Holds,
  /// The hypothesis failed, so the statement says nothing about this group.
  Vacuous,
  /// The statement failed on a group meeting its hypothesis: either an
  /// implementation bug or a refutation. Evidence makes it replayable.
  Violated,
};

std::string_view to_string(VerdictStatus status);

struct Violation {
  std::vector<Element> elements;
  std::string property;
};

/// A verdict on one statement together with the object it was decided on.
template <class Evidence>
struct Verdict {
  std::string statement;
  VerdictStatus status = VerdictStatus::Holds;
  Evidence evidence;
  std::optional<Violation> violation;

  bool holds() const noexcept { return status != VerdictStatus::Violated; }
};

/// {x : x^k = e} with its closure verdict.
struct TorsionSet {
  std::uint64_t k = 1;
  SubgroupSet members;
  /// First (x, y) in the set, lexicographically, with xy outside it.
  std::optional<std::pair<Element, Element>> escape;

  bool closed() const noexcept { return members.is_subgroup(); }
};

TorsionSet k_torsion_set(const FiniteGroup& g, std::uint64_t k);

/// Throws PreconditionFailed when G fails the property for (m, n), when
/// gcd(m, n) != 1, or when k is coprime to neither m nor n.
Verdict<TorsionSet> verify_torsion_subgroup(const FiniteGroup& g, std::uint64_t k, std::uint64_t m,
                                     std::uint64_t n);

/// {x : x^(p^a) = e} where p^a is the largest power of p dividing |G|.
/// Throws InvalidArgument for non-prime p and PrimeDoesNotDivideOrder.
TorsionSet sylow_set(const FiniteGroup& g, std::uint64_t p);

/// All subgroups of order p^a, from the subgroup lattice.
std::vector<SubgroupSet> find_sylow_subgroups(const FiniteGroup& g, std::uint64_t p,
                                              const Limits& limits = {});

struct SylowEvidence {
  TorsionSet power_set;
  std::vector<SubgroupSet> sylow_subgroups;
};

/// Holds iff (power set is a subgroup) <=> (exactly one Sylow p-subgroup),
/// and in that case the two sets coincide.
Verdict<SylowEvidence> verify_sylow_criterion(const FiniteGroup& g, std::uint64_t p,
                                        const Limits& limits = {});

struct DirectProductEvidence {
  PropertyReport report;
  /// The unique Sylow subgroup for each prime divisor, primes increasing.
  std::vector<SubgroupSet> sylow_factors;
  /// (x_1, ..., x_r) -> x_1 ... x_r is a bijective homomorphism.
  bool internal_map_is_isomorphism = false;
  /// The external product of the factors is isomorphic to G.
  bool external_product_isomorphic = false;
};

/// Vacuous (with the property witness) when G fails the property; otherwise
/// checks G is abelian and rebuilds G as the direct product of its Sylow
/// subgroups. Throws NotCoprime or OrderCapExceeded.
Verdict<DirectProductEvidence> verify_abelian_decomposition(const FiniteGroup& g, std::uint64_t m,
                                                  std::uint64_t n, const Limits& limits = {});

struct TorsionPart {
  Element part;              // x^cofactor
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t prime_power;  // order of `part`
  std::uint64_t cofactor;     // order(x) / prime_power
  std::int64_t coefficient;   // Bezout coefficient of `cofactor`
};

/// x = product of part^coefficient over the parts, each part of prime-power
/// order and a power of x. The identity has no parts.
struct TorsionDecomposition {
  Element element = kIdentity;
  std::uint64_t order = 1;
  std::vector<TorsionPart> parts;
};

TorsionDecomposition torsion_decompose(const FiniteGroup& g, Element x);

/// Re-checks every decomposition invariant from scratch; returns the first
/// failure or nullopt.
std::optional<std::string> check_decomposition(const FiniteGroup& g,
                                               const TorsionDecomposition& d);

struct TorsionCommutingEvidence {
  std::size_t pairs = 0;
  /// Pairs settled inside a single k-torsion subgroup.
  std::size_t single_subgroup_route = 0;
  /// Pairs settled by two normal abelian subgroups meeting trivially.
  std::size_t split_route = 0;
};

/// Replays the prime-power case split on every pair of prime-power-order
/// elements. Throws PreconditionFailed when G fails the property.
Verdict<TorsionCommutingEvidence> verify_torsion_commuting(const FiniteGroup& g, std::uint64_t m,
                                                           std::uint64_t n);

}  // namespace powcom
