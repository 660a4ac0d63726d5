#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powcom/limits.hpp"

namespace powcom {

/// Element id inside a FiniteGroup. The identity is always 0.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

/// A permutation of {0, ..., degree-1}; images[i] is the image of point i.
///
/// Composition is right-to-left: (f * g)(x) = f(g(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& f, const Permutation& g);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Dense multiplication-table representation of a finite group.
///
/// Immutable after construction; copies share the table. Every instance
/// satisfies: rows and columns of the table are permutations, element 0 is
/// the identity, the table is associative, and inverse[i] * i = 0.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return data_->order; }
  const std::string& name() const noexcept { return data_->name; }

  Element mul(Element a, Element b) const noexcept {
    return data_->table[static_cast<std::size_t>(a) * data_->order + b];
  }
  Element inverse(Element a) const noexcept { return data_->inverse[a]; }

  /// Row a of the table: row(a)[b] = a * b.
  std::span<const Element> row(Element a) const noexcept {
    return {data_->table.data() + static_cast<std::size_t>(a) * data_->order, data_->order};
  }
  std::span<const Element> table() const noexcept { return data_->table; }

  /// Same table under another display name.
  FiniteGroup renamed(std::string name) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.data_->table == b.data_->table;
  }

  // Trusted construction for callers that built a valid identity-0 table.
  // Validation is skipped; use `from_cayley_table` for untrusted input.
  static FiniteGroup from_valid_table(std::size_t order, std::vector<Element> table,
                                      std::string name);

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::string name;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Validates an arbitrary Cayley table and returns the group with its
/// identity relabelled to 0. Throws Error with kind NotLatinSquare,
/// NoIdentity, NoInverse or NotAssociative naming the first bad cell/triple.
FiniteGroup from_cayley_table(const std::vector<std::vector<std::int64_t>>& raw,
                              std::string name = {});

/// Materializes the group generated by `gens` by closure. Element 0 is the
/// identity permutation; the rest are numbered in breadth-first discovery
/// order, multiplying by generators in sorted order.
FiniteGroup from_permutations(std::vector<Permutation> gens, std::size_t degree,
                              std::string name = {}, const Limits& limits = {});

/// Same closure, also returning the permutation behind each element id.
std::pair<FiniteGroup, std::vector<Permutation>> permutation_group_with_elements(
    std::vector<Permutation> gens, std::size_t degree, std::string name = {},
    const Limits& limits = {});

inline Element mul(const FiniteGroup& g, Element a, Element b) { return g.mul(a, b); }

/// a^k by binary exponentiation; negative k powers the inverse.
Element power(const FiniteGroup& g, Element a, std::int64_t k);

/// Least r >= 1 with a^r = identity.
std::size_t element_order(const FiniteGroup& g, Element a);

/// Histogram h[r] = number of elements of order r (index 0 unused).
std::vector<std::size_t> order_histogram(const FiniteGroup& g);

struct CommutationWitness {
  Element a;
  Element b;
  friend bool operator==(const CommutationWitness&, const CommutationWitness&) = default;
};

/// nullopt when abelian; otherwise the lexicographically first (a, b) with
/// ab != ba.
std::optional<CommutationWitness> noncommuting_pair(const FiniteGroup& g);
inline bool is_abelian(const FiniteGroup& g) { return !noncommuting_pair(g).has_value(); }

std::size_t center_size(const FiniteGroup& g);

/// Componentwise product; the pair (g, h) gets id g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

/// Checks every FiniteGroup invariant from scratch, O(n^3). Returns a
/// description of the first violation or nullopt.
std::optional<std::string> check_invariants(const FiniteGroup& g);

}  // namespace powcom
