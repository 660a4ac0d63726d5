#include "powcom/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "powcom/error.hpp"

namespace powcom {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw Error(ErrorKind::InvalidArgument, "permutation images are not a bijection");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::uint32_t point = cycle[i];
      if (point >= degree || used[point]) {
        throw Error(ErrorKind::InvalidArgument, "cycles are not disjoint points below the degree");
      }
      used[point] = true;
      images[point] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> result(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) result[images_[i]] = i;
  return Permutation(std::move(result));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) {
    throw Error(ErrorKind::InvalidArgument, "composing permutations of different degree");
  }
  std::vector<std::uint32_t> result(f.degree());
  for (std::size_t i = 0; i < result.size(); ++i) result[i] = f.images_[g.images_[i]];
  return Permutation(std::move(result));
}

// ---------------------------------------------------------------------------
// FiniteGroup construction

FiniteGroup FiniteGroup::from_valid_table(std::size_t order, std::vector<Element> table,
                                          std::string name) {
  auto data = std::make_shared<Data>();
  data->order = order;
  data->table = std::move(table);
  data->name = std::move(name);
  data->inverse.assign(order, kIdentity);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (data->table[a * order + b] == kIdentity) {
        data->inverse[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  return FiniteGroup(std::move(data));
}

FiniteGroup from_cayley_table(const std::vector<std::vector<std::int64_t>>& raw,
                              std::string name) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorKind::BadTable, "empty table");
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorKind::BadTable, "row " + std::to_string(i) + " has " +
                                           std::to_string(raw[i].size()) + " entries, expected " +
                                           std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (raw[i][j] < 0 || static_cast<std::uint64_t>(raw[i][j]) >= n) {
        throw Error(ErrorKind::BadTable, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") = " + std::to_string(raw[i][j]) +
                                             " outside [0, " + std::to_string(n) + ")");
      }
    }
  }
  auto at = [&](std::size_t i, std::size_t j) { return static_cast<std::size_t>(raw[i][j]); };

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(i, j)]) {
        throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(i) + " repeats " +
                                                   std::to_string(at(i, j)) + " at column " +
                                                   std::to_string(j));
      }
      seen[at(i, j)] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[at(i, j)]) {
        throw Error(ErrorKind::NotLatinSquare, "column " + std::to_string(j) + " repeats " +
                                                   std::to_string(at(i, j)) + " at row " +
                                                   std::to_string(i));
      }
      seen[at(i, j)] = true;
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = at(e, j) == j && at(j, e) == j;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::NoIdentity, "no element acts as a two-sided identity");
  const std::size_t e = *identity;

  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = raw[i];
    const auto j = static_cast<std::size_t>(
        std::find(row.begin(), row.end(), static_cast<std::int64_t>(e)) - row.begin());
    if (at(j, i) != e) {
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(i) + " has right inverse " +
                                            std::to_string(j) + " that is not a left inverse");
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw Error(ErrorKind::NotAssociative,
                      "(a*b)*c != a*(b*c) for (a,b,c) = (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }

  // Swap labels 0 and e so the identity is 0.
  auto relabel = [e](std::size_t x) -> std::size_t {
    if (x == e) return 0;
    if (x == 0) return e;
    return x;
  };
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[relabel(a) * n + relabel(b)] = static_cast<Element>(relabel(at(a, b)));
    }
  }
  return FiniteGroup::from_valid_table(n, std::move(table), std::move(name));
}

namespace {

struct ImagesHash {
  std::size_t operator()(std::span<const std::uint32_t> images) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::uint32_t x : images) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
  std::size_t operator()(const std::vector<std::uint32_t>& images) const noexcept {
    return (*this)(std::span<const std::uint32_t>(images));
  }
};

}  // namespace

std::pair<FiniteGroup, std::vector<Permutation>> permutation_group_with_elements(
    std::vector<Permutation> gens, std::size_t degree, std::string name, const Limits& limits) {
  if (degree == 0) throw Error(ErrorKind::InvalidArgument, "permutation degree must be positive");
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw Error(ErrorKind::InvalidArgument, "generators do not share degree " +
                                                  std::to_string(degree));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });

  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<std::vector<std::uint32_t>, Element, ImagesHash> index;
  index.emplace(std::vector<std::uint32_t>(elements[0].images().begin(),
                                           elements[0].images().end()),
                kIdentity);
  // right[x * k + j] = id of x * gens[j]; parent/via give a BFS spanning tree.
  const std::size_t k = gens.size();
  std::vector<Element> right;
  std::vector<Element> parent{kIdentity};
  std::vector<std::size_t> via{0};

  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation y = elements[x] * gens[j];
      std::vector<std::uint32_t> key(y.images().begin(), y.images().end());
      auto [it, inserted] = index.emplace(std::move(key), static_cast<Element>(elements.size()));
      if (inserted) {
        if (elements.size() >= limits.element_cap) {
          throw Error(ErrorKind::ClosureBudgetExceeded,
                      "closure exceeds " + std::to_string(limits.element_cap) + " elements");
        }
        elements.push_back(std::move(y));
        parent.push_back(static_cast<Element>(x));
        via.push_back(j);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    table[a * n] = static_cast<Element>(a);
    // Elements are discovered after their parents, so the row fills in order.
    for (std::size_t b = 1; b < n; ++b) {
      table[a * n + b] = right[table[a * n + parent[b]] * k + via[b]];
    }
  }
  return {FiniteGroup::from_valid_table(n, std::move(table), std::move(name)),
          std::move(elements)};
}

FiniteGroup from_permutations(std::vector<Permutation> gens, std::size_t degree, std::string name,
                              const Limits& limits) {
  return permutation_group_with_elements(std::move(gens), degree, std::move(name), limits).first;
}

// ---------------------------------------------------------------------------
// Element arithmetic

Element power(const FiniteGroup& g, Element a, std::int64_t k) {
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Element base = k < 0 ? g.inverse(a) : a;
  Element result = kIdentity;
  while (e != 0) {
    if (e & 1U) result = g.mul(result, base);
    base = g.mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::size_t element_order(const FiniteGroup& g, Element a) {
  std::size_t r = 1;
  for (Element x = a; x != kIdentity; x = g.mul(x, a)) ++r;
  return r;
}

std::vector<std::size_t> order_histogram(const FiniteGroup& g) {
  std::vector<std::size_t> histogram(g.order() + 1, 0);
  for (Element a = 0; a < g.order(); ++a) ++histogram[element_order(g, a)];
  return histogram;
}

std::optional<CommutationWitness> noncommuting_pair(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = a + 1; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return CommutationWitness{a, b};
    }
  }
  return std::nullopt;
}

std::size_t center_size(const FiniteGroup& g) {
  std::size_t count = 0;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) ++count;
  }
  return count;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  const std::size_t gn = g.order();
  const std::size_t hn = h.order();
  const std::size_t n = gn * hn;
  if (n > limits.element_cap) {
    throw Error(ErrorKind::OrderCapExceeded, "product order " + std::to_string(n) +
                                                 " exceeds cap " +
                                                 std::to_string(limits.element_cap));
  }
  std::vector<Element> table(n * n);
  for (std::size_t g1 = 0; g1 < gn; ++g1) {
    for (std::size_t h1 = 0; h1 < hn; ++h1) {
      const std::size_t row = (g1 * hn + h1) * n;
      for (std::size_t g2 = 0; g2 < gn; ++g2) {
        const Element gg = g.mul(static_cast<Element>(g1), static_cast<Element>(g2));
        for (std::size_t h2 = 0; h2 < hn; ++h2) {
          table[row + g2 * hn + h2] = static_cast<Element>(
              gg * hn + h.mul(static_cast<Element>(h1), static_cast<Element>(h2)));
        }
      }
    }
  }
  std::string name;
  if (!g.name().empty() && !h.name().empty()) name = g.name() + "x" + h.name();
  return FiniteGroup::from_valid_table(n, std::move(table), std::move(name));
}

std::optional<std::string> check_invariants(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (g.table().size() != n * n) return "table size is not order^2";
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false);
    std::vector<bool> col_seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const Element r = g.mul(static_cast<Element>(i), static_cast<Element>(j));
      const Element c = g.mul(static_cast<Element>(j), static_cast<Element>(i));
      if (r >= n || row_seen[r]) return "row " + std::to_string(i) + " is not a permutation";
      if (c >= n || col_seen[c]) return "column " + std::to_string(i) + " is not a permutation";
      row_seen[r] = col_seen[c] = true;
    }
    if (g.mul(kIdentity, static_cast<Element>(i)) != i || g.mul(static_cast<Element>(i), kIdentity) != i) {
      return "0 is not the identity for " + std::to_string(i);
    }
    if (g.mul(static_cast<Element>(i), g.inverse(static_cast<Element>(i))) != kIdentity) {
      return "inverse of " + std::to_string(i) + " is wrong";
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          std::ostringstream out;
          out << "not associative at (" << a << "," << b << "," << c << ")";
          return out.str();
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace powcom
