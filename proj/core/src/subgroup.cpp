#include "powcom/subgroup.hpp"

#include <algorithm>
#include <set>

#include "powcom/error.hpp"

namespace powcom {

namespace {

bool closed_under_product(const FiniteGroup& g, std::span<const Element> elements,
                          const std::vector<bool>& membership) {
  for (Element a : elements) {
    for (Element b : elements) {
      if (!membership[g.mul(a, b)]) return false;
    }
  }
  return true;
}

// BFS closure of {0} under right multiplication by `gens`. In a finite group
// this is the generated subgroup.
std::vector<bool> generated_membership(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<bool> member(g.order(), false);
  std::vector<Element> queue{kIdentity};
  member[kIdentity] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(queue[i], s);
      if (!member[y]) {
        member[y] = true;
        queue.push_back(y);
      }
    }
  }
  return member;
}

std::vector<Element> members_of(const std::vector<bool>& membership) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < membership.size(); ++i) {
    if (membership[i]) out.push_back(static_cast<Element>(i));
  }
  return out;
}

void require_subgroup(const SubgroupSet& h) {
  if (!h.is_subgroup()) throw Error(ErrorKind::NotASubgroup, "set is not closed under the product");
}

}  // namespace

SubgroupSet::SubgroupSet(FiniteGroup parent, std::vector<Element> members)
    : parent_(std::move(parent)), elements_(std::move(members)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  membership_.assign(parent_.order(), false);
  for (Element x : elements_) {
    if (x >= parent_.order()) {
      throw Error(ErrorKind::InvalidArgument,
                  "element " + std::to_string(x) + " is not in a group of order " +
                      std::to_string(parent_.order()));
    }
    membership_[x] = true;
  }
  // A nonempty finite subset closed under the product is a subgroup.
  is_subgroup_ = !elements_.empty() && closed_under_product(parent_, elements_, membership_);
  if (!is_subgroup_) return;

  is_abelian_ = true;
  for (std::size_t i = 0; i < elements_.size() && is_abelian_; ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      if (parent_.mul(elements_[i], elements_[j]) != parent_.mul(elements_[j], elements_[i])) {
        is_abelian_ = false;
        break;
      }
    }
  }
  is_normal_ = true;
  for (Element g = 0; g < parent_.order() && is_normal_; ++g) {
    const Element g_inv = parent_.inverse(g);
    for (Element x : elements_) {
      if (!membership_[parent_.mul(parent_.mul(g, x), g_inv)]) {
        is_normal_ = false;
        break;
      }
    }
  }
}

bool operator<(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements_ < b.elements_;
}

SubgroupSet closure(const FiniteGroup& g, std::span<const Element> seed) {
  for (Element x : seed) {
    if (x >= g.order()) {
      throw Error(ErrorKind::InvalidArgument, "seed element " + std::to_string(x) +
                                                  " outside the group");
    }
  }
  return SubgroupSet(g, members_of(generated_membership(g, seed)));
}

bool is_normal(const FiniteGroup& g, const SubgroupSet& h) {
  require_subgroup(h);
  if (!(h.parent() == g)) throw Error(ErrorKind::InvalidArgument, "subgroup of another group");
  return h.is_normal();
}

std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.lattice_cap) {
    throw Error(ErrorKind::OrderCapExceeded, "order " + std::to_string(g.order()) +
                                                 " exceeds lattice cap " +
                                                 std::to_string(limits.lattice_cap));
  }
  struct Node {
    std::vector<bool> members;
    std::vector<Element> gens;
  };
  std::set<std::vector<bool>> seen;
  std::vector<Node> found;

  // Layer 0: cyclic subgroups, one per distinct subgroup.
  std::vector<Node> cyclic;
  for (Element x = 0; x < g.order(); ++x) {
    const Element gen[] = {x};
    Node node{generated_membership(g, gen), {}};
    if (x != kIdentity) node.gens.push_back(x);
    if (seen.insert(node.members).second) {
      cyclic.push_back(node);
      found.push_back(std::move(node));
    }
  }

  // Every subgroup is the join of the cyclic subgroups it contains, so
  // joining each new subgroup with every cyclic one reaches all of them.
  std::vector<Node> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const Node& h : frontier) {
      for (const Node& c : cyclic) {
        if (c.gens.empty() || h.members[c.gens.front()]) continue;
        Node joined{{}, h.gens};
        joined.gens.push_back(c.gens.front());
        joined.members = generated_membership(g, joined.gens);
        if (seen.insert(joined.members).second) {
          found.push_back(joined);
          next.push_back(std::move(joined));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<SubgroupSet> result;
  result.reserve(found.size());
  for (const Node& node : found) result.emplace_back(g, members_of(node.members));
  std::sort(result.begin(), result.end());
  return result;
}

FiniteGroup subgroup_as_group(const SubgroupSet& h, std::string name) {
  require_subgroup(h);
  const FiniteGroup& g = h.parent();
  const auto elements = h.elements();
  const std::size_t k = elements.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) local[elements[i]] = static_cast<Element>(i);
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = local[g.mul(elements[i], elements[j])];
  }
  return FiniteGroup::from_valid_table(k, std::move(table), std::move(name));
}

FiniteGroup quotient(const FiniteGroup& g, const SubgroupSet& n, std::string name) {
  require_subgroup(n);
  if (!n.is_normal()) throw Error(ErrorKind::PreconditionFailed, "quotient by a non-normal subgroup");
  const std::size_t order = g.order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> coset(order, kUnset);
  std::vector<Element> representative;
  for (Element x = 0; x < order; ++x) {
    if (coset[x] != kUnset) continue;
    const auto label = static_cast<Element>(representative.size());
    representative.push_back(x);
    for (Element m : n.elements()) coset[g.mul(x, m)] = label;
  }
  const std::size_t k = representative.size();
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] = coset[g.mul(representative[i], representative[j])];
    }
  }
  return FiniteGroup::from_valid_table(k, std::move(table), std::move(name));
}

}  // namespace powcom
