#include "powcom/isomorphism.hpp"

#include <functional>

#include "powcom/error.hpp"

namespace powcom {

namespace {

constexpr Element kUnmapped = ~Element{0};

std::vector<bool> span_of(const FiniteGroup& g, const std::vector<Element>& gens) {
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

void check_cap(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.lattice_cap) {
    throw Error(ErrorKind::OrderCapExceeded, "order " + std::to_string(g.order()) +
                                                 " exceeds isomorphism cap " +
                                                 std::to_string(limits.lattice_cap));
  }
}

// Backtracking over images of G's greedy generators in H. `on_complete`
// receives each bijective homomorphism and returns true to stop the search.
class GeneratorImageSearch {
 public:
  GeneratorImageSearch(const FiniteGroup& g, const FiniteGroup& h)
      : g_(g), h_(h), gens_(greedy_generators(g)) {
    g_orders_.reserve(gens_.size());
    for (Element s : gens_) g_orders_.push_back(element_order(g_, s));
    h_orders_.reserve(h_.order());
    for (Element y = 0; y < h_.order(); ++y) h_orders_.push_back(element_order(h_, y));
  }

  void run(const std::function<bool(const std::vector<Element>&)>& on_complete) {
    on_complete_ = &on_complete;
    images_.assign(gens_.size(), kUnmapped);
    stopped_ = false;
    extend(0);
  }

 private:
  void extend(std::size_t depth) {
    if (depth == gens_.size()) {
      std::vector<Element> map;
      if (consistent(depth, &map) && (*on_complete_)(map)) stopped_ = true;
      return;
    }
    for (Element y = 1; y < h_.order() && !stopped_; ++y) {
      if (h_orders_[y] != g_orders_[depth]) continue;
      images_[depth] = y;
      if (consistent(depth + 1, nullptr)) extend(depth + 1);
    }
    images_[depth] = kUnmapped;
  }

  // Propagates the partial map over <gens[0..count)> and checks it is a
  // well-defined injective homomorphism there.
  bool consistent(std::size_t count, std::vector<Element>* out) const {
    std::vector<Element> phi(g_.order(), kUnmapped);
    std::vector<bool> used(h_.order(), false);
    std::vector<Element> queue{kIdentity};
    phi[kIdentity] = kIdentity;
    used[kIdentity] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Element x = queue[i];
      for (std::size_t j = 0; j < count; ++j) {
        const Element y = g_.mul(x, gens_[j]);
        const Element image = h_.mul(phi[x], images_[j]);
        if (phi[y] == kUnmapped) {
          if (used[image]) return false;
          phi[y] = image;
          used[image] = true;
          queue.push_back(y);
        } else if (phi[y] != image) {
          return false;
        }
      }
    }
    if (out != nullptr) {
      if (queue.size() != g_.order()) return false;
      *out = std::move(phi);
    }
    return true;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::vector<Element> gens_;
  std::vector<std::size_t> g_orders_;
  std::vector<std::size_t> h_orders_;
  std::vector<Element> images_;
  const std::function<bool(const std::vector<Element>&)>* on_complete_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<bool> span = span_of(g, gens);
  for (Element x = 1; x < g.order(); ++x) {
    if (span[x]) continue;
    gens.push_back(x);
    span = span_of(g, gens);
  }
  return gens;
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                     const Limits& limits) {
  if (g.order() != h.order()) return std::nullopt;
  check_cap(g, limits);
  if (g == h) {
    std::vector<Element> identity_map(g.order());
    for (Element x = 0; x < g.order(); ++x) identity_map[x] = x;
    return identity_map;
  }
  if (order_histogram(g) != order_histogram(h)) return std::nullopt;
  if (is_abelian(g) != is_abelian(h)) return std::nullopt;
  if (center_size(g) != center_size(h)) return std::nullopt;

  std::optional<std::vector<Element>> found;
  GeneratorImageSearch search(g, h);
  search.run([&](const std::vector<Element>& map) {
    found = map;
    return true;
  });
  return found;
}

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  return find_isomorphism(g, h, limits).has_value();
}

std::size_t automorphism_count(const FiniteGroup& g, const Limits& limits) {
  check_cap(g, limits);
  std::size_t count = 0;
  GeneratorImageSearch search(g, g);
  search.run([&](const std::vector<Element>&) {
    ++count;
    return false;
  });
  return count;
}

}  // namespace powcom
