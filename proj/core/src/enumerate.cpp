#include "powcom/enumerate.hpp"

#include <cstdint>

#include "powcom/arith.hpp"
#include "powcom/error.hpp"
#include "powcom/isomorphism.hpp"

namespace powcom {

namespace {

constexpr int kUnknown = -1;

// Partial Cayley table with Latin-square bookkeeping and an undo trail.
//
// Element 1 has prime order p and its row is fixed to the layout
//   c*p + i  ->  c*p + (i + 1) mod p,
// so the right cosets of <1> are the blocks {c*p, ..., c*p + p - 1}. Block 0
// is <1> itself. Relabellings that permute the other blocks (and rotate
// inside them) preserve everything fixed so far; blocks not yet named by any
// decision are interchangeable, which is what the value pruning exploits.
class TableSearch {
 public:
  TableSearch(std::size_t n, std::size_t p) : n_(n), p_(p) {
    table_.assign(n * n, kUnknown);
    row_pos_.assign(n * n, kUnknown);
    col_pos_.assign(n * n, kUnknown);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ka = a / p, kb = b / p;
        order_.push_back({ka > kb ? ka : kb, a, b});
      }
    }
    std::sort(order_.begin(), order_.end());
  }

  std::vector<FiniteGroup> run(EnumerationStats& stats) {
    stats_ = &stats;
    bool ok = true;
    for (std::size_t x = 0; x < n_ && ok; ++x) {
      ok = assign(0, x, static_cast<int>(x)) && assign(x, 0, static_cast<int>(x));
    }
    if (n_ > 1) {
      for (std::size_t x = 0; x < n_ && ok; ++x) {
        const std::size_t block = x / p_;
        ok = assign(1, x, static_cast<int>(block * p_ + (x % p_ + 1) % p_));
      }
    }
    ok = ok && propagate();
    if (ok) search(0, 1U);  // block 0 is always named
    return std::move(found_);
  }

 private:
  struct Cell {
    std::size_t block;
    std::size_t a;
    std::size_t b;
    friend auto operator<=>(const Cell&, const Cell&) = default;
  };

  int& at(std::size_t a, std::size_t b) { return table_[a * n_ + b]; }

  bool assign(std::size_t a, std::size_t b, int v) {
    int& cell = at(a, b);
    if (cell == v) return true;
    if (cell != kUnknown) return false;
    const auto value = static_cast<std::size_t>(v);
    if (row_pos_[a * n_ + value] != kUnknown || col_pos_[b * n_ + value] != kUnknown) return false;
    cell = v;
    row_pos_[a * n_ + value] = static_cast<int>(b);
    col_pos_[b * n_ + value] = static_cast<int>(a);
    trail_.push_back(a * n_ + b);
    return true;
  }

  void undo_to(std::size_t size) {
    while (trail_.size() > size) {
      const std::size_t idx = trail_.back();
      trail_.pop_back();
      const std::size_t a = idx / n_, b = idx % n_;
      const auto v = static_cast<std::size_t>(table_[idx]);
      row_pos_[a * n_ + v] = kUnknown;
      col_pos_[b * n_ + v] = kUnknown;
      table_[idx] = kUnknown;
    }
    head_ = trail_.size();
  }

  // Enforces (x y) z = x (y z) for every triple in which the newly assigned
  // cell takes one of its four roles, filling any lone unknown.
  bool propagate() {
    while (head_ < trail_.size()) {
      const std::size_t idx = trail_[head_++];
      const std::size_t a = idx / n_, b = idx % n_;
      const int v = table_[idx];
      const auto uv = static_cast<std::size_t>(v);
      for (std::size_t k = 0; k < n_; ++k) {
        // (a b) k = a (b k):  T[v][k] = T[a][T[b][k]]
        if (!reconcile_left(uv, k, a, at(b, k), b, k)) return false;
        // (k a) b = k (a b):  T[T[k][a]][b] = T[k][v]
        if (!reconcile_right(k, a, b, at(k, uv))) return false;
        // (k y) b = v where T[k][y] = a:  T[k][T[y][b]] = v
        const int y = row_pos_[k * n_ + a];
        if (y != kUnknown) {
          const int r = at(static_cast<std::size_t>(y), b);
          if (r != kUnknown) {
            if (!assign(k, static_cast<std::size_t>(r), v)) return false;
          } else {
            const int u = row_pos_[k * n_ + uv];
            if (u != kUnknown && !assign(static_cast<std::size_t>(y), b, u)) return false;
          }
        }
        // a (y k) = v where T[y][k] = b:  T[T[a][y]][k] = v
        const int y2 = col_pos_[k * n_ + b];
        if (y2 != kUnknown) {
          const int s = at(a, static_cast<std::size_t>(y2));
          if (s != kUnknown) {
            if (!assign(static_cast<std::size_t>(s), k, v)) return false;
          } else {
            const int w = col_pos_[k * n_ + uv];
            if (w != kUnknown && !assign(a, static_cast<std::size_t>(y2), w)) return false;
          }
        }
      }
    }
    return true;
  }

  // T[v][k] must equal T[a][r] with r = T[b][k].
  bool reconcile_left(std::size_t v, std::size_t k, std::size_t a, int r, std::size_t b,
                      std::size_t col) {
    const int t1 = at(v, k);
    if (r != kUnknown) {
      const int t2 = at(a, static_cast<std::size_t>(r));
      if (t1 != kUnknown && t2 != kUnknown) return t1 == t2;
      if (t1 != kUnknown) return assign(a, static_cast<std::size_t>(r), t1);
      if (t2 != kUnknown) return assign(v, k, t2);
      return true;
    }
    if (t1 != kUnknown) {
      const int pos = row_pos_[a * n_ + static_cast<std::size_t>(t1)];
      if (pos != kUnknown) return assign(b, col, pos);
    }
    return true;
  }

  // T[s][b] must equal T[k][v] with s = T[k][a]; t2 = T[k][v].
  bool reconcile_right(std::size_t k, std::size_t a, std::size_t b, int t2) {
    const int s = at(k, a);
    if (s != kUnknown) {
      const int t1 = at(static_cast<std::size_t>(s), b);
      if (t1 != kUnknown && t2 != kUnknown) return t1 == t2;
      if (t2 != kUnknown) return assign(static_cast<std::size_t>(s), b, t2);
      if (t1 != kUnknown) {
        const int v = at(a, b);
        return assign(k, static_cast<std::size_t>(v), t1);
      }
      return true;
    }
    if (t2 != kUnknown) {
      const int pos = col_pos_[b * n_ + static_cast<std::size_t>(t2)];
      if (pos != kUnknown) return assign(k, a, pos);
    }
    return true;
  }

  void search(std::size_t pos, std::uint32_t named) {
    ++stats_->nodes;
    while (pos < order_.size() && at(order_[pos].a, order_[pos].b) != kUnknown) ++pos;
    if (pos == order_.size()) {
      record();
      return;
    }
    const std::size_t a = order_[pos].a;
    const std::size_t b = order_[pos].b;
    named |= (1U << (a / p_)) | (1U << (b / p_));

    std::size_t fresh_block = 0;
    const std::size_t blocks = n_ / p_;
    while (fresh_block < blocks && (named & (1U << fresh_block)) != 0) ++fresh_block;

    for (std::size_t v = 0; v < n_; ++v) {
      if (row_pos_[a * n_ + v] != kUnknown || col_pos_[b * n_ + v] != kUnknown) continue;
      const std::size_t block = v / p_;
      if ((named & (1U << block)) == 0 && v != fresh_block * p_) continue;
      const std::size_t mark = trail_.size();
      if (assign(a, b, static_cast<int>(v)) && propagate()) {
        search(pos + 1, named | (1U << block));
      }
      undo_to(mark);
    }
  }

  void record() {
    std::vector<Element> table(n_ * n_);
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Element>(table_[i]);
    FiniteGroup g = FiniteGroup::from_valid_table(n_, std::move(table), {});
    // Propagation covers every triple, so this never fires; it guards the
    // final output against a propagation bug.
    if (check_invariants(g)) return;
    ++stats_->tables;
    found_.push_back(std::move(g));
  }

  std::size_t n_;
  std::size_t p_;
  std::vector<int> table_;
  std::vector<int> row_pos_;  // row_pos_[a*n + v] = b with T[a][b] = v
  std::vector<int> col_pos_;  // col_pos_[b*n + v] = a with T[a][b] = v
  std::vector<std::size_t> trail_;
  std::size_t head_ = 0;
  std::vector<Cell> order_;
  std::vector<FiniteGroup> found_;
  EnumerationStats* stats_ = nullptr;
};

struct Signature {
  std::vector<std::size_t> histogram;
  bool abelian;
  std::size_t center;
  friend bool operator==(const Signature&, const Signature&) = default;
};

}  // namespace

std::vector<FiniteGroup> enumerate_order(std::size_t n, const Limits& limits,
                                         EnumerationStats* stats) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "order must be positive");
  const std::size_t cap = std::min(limits.enumeration_cap, Limits::kEnumerationCeiling);
  if (n > cap) {
    throw Error(ErrorKind::OrderCapExceeded,
                "enumeration of order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  EnumerationStats local;
  EnumerationStats& st = stats != nullptr ? *stats : local;

  std::vector<FiniteGroup> tables;
  if (n == 1) {
    tables.push_back(FiniteGroup::from_valid_table(1, {kIdentity}, {}));
    st.tables = 1;
    st.nodes = 1;
  } else {
    const std::size_t p = arith::factorize(n).factors.back().prime;
    tables = TableSearch(n, p).run(st);
  }

  Limits iso_limits = limits;
  iso_limits.lattice_cap = std::max(limits.lattice_cap, n);
  std::vector<FiniteGroup> classes;
  std::vector<Signature> signatures;
  for (const FiniteGroup& g : tables) {
    Signature sig{order_histogram(g), is_abelian(g), center_size(g)};
    bool duplicate = false;
    for (std::size_t i = 0; i < classes.size() && !duplicate; ++i) {
      duplicate = signatures[i] == sig && are_isomorphic(classes[i], g, iso_limits);
    }
    if (duplicate) continue;
    signatures.push_back(std::move(sig));
    classes.push_back(g.renamed("G" + std::to_string(n) + "." + std::to_string(classes.size() + 1)));
  }
  return classes;
}

}  // namespace powcom
