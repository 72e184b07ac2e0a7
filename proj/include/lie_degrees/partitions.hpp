#ifndef LIE_DEGREES_PARTITIONS_HPP
#define LIE_DEGREES_PARTITIONS_HPP

// Young-diagram combinatorics: hooks, addable/removable nodes, beta-sets,
// dominance order, odd-hook sequences and symmetric-group degrees.
//
// Nodes are (row, column), both 1-based; (i,j) lies in the diagram iff
// j <= parts[i-1]. Partitions are stored weakly decreasing.

#include <lie_degrees/bigint.hpp>

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace lie_degrees {

struct Node {
  int i = 1;  // row
  int j = 1;  // column
  auto operator<=>(const Node&) const = default;
};

inline std::string to_string(const Node& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

class Partition {
 public:
  Partition() = default;

  /// Throws PreconditionError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      require(parts_[k] >= 1, "partition parts must be positive");
      require(k == 0 || parts_[k - 1] >= parts_[k], "partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Drops zero parts and sorts; accepts any order.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part i (1-based); zero past the last row.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  bool contains(Node c) const { return c.i >= 1 && c.j >= 1 && c.j <= part(c.i); }

  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

inline std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.parts().size(); ++k) {
    if (k) s += ",";
    s += std::to_string(p.parts()[k]);
  }
  return s + ")";
}

inline Partition transpose(const Partition& p) {
  std::vector<int> cols;
  if (!p.empty()) {
    cols.assign(static_cast<std::size_t>(p.part(1)), 0);
    for (int r : p.parts())
      for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

/// Hook length 1 + arm + leg of a node inside the diagram.
inline int hook_length(const Partition& p, const Partition& conj, Node c) {
  return 1 + (p.part(c.i) - c.j) + (conj.part(c.j) - c.i);
}

struct HookTable {
  std::map<Node, int> length;
  BigInt product = 1;  // P(lambda)

  std::vector<int> multiset() const {
    std::vector<int> out;
    out.reserve(length.size());
    for (const auto& [node, h] : length) out.push_back(h);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline HookTable hooks(const Partition& p) {
  HookTable t;
  const Partition conj = transpose(p);
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) {
      int h = hook_length(p, conj, {i, j});
      t.length.emplace(Node{i, j}, h);
      t.product *= h;
    }
  return t;
}

/// Product of hook lengths without building the table.
inline BigInt hook_product(const Partition& p) {
  const Partition conj = transpose(p);
  BigInt prod = 1;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) prod *= hook_length(p, conj, {i, j});
  return prod;
}

/// Degree n!/P(lambda) of the irreducible character of S_n.
inline BigInt sym_degree(const Partition& p) {
  return exact_div(factorial(static_cast<unsigned long>(p.size())), hook_product(p), "sym_degree");
}

struct AddRemove {
  std::vector<Node> addable;    // sorted by row
  std::vector<Node> removable;  // sorted by row
};

inline AddRemove addable_removable(const Partition& p) {
  AddRemove out;
  const int k = p.length();
  for (int i = 1; i <= k + 1; ++i) {
    if (i == 1 || p.part(i) < p.part(i - 1)) out.addable.push_back({i, p.part(i) + 1});
  }
  for (int i = 1; i <= k; ++i) {
    if (i == k || p.part(i) > p.part(i + 1)) out.removable.push_back({i, p.part(i)});
  }
  return out;
}

inline Partition add_node(const Partition& p, Node c) {
  require(c.j == p.part(c.i) + 1 && (c.i == 1 || p.part(c.i - 1) >= c.j),
          "node is not addable");
  std::vector<int> parts = p.parts();
  if (c.i > p.length())
    parts.push_back(1);
  else
    ++parts[static_cast<std::size_t>(c.i - 1)];
  return Partition(std::move(parts));
}

inline Partition remove_node(const Partition& p, Node c) {
  require(c.j == p.part(c.i) && c.j >= 1 && p.part(c.i + 1) < c.j, "node is not removable");
  std::vector<int> parts = p.parts();
  if (--parts[static_cast<std::size_t>(c.i - 1)] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

enum class Dominance { Less, Greater, Equal, Incomparable };

inline std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::Less: return "Less";
    case Dominance::Greater: return "Greater";
    case Dominance::Equal: return "Equal";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

/// Less means nu strictly dominates mu; Greater the reverse.
inline Dominance dominance(const Partition& mu, const Partition& nu) {
  require(mu.size() == nu.size(), "dominance needs partitions of the same size");
  if (mu == nu) return Dominance::Equal;
  bool mu_ahead = false, nu_ahead = false;
  int sm = 0, sn = 0;
  const int len = std::max(mu.length(), nu.length());
  for (int i = 1; i <= len; ++i) {
    sm += mu.part(i);
    sn += nu.part(i);
    if (sm > sn) mu_ahead = true;
    if (sn > sm) nu_ahead = true;
  }
  if (mu_ahead && nu_ahead) return Dominance::Incomparable;
  return nu_ahead ? Dominance::Less : Dominance::Greater;
}

/// True when a dominates b or equals it.
inline bool dominates_or_equal(const Partition& a, const Partition& b) {
  Dominance d = dominance(b, a);
  return d == Dominance::Less || d == Dominance::Equal;
}

class BetaSet {
 public:
  BetaSet() = default;
  explicit BetaSet(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      require(entries_[k] >= 0, "beta-set entries must be non-negative");
      require(k == 0 || entries_[k - 1] < entries_[k], "beta-set entries must increase strictly");
    }
  }
  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool contains(int v) const { return std::binary_search(entries_.begin(), entries_.end(), v); }
  bool operator==(const BetaSet&) const = default;

 private:
  std::vector<int> entries_;
};

/// Beta-set of the given size (default: number of parts).
inline BetaSet beta_set(const Partition& p, int size = -1) {
  if (size < 0) size = p.length();
  require(size >= p.length(), "beta-set size must be at least the number of parts");
  std::vector<int> e(static_cast<std::size_t>(size));
  for (int t = 1; t <= size; ++t) e[static_cast<std::size_t>(size - t)] = p.part(t) + size - t;
  return BetaSet(std::move(e));
}

inline Partition partition_of(const BetaSet& b) {
  std::vector<int> parts;
  const int r = b.size();
  for (int idx = r - 1; idx >= 0; --idx) {
    int v = b.entries()[static_cast<std::size_t>(idx)] - idx;
    if (v > 0) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

/// A hook read off a beta-set: a bead at `top` and a gap at `bottom` below it.
struct BetaHook {
  int top = 0;
  int bottom = 0;
  int length() const { return top - bottom; }
  auto operator<=>(const BetaHook&) const = default;
};

inline std::vector<BetaHook> beta_hooks(const BetaSet& b) {
  std::vector<BetaHook> out;
  for (int k : b.entries())
    for (int i = 0; i < k; ++i)
      if (!b.contains(i)) out.push_back({k, i});
  return out;
}

/// Cell of the diagram corresponding to a beta-set hook.
inline Node cell_of(const BetaSet& b, BetaHook h) {
  const auto& e = b.entries();
  auto it = std::lower_bound(e.begin(), e.end(), h.top);
  require(it != e.end() && *it == h.top && !b.contains(h.bottom) && h.bottom < h.top,
          "not a hook of this beta-set");
  int row = b.size() - static_cast<int>(it - e.begin());
  int gaps = 0;
  for (int m = 0; m <= h.bottom; ++m)
    if (!b.contains(m)) ++gaps;
  return {row, gaps};
}

struct OddHook {
  Node cell;
  int length = 0;
};

namespace detail {

inline std::vector<BetaHook> odd_hooks_of_beta(const BetaSet& b, int n) {
  // Largest j in B with j-2 >= 0 and j-2 not in B.
  int chosen = -1;
  for (auto it = b.entries().rbegin(); it != b.entries().rend(); ++it) {
    int j = *it;
    if (j >= 2 && !b.contains(j - 2)) {
      chosen = j;
      break;
    }
  }
  const std::size_t want = static_cast<std::size_t>((n + 1) / 2);
  if (chosen < 0) {
    // 2-core: every hook is odd; keep the smallest ceil(n/2).
    std::vector<BetaHook> all = beta_hooks(b);
    std::stable_sort(all.begin(), all.end(), [&](const BetaHook& x, const BetaHook& y) {
      if (x.length() != y.length()) return x.length() < y.length();
      return cell_of(b, x) < cell_of(b, y);
    });
    all.resize(std::min(want, all.size()));
    return all;
  }
  const int j = chosen;
  std::vector<int> next = b.entries();
  *std::find(next.begin(), next.end(), j) = j - 2;
  std::sort(next.begin(), next.end());
  const BetaSet smaller(next);
  std::vector<BetaHook> lifted;
  lifted.reserve(want);
  lifted.push_back(smaller.contains(j - 1) ? BetaHook{j - 1, j - 2} : BetaHook{j, j - 1});
  for (BetaHook h : odd_hooks_of_beta(smaller, n - 2)) {
    if (h.top == j - 2)
      h.top = j;
    else if (h.bottom == j)
      h.bottom = j - 2;
    lifted.push_back(h);
  }
  return lifted;
}

}  // namespace detail

/// ceil(n/2) hooks at pairwise distinct cells, all of odd length, sorted so
/// that the i-th length is at most 2i-1. Built by repeatedly removing
/// 2-hooks down to the 2-core and lifting back.
inline std::vector<OddHook> odd_hook_sequence(const Partition& p) {
  const BetaSet b = beta_set(p);
  std::vector<OddHook> out;
  for (BetaHook h : detail::odd_hooks_of_beta(b, p.size())) out.push_back({cell_of(b, h), h.length()});
  std::stable_sort(out.begin(), out.end(), [](const OddHook& x, const OddHook& y) {
    if (x.length != y.length) return x.length < y.length;
    return x.cell < y.cell;
  });
  return out;
}

inline std::vector<int> odd_hook_lengths(const Partition& p) {
  std::vector<int> out;
  for (const OddHook& h : odd_hook_sequence(p)) out.push_back(h.length);
  return out;
}

/// Visits every partition of n in reverse lexicographic order.
inline void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  require(n >= 0, "n must be non-negative");
  if (n == 0) {
    visit(Partition());
    return;
  }
  std::vector<int> a{n};
  while (true) {
    visit(Partition(a));
    // Next partition: find the rightmost part > 1.
    int rem = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++rem;
    }
    if (a.empty()) return;
    int v = --a.back();
    ++rem;
    while (rem > v) {
      a.push_back(v);
      rem -= v;
    }
    a.push_back(rem);
  }
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace lie_degrees

#endif  // LIE_DEGREES_PARTITIONS_HPP
