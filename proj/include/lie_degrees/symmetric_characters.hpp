#ifndef LIE_DEGREES_SYMMETRIC_CHARACTERS_HPP
#define LIE_DEGREES_SYMMETRIC_CHARACTERS_HPP

// Down-up moves on Young diagrams, the octuple ratio, witness search for
// degree ratios, alternating-group degree lists and epsilon(G).

#include <lie_degrees/bigint.hpp>
#include <lie_degrees/partitions.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace lie_degrees {

struct DownUpMove {
  Node remove;
  Node add;
  auto operator<=>(const DownUpMove&) const = default;
};

struct Neighbor {
  DownUpMove move;
  Partition result;
};

/// All (remove, add) pairs: remove a removable node, then add any addable
/// node of the smaller diagram (possibly the same one).
inline std::vector<Neighbor> downup_neighborhood(const Partition& d) {
  require(d.size() >= 1, "down-up neighbourhood needs n >= 1");
  std::vector<Neighbor> out;
  for (Node r : addable_removable(d).removable) {
    Partition smaller = remove_node(d, r);
    for (Node a : addable_removable(smaller).addable) out.push_back({{r, a}, add_node(smaller, a)});
  }
  return out;
}

inline Partition apply_move(const Partition& d, const DownUpMove& m) {
  return add_node(remove_node(d, m.remove), m.add);
}

struct OctupleMove {
  DownUpMove first;   // (i1,j1) removed, (i2,j2) added
  DownUpMove second;  // (i3,j3) removed, (i4,j4) added
};

/// Rows and columns of the four cells are pairwise distinct.
inline bool coordinates_distinct(const OctupleMove& m) {
  const Node c[4] = {m.first.remove, m.first.add, m.second.remove, m.second.add};
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y)
      if (c[x].i == c[y].i || c[x].j == c[y].j) return false;
  return true;
}

struct OctupleDiagrams {
  Partition d12;
  Partition d34;
  Partition d1234;
};

/// Throws PreconditionError if either move is illegal.
inline OctupleDiagrams octuple_diagrams(const Partition& d, const OctupleMove& m) {
  require(coordinates_distinct(m), "octuple cells must have distinct rows and columns");
  OctupleDiagrams out{apply_move(d, m.first), apply_move(d, m.second), {}};
  out.d1234 = apply_move(out.d12, m.second);
  return out;
}

/// P(D) P(D1234) / (P(D12) P(D34)) straight from hook products.
inline Rational octuple_ratio_direct(const Partition& d, const OctupleMove& m) {
  OctupleDiagrams g = octuple_diagrams(d, m);
  Rational r(hook_product(d) * hook_product(g.d1234), hook_product(g.d12) * hook_product(g.d34));
  r.canonicalize();
  return r;
}

namespace detail {

inline int corner_hook(const Partition& d, const Partition& conj, Node u, Node v) {
  return hook_length(d, conj, {std::min(u.i, v.i), std::min(u.j, v.j)});
}

inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace detail

/// a(a+2)/(a+1)^2 * b(b-2)/(b-1)^2 with a from the two added cells and b
/// from the two removed cells. Differs from the actual ratio; kept for
/// comparison only.
inline Rational octuple_ratio_two_factor(const Partition& d, const OctupleMove& m) {
  octuple_diagrams(d, m);
  const Partition conj = transpose(d);
  long a = detail::corner_hook(d, conj, m.first.add, m.second.add);
  long b = detail::corner_hook(d, conj, m.first.remove, m.second.remove);
  return detail::frac(a * (a + 2), (a + 1) * (a + 1)) * detail::frac(b * (b - 2), (b - 1) * (b - 1));
}

/// Closed form: the two-factor product times c^2/(c^2-1) * e^2/(e^2-1),
/// where c and e are the corner hooks of the cross pairs (i1,j1)/(i4,j4)
/// and (i3,j3)/(i2,j2).
inline Rational octuple_ratio_closed(const Partition& d, const OctupleMove& m) {
  octuple_diagrams(d, m);
  const Partition conj = transpose(d);
  long c = detail::corner_hook(d, conj, m.first.remove, m.second.add);
  long e = detail::corner_hook(d, conj, m.second.remove, m.first.add);
  return octuple_ratio_two_factor(d, m) * detail::frac(c * c, c * c - 1) *
         detail::frac(e * e, e * e - 1);
}

/// Both routes; throws InternalError if they disagree.
inline Rational octuple_ratio(const Partition& d, const OctupleMove& m) {
  Rational direct = octuple_ratio_direct(d, m);
  Rational closed = octuple_ratio_closed(d, m);
  if (direct != closed)
    throw InternalError("octuple ratio mismatch at " + to_string(d) + ": " + to_string(direct) +
                        " vs " + to_string(closed));
  return direct;
}

/// Ordered pairs of down-up moves whose four cells have distinct rows and
/// columns, in enumeration order of the neighbourhood.
inline std::vector<OctupleMove> legal_octuples(const Partition& d) {
  std::vector<OctupleMove> out;
  std::vector<Neighbor> nb = downup_neighborhood(d);
  for (const Neighbor& x : nb)
    for (const Neighbor& y : nb) {
      OctupleMove m{x.move, y.move};
      if (coordinates_distinct(m)) out.push_back(m);
    }
  return out;
}

struct RatioWitness {
  Partition gamma;
  Rational ratio;  // sym_degree(gamma) / sym_degree(delta)
  bool from_octuple = false;
};

/// Searches the down-up neighbourhood (largest |ratio-1| first), then all
/// octuple results, for gamma with ratio >= delta and ratio not in S.
inline std::optional<RatioWitness> ratio_witness(const Partition& d, const std::vector<Rational>& S,
                                                 const Rational& delta) {
  require(delta > 0, "delta must be positive");
  const BigInt pd = hook_product(d);
  auto ratio_to = [&](const Partition& g) {
    Rational r(pd, hook_product(g));
    r.canonicalize();
    return r;
  };
  auto acceptable = [&](const Rational& r) {
    return r >= delta && std::find(S.begin(), S.end(), r) == S.end();
  };

  std::vector<std::pair<Rational, Partition>> first;
  for (const Neighbor& nb : downup_neighborhood(d)) first.emplace_back(ratio_to(nb.result), nb.result);
  std::stable_sort(first.begin(), first.end(), [](const auto& x, const auto& y) {
    Rational dx = abs(x.first - 1), dy = abs(y.first - 1);
    return dx > dy;
  });
  for (const auto& [r, g] : first)
    if (acceptable(r)) return RatioWitness{g, r, false};

  for (const OctupleMove& m : legal_octuples(d)) {
    Partition g = octuple_diagrams(d, m).d1234;
    Rational r = ratio_to(g);
    if (acceptable(r)) return RatioWitness{g, r, true};
  }
  return std::nullopt;
}

class DegreeMultiset {
 public:
  void add(const BigInt& degree, long count = 1) {
    require(degree >= 1 && count >= 1, "degrees and multiplicities must be positive");
    mult_[degree] += count;
  }

  const std::map<BigInt, long>& entries() const { return mult_; }
  bool empty() const { return mult_.empty(); }

  BigInt b() const {
    require(!mult_.empty(), "empty degree multiset");
    return mult_.rbegin()->first;
  }

  long count() const {
    long c = 0;
    for (const auto& [d, m] : mult_) c += m;
    return c;
  }

  BigInt sum_of_squares() const {
    BigInt s = 0;
    for (const auto& [d, m] : mult_) s += d * d * m;
    return s;
  }

  std::vector<BigInt> sorted() const {
    std::vector<BigInt> out;
    for (const auto& [d, m] : mult_)
      for (long k = 0; k < m; ++k) out.push_back(d);
    return out;
  }

 private:
  std::map<BigInt, long> mult_;
};

inline DegreeMultiset sym_degrees(int n) {
  DegreeMultiset out;
  for_each_partition(n, [&](const Partition& p) { out.add(sym_degree(p)); });
  return out;
}

/// Irreducible degrees of A_n: a self-conjugate label splits into two
/// halves, a conjugate pair restricts to one character.
inline DegreeMultiset alt_degrees(int n) {
  require(n >= 2, "alt_degrees needs n >= 2");
  DegreeMultiset out;
  for_each_partition(n, [&](const Partition& p) {
    Partition t = transpose(p);
    if (t == p)
      out.add(exact_div(sym_degree(p), 2, "alt_degrees"), 2);
    else if (t < p)
      out.add(sym_degree(p));
  });
  return out;
}

/// Sum of squares of the degrees strictly below b, over b^2.
inline Rational epsilon_of(const DegreeMultiset& d) {
  const BigInt b = d.b();
  BigInt num = 0;
  for (const auto& [deg, m] : d.entries())
    if (deg < b) num += deg * deg * m;
  Rational r(num, b * b);
  r.canonicalize();
  return r;
}

}  // namespace lie_degrees

#endif  // LIE_DEGREES_SYMMETRIC_CHARACTERS_HPP
