#ifndef LIE_DEGREES_QEXACT_HPP
#define LIE_DEGREES_QEXACT_HPP

// Exact arithmetic in the parameter q: bracket products [c], their ratio
// bounds, and certified rational enclosures of infinite q-products, ln and
// exp. Verdicts never touch floating point.

#include <lie_degrees/bigint.hpp>
#include <lie_degrees/check.hpp>

#include <algorithm>
#include <utility>
#include <vector>

namespace lie_degrees {

class BracketSeq {
 public:
  BracketSeq() = default;
  explicit BracketSeq(std::vector<int> c) : c_(std::move(c)) {
    for (std::size_t k = 0; k < c_.size(); ++k) {
      require(c_[k] >= 1, "bracket entries must be positive");
      require(k == 0 || c_[k - 1] < c_[k], "bracket entries must increase strictly");
    }
  }
  BracketSeq(std::initializer_list<int> c) : BracketSeq(std::vector<int>(c)) {}

  const std::vector<int>& values() const { return c_; }
  int size() const { return static_cast<int>(c_.size()); }

  /// c + m, entrywise.
  BracketSeq shifted(int m) const {
    std::vector<int> out = c_;
    for (int& v : out) v += m;
    return BracketSeq(std::move(out));
  }

 private:
  std::vector<int> c_;
};

/// [c] = prod (q^c_i - 1).
inline BigInt bracket(const BracketSeq& c, long q) {
  require(q >= 2, "q must be at least 2");
  BigInt r = 1;
  for (int v : c.values()) r *= ipow(q, static_cast<unsigned long>(v)) - 1;
  return r;
}

/// prod (q^c_i + 1).
inline BigInt bracket_plus(const BracketSeq& c, long q) {
  require(q >= 2, "q must be at least 2");
  BigInt r = 1;
  for (int v : c.values()) r *= ipow(q, static_cast<unsigned long>(v)) + 1;
  return r;
}

enum class BracketForm { Minus, Plus };

struct BracketBounds {
  bool lower = false;
  bool upper = false;
  Rational ratio;
  bool both() const { return lower && upper; }
};

/// Minus form: q^s < [c]/[c-1] < q^(s+1), needs c_1 >= 2.
/// Plus form: q^s/2 < prod (q^c_i+1)/(q^(c_i-1)+1) < q^s.
inline BracketBounds bracket_ratio_bounds(const BracketSeq& c, long q, BracketForm form) {
  require(q >= 2, "q must be at least 2");
  require(c.size() >= 1, "bracket sequence must be non-empty");
  const int s = c.size();
  const BigInt qs = ipow(q, static_cast<unsigned long>(s));
  BracketBounds out;
  if (form == BracketForm::Minus) {
    require(c.values().front() >= 2, "minus form needs c_1 >= 2");
    out.ratio = Rational(bracket(c, q), bracket(c.shifted(-1), q));
    out.ratio.canonicalize();
    out.lower = Rational(qs) < out.ratio;
    out.upper = out.ratio < Rational(qs * q);
  } else {
    // c - 1 may start at 0, which is not a bracket sequence; q^0 + 1 = 2.
    BigInt den = 1;
    for (int v : c.values()) den *= ipow(q, static_cast<unsigned long>(v - 1)) + 1;
    out.ratio = Rational(bracket_plus(c, q), den);
    out.ratio.canonicalize();
    out.lower = Rational(qs, 2) < out.ratio;
    out.upper = out.ratio < Rational(qs);
  }
  return out;
}

/// (q^a - 1)/(q^(a-1) - 1), a >= 2.
inline Rational minus_step(int a, long q) {
  require(a >= 2, "minus step needs a >= 2");
  Rational r(ipow(q, static_cast<unsigned long>(a)) - 1, ipow(q, static_cast<unsigned long>(a - 1)) - 1);
  r.canonicalize();
  return r;
}

/// (q^a + 1)/(q^(a-1) + 1), a >= 1.
inline Rational plus_step(int a, long q) {
  require(a >= 1, "plus step needs a >= 1");
  Rational r(ipow(q, static_cast<unsigned long>(a)) + 1, ipow(q, static_cast<unsigned long>(a - 1)) + 1);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Rational intervals

inline constexpr unsigned long kIntervalBits = 256;
inline constexpr unsigned long kWorkingBits = kIntervalBits + 32;  // series partial sums

inline Rational round_down(const Rational& x, unsigned long bits = kIntervalBits) {
  BigInt scaled = BigInt(x.get_num()) << bits;
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  Rational r(f, BigInt(1) << bits);
  r.canonicalize();
  return r;
}

inline Rational round_up(const Rational& x, unsigned long bits = kIntervalBits) {
  BigInt scaled = BigInt(x.get_num()) << bits;
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  Rational r(c, BigInt(1) << bits);
  r.canonicalize();
  return r;
}

struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    require(lo <= hi, "interval needs lo <= hi");
  }
  static RationalInterval point(const Rational& x) { return {x, x}; }

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool subset_of(const RationalInterval& o) const { return o.lo <= lo && hi <= o.hi; }
  Rational width() const { return hi - lo; }
  bool positive() const { return lo > 0; }

  /// Widens the endpoints outward to dyadic rationals.
  RationalInterval rounded(unsigned long bits = kIntervalBits) const {
    return {round_down(lo, bits), round_up(hi, bits)};
  }
};

inline RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}
inline RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}
inline RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}
inline RationalInterval operator*(const Rational& s, const RationalInterval& a) {
  return RationalInterval::point(s) * a;
}
inline RationalInterval reciprocal(const RationalInterval& a) {
  require(a.lo > 0 || a.hi < 0, "reciprocal of an interval containing zero");
  return {1 / a.hi, 1 / a.lo};
}
inline RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  return a * reciprocal(b);
}

namespace detail {

/// Enclosure of atanh(z) for a single rational 0 <= z <= 1/2.
inline RationalInterval atanh_point(const Rational& z) {
  require(z >= 0 && z <= Rational(1, 2), "atanh argument out of range");
  const Rational eps(1, BigInt(1) << (kIntervalBits + 8));
  const Rational z2 = z * z;
  RationalInterval pow = RationalInterval::point(z);
  RationalInterval sum = RationalInterval::point(0);
  long j = 0;
  while (true) {
    sum = sum + (RationalInterval::point(Rational(1, 2 * j + 1)) * pow).rounded(kWorkingBits);
    pow = (pow * RationalInterval::point(z2)).rounded(kWorkingBits);
    ++j;
    // Remaining tail <= z^(2j+1) / ((2j+1)(1 - z^2)).
    Rational tail = pow.hi / (Rational(2 * j + 1) * (1 - z2));
    if (tail < eps || z == 0) {
      sum.hi += tail;
      return sum.rounded();
    }
  }
}

inline const RationalInterval& ln2_interval() {
  static const RationalInterval v = (RationalInterval::point(2) * atanh_point(Rational(1, 3))).rounded();
  return v;
}

/// Enclosure of ln(x) for a single rational x > 0.
inline RationalInterval ln_point(const Rational& x) {
  require(x > 0, "ln needs a positive argument");
  // x = 2^k * y with 1 <= y < 2.
  long k = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
  Rational y = k >= 0 ? Rational(x / Rational(BigInt(1) << static_cast<unsigned long>(k)))
                      : Rational(x * Rational(BigInt(1) << static_cast<unsigned long>(-k)));
  while (y >= 2) {
    y /= 2;
    ++k;
  }
  while (y < 1) {
    y *= 2;
    --k;
  }
  Rational z = (y - 1) / (y + 1);  // in [0, 1/3)
  RationalInterval at{atanh_point(round_down(z)).lo, atanh_point(round_up(z)).hi};
  return (RationalInterval::point(Rational(k)) * ln2_interval() + RationalInterval::point(2) * at).rounded();
}

/// Enclosure of exp(t) for a single rational t.
inline RationalInterval exp_point(const Rational& t) {
  if (t < 0) return reciprocal(exp_point(-t)).rounded();
  // exp(t) = exp(u)^(2^s), 0 <= u <= 1/2.
  unsigned long s = 0;
  Rational u = t;
  while (u > Rational(1, 2)) {
    u /= 2;
    ++s;
  }
  const unsigned long bits = kWorkingBits + s;
  const Rational eps(1, BigInt(1) << (kIntervalBits + 8 + s));
  auto taylor = [&](const Rational& v, bool upper) {
    Rational sum = 0, term = 1;
    long j = 0;
    while (true) {
      sum += term;
      ++j;
      term = upper ? round_up(term * v / j, bits) : round_down(term * v / j, bits);
      // Tail from term j on is at most 2 * v^j / j! for v <= 1/2.
      if (term < eps) return upper ? round_up(sum + 2 * term) : round_down(sum);
    }
  };
  Rational lo = taylor(round_down(u), false), hi = taylor(round_up(u), true);
  for (unsigned long i = 0; i < s; ++i) {
    lo = round_down(lo * lo, bits);
    hi = round_up(hi * hi, bits);
  }
  return RationalInterval{lo, hi}.rounded();
}

}  // namespace detail

inline RationalInterval ln(const RationalInterval& a) {
  require(a.lo > 0, "ln needs a positive interval");
  return {detail::ln_point(a.lo).lo, detail::ln_point(a.hi).hi};
}

inline RationalInterval exp(const RationalInterval& a) {
  return {detail::exp_point(a.lo).lo, detail::exp_point(a.hi).hi};
}

/// a^e for a > 0 and rational exponent e, via exp(e ln a).
inline RationalInterval pow(const RationalInterval& a, const Rational& e) {
  return exp((RationalInterval::point(e) * ln(a)).rounded());
}

/// log_base(a) for base > 1.
inline RationalInterval log_base(const RationalInterval& a, const Rational& base) {
  require(base > 1, "log base must exceed 1");
  return (ln(a) / ln(RationalInterval::point(base))).rounded();
}

// ---------------------------------------------------------------------------
// Infinite q-products

inline constexpr int kDefaultTruncation = 40;

/// Encloses prod_{i>=1} (1 - q^-i): pentagonal partial sum over exponents
/// <= m, widened by q^-m. That dominates the series tail sum_{i>m} q^-i and
/// also covers every finite product prod_{i<=n} (1 - q^-i) with n >= m.
inline RationalInterval euler_interval(const BigInt& q, int m = kDefaultTruncation) {
  require(q >= 2, "q must be at least 2");
  require(m >= 2, "truncation order must be at least 2");
  Rational s = 1;
  for (long k = 1;; ++k) {
    long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
    if (e1 > m) break;
    const int sign = (k % 2) ? -1 : 1;
    s += Rational(sign, ipow(q, static_cast<unsigned long>(e1)));
    if (e2 <= m) s += Rational(sign, ipow(q, static_cast<unsigned long>(e2)));
  }
  const Rational tail(1, ipow(q, static_cast<unsigned long>(m)));
  return {s - tail, s + tail};
}

/// prod_{i=1}^{n} (1 - q^-i), exact.
inline Rational finite_minus_product(const BigInt& q, int n) {
  Rational r = 1;
  for (int i = 1; i <= n; ++i) {
    Rational inv(1, ipow(q, static_cast<unsigned long>(i)));
    r *= 1 - inv;
  }
  return r;
}

/// prod_{i=k}^{K} (1 + q^-i), exact.
inline Rational finite_plus_product(const BigInt& q, int k, int K) {
  Rational r = 1;
  for (int i = k; i <= K; ++i) r *= 1 + Rational(1, ipow(q, static_cast<unsigned long>(i)));
  return r;
}

/// Encloses prod_{i>=k} (1 - q^-i).
inline RationalInterval minus_product_from(const BigInt& q, int k, int m = kDefaultTruncation) {
  require(k >= 1, "k must be positive");
  return euler_interval(q, m) / RationalInterval::point(finite_minus_product(q, k - 1));
}

/// Encloses prod_{i>=k} (1 + q^-i) = prod (1 - q^-2i) / prod (1 - q^-i).
inline RationalInterval plus_product_from(const BigInt& q, int k, int m = kDefaultTruncation) {
  return minus_product_from(q * q, k, m) / minus_product_from(q, k, m);
}

/// prod_{i=1}^{n} (1 - (-1/q)^i), exact.
inline Rational alternating_product(const BigInt& q, int n) {
  Rational r = 1, x = 1;
  const Rational step(-1, q);
  for (int i = 1; i <= n; ++i) {
    x *= step;
    r *= 1 - x;
  }
  return r;
}

/// 1 - x - x^2 + x^5.
inline Rational poly5(const Rational& x) { return 1 - x - x * x + rpow(x, 5); }

/// Exact test of poly5(k/N) >= exp(-alpha k/N) with alpha = 2 ln(32/9),
/// i.e. poly5(k/N)^N >= (9/32)^(2k).
inline bool poly5_dominates_exp(long k, long N) {
  require(N >= 1 && k >= 0 && 2 * k <= N, "grid point must lie in [0, 1/2]");
  Rational x(k, N);
  x.canonicalize();
  Rational p = poly5(x);
  if (p <= 0) return false;
  return rpow(p, N) >= rpow(Rational(9, 32), 2 * k);
}

namespace detail {

inline std::string dec(const Rational& r) { return to_decimal(r); }

inline CheckRecord interval_record(std::string id, long q, const RationalInterval& iv, bool pass,
                                   const Rational& threshold) {
  CheckRecord r;
  r.id = std::move(id);
  r.params = {{"q", std::to_string(q)}};
  r.pass = pass;
  r.values = {{"lo", dec(iv.lo)}, {"hi", dec(iv.hi)}, {"threshold", to_string(threshold)}};
  return r;
}

}  // namespace detail

struct PlusConstant {
  int k;
  Rational bound;
};

inline std::vector<PlusConstant> plus_constants() {
  return {{1, Rational(12, 5)}, {2, Rational(8, 5)}, {3, Rational(32, 25)}, {5, Rational(16, 15)}};
}

/// Every estimate on the infinite q-products for 2 <= q <= q_max, plus the
/// two decimal thresholds quoted for q = 2 and q = 4.
inline std::vector<CheckRecord> product_bound_suite(long q_max, int m = kDefaultTruncation) {
  require(q_max >= 2, "q_max must be at least 2");
  std::vector<CheckRecord> out;
  {
    RationalInterval e2 = euler_interval(2, m);
    Rational t(2887, 10000);
    out.push_back(detail::interval_record("euler_q2_above_0.2887", 2, e2, e2.lo > t, t));
    RationalInterval e4 = euler_interval(4, m);
    Rational u(6876, 10000);
    out.push_back(detail::interval_record("euler_q4_below_0.6876", 4, e4, e4.hi < u, u));
  }
  {
    CheckRecord g;
    g.id = "poly5_vs_exp_grid";
    g.params = {{"grid", "k/64, 0<=k<=32"}};
    for (long k = 0; k <= 32 && g.pass; ++k)
      if (!poly5_dominates_exp(k, 64)) {
        g.pass = false;
        g.witness = "k=" + std::to_string(k);
      }
    out.push_back(g);
  }
  for (long q = 2; q <= q_max; ++q) {
    const BigInt Q(q);
    const Rational x(1, q);
    RationalInterval e = euler_interval(Q, m);
    out.push_back(detail::interval_record("euler_above_poly5", q, e, e.lo > poly5(x), poly5(x)));

    CheckRecord ex;
    ex.id = "poly5_vs_exp";
    ex.params = {{"q", std::to_string(q)}};
    ex.pass = poly5_dominates_exp(1, q);
    ex.values = {{"poly5", to_string(poly5(x))}};
    out.push_back(ex);

    RationalInterval t2 = minus_product_from(Q, 2, m);
    out.push_back(detail::interval_record("tail_from_2_above_9/16", q, t2, t2.lo > Rational(9, 16),
                                          Rational(9, 16)));

    for (const PlusConstant& c : plus_constants()) {
      RationalInterval p = plus_product_from(Q, c.k, m);
      CheckRecord r = detail::interval_record("plus_tail_k" + std::to_string(c.k), q, p, p.hi < c.bound, c.bound);
      r.params.emplace_back("k", std::to_string(c.k));
      out.push_back(r);
    }

    CheckRecord alt;
    alt.id = "alternating_bracket";
    alt.params = {{"q", std::to_string(q)}, {"n", "1..50"}};
    for (int n = 1; n <= 50 && alt.pass; ++n) {
      Rational v = alternating_product(Q, n);
      if (!(v > 1 && v <= Rational(3, 2))) {
        alt.pass = false;
        alt.witness = "n=" + std::to_string(n) + " value=" + to_string(v);
      }
    }
    out.push_back(alt);
  }
  return out;
}

}  // namespace lie_degrees

#endif  // LIE_DEGREES_QEXACT_HPP
