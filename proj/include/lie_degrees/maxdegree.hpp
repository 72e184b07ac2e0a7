#ifndef LIE_DEGREES_MAXDEGREE_HPP
#define LIE_DEGREES_MAXDEGREE_HPP

// Largest character degrees of classical groups: orders, counts of
// irreducible polynomials, exact b(GL_n(q)) over centralizer types, the
// Seitz bound, logarithmic brackets for c(G), epsilon certificates and
// merge ratios over F_2.

#include <lie_degrees/bigint.hpp>
#include <lie_degrees/check.hpp>
#include <lie_degrees/partitions.hpp>
#include <lie_degrees/qexact.hpp>
#include <lie_degrees/unipotent.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lie_degrees {

enum class GroupFamily { A, A2, B, C, D, D2 };

inline std::string to_string(GroupFamily f) {
  switch (f) {
    case GroupFamily::A: return "A";
    case GroupFamily::A2: return "2A";
    case GroupFamily::B: return "B";
    case GroupFamily::C: return "C";
    case GroupFamily::D: return "D";
    case GroupFamily::D2: return "2D";
  }
  return "?";
}

inline GroupFamily parse_group_family(const std::string& s) {
  if (s == "A") return GroupFamily::A;
  if (s == "2A") return GroupFamily::A2;
  if (s == "B") return GroupFamily::B;
  if (s == "C") return GroupFamily::C;
  if (s == "D") return GroupFamily::D;
  if (s == "2D") return GroupFamily::D2;
  throw PreconditionError("unknown group family: " + s);
}

inline bool is_prime_power(long q) {
  if (q < 2) return false;
  long p = 2;
  while (p * p <= q && q % p) ++p;
  if (p * p > q) return true;  // q prime
  while (q % p == 0) q /= p;
  return q == 1;
}

/// For type A and 2A, n is the matrix dimension (SL_n, SU_n); otherwise the
/// rank. The sign of D/2D is implied by the family.
struct GroupSpec {
  GroupFamily family = GroupFamily::A;
  int n = 1;
  long q = 2;

  GroupSpec() = default;
  GroupSpec(GroupFamily f, int n_, long q_) : family(f), n(n_), q(q_) {
    require(q >= 2, "q must be at least 2");
    require(n >= 1, "n must be positive");
    require(!(f == GroupFamily::D || f == GroupFamily::D2) || n >= 2, "type D needs n >= 2");
  }

  bool prime_power_q() const { return is_prime_power(q); }
  int epsilon() const { return family == GroupFamily::D2 ? -1 : 1; }
};

inline std::string to_string(const GroupSpec& g) {
  return to_string(g.family) + "(n=" + std::to_string(g.n) + ",q=" + std::to_string(g.q) + ")";
}

struct OrderParts {
  BigInt p_part;
  BigInt pprime_part;
};

/// |G|_p and |G|_{p'} of the simply connected group.
inline OrderParts order_parts(const GroupSpec& g) {
  const long n = g.n, q = g.q;
  OrderParts o;
  switch (g.family) {
    case GroupFamily::A:
    case GroupFamily::A2: {
      o.p_part = ipow(q, static_cast<unsigned long>(n * (n - 1) / 2));
      o.pprime_part = 1;
      const int sign = g.family == GroupFamily::A ? 1 : -1;
      for (long i = 2; i <= n; ++i) {
        BigInt t = ipow(q, static_cast<unsigned long>(i));
        o.pprime_part *= (sign == 1 || i % 2 == 0) ? BigInt(t - 1) : BigInt(t + 1);
      }
      return o;
    }
    case GroupFamily::B:
    case GroupFamily::C:
      return {classical_p_part(Family::BC, n, q), classical_pprime_part(Family::BC, n, q)};
    case GroupFamily::D:
      return {classical_p_part(Family::D, n, q), classical_pprime_part(Family::D, n, q)};
    case GroupFamily::D2:
      return {classical_p_part(Family::D2, n, q), classical_pprime_part(Family::D2, n, q)};
  }
  throw InternalError("unreachable");
}

inline BigInt group_order(const GroupSpec& g) {
  OrderParts o = order_parts(g);
  return o.p_part * o.pprime_part;
}

// ---------------------------------------------------------------------------
// Irreducible polynomials

inline int mobius(long n) {
  int m = 1;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  return n > 1 ? -m : m;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

/// Monic irreducible polynomials of degree d over F_q.
inline BigInt count_irred(long q, long d) {
  require(is_prime_power(q), "q must be a prime power");
  require(d >= 1, "d must be positive");
  BigInt s = 0;
  for (long e : divisors(d)) s += mobius(e) * ipow(q, static_cast<unsigned long>(d / e));
  return exact_div(s, d, "count_irred");
}

/// Monic irreducibles f != t of degree d with f equal to its reciprocal up
/// to a scalar.
inline BigInt count_self_dual(long q, long d) {
  require(is_prime_power(q), "q must be a prime power");
  require(d >= 1, "d must be positive");
  if (d == 1) return q % 2 ? 2 : 1;  // t-1, t+1
  if (d % 2) return 0;
  // Roots a of order dividing q^e + 1 (d = 2e) generating F_{q^d}.
  const long e = d / 2;
  const BigInt qe1 = ipow(q, static_cast<unsigned long>(e)) + 1;
  BigInt s = 0;
  for (long k : divisors(d)) s += mobius(d / k) * gcd(qe1, ipow(q, static_cast<unsigned long>(k)) - 1);
  return exact_div(s, d, "count_self_dual");
}

/// Degree-d irreducibles other than t that are not self-dual.
inline BigInt count_irred_nondual(long q, long d) {
  BigInt total = d == 1 ? BigInt(q - 1) : count_irred(q, d);
  return total - count_self_dual(q, d);
}

/// 3 q^d / 4d <= n_d < q^d / d, claimed for d >= 3.
inline bool poly_bracket_holds(long q, long d) {
  BigInt nd = count_irred(q, d), qd = ipow(q, static_cast<unsigned long>(d));
  return 3 * qd <= 4 * d * nd && nd * d < qd;
}

inline bool poly2_upper_holds(long q, long d) {
  return count_irred_nondual(q, d) * d < ipow(q, static_cast<unsigned long>(d));
}

inline bool poly2_lower_applies(long q, long d) { return (d >= 3 && q >= 3) || (d >= 5 && q == 2); }

inline bool poly2_lower_holds(long q, long d) {
  return 3 * ipow(q, static_cast<unsigned long>(d)) <= 4 * d * count_irred_nondual(q, d);
}

// ---------------------------------------------------------------------------
// Centralizer types and b(GL_n(q))

/// Multiset of factors GL_k(q^d), listed by d ascending then k descending.
struct CentralizerTypeGL {
  struct Factor {
    int k;
    int d;
    bool operator==(const Factor&) const = default;
  };
  std::vector<Factor> factors;

  void normalize() {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
      return a.d != b.d ? a.d < b.d : a.k > b.k;
    });
  }

  int size() const {
    int n = 0;
    for (const Factor& f : factors) n += f.k * f.d;
    return n;
  }

  /// Number of factors with field degree d.
  int multiplicity(int d) const {
    int a = 0;
    for (const Factor& f : factors) a += f.d == d;
    return a;
  }

  /// a_1 <= q-1 and a_d <= n_d(q).
  bool within_budget(long q) const {
    std::map<int, int> a;
    for (const Factor& f : factors) ++a[f.d];
    for (auto [d, m] : a) {
      BigInt cap = d == 1 ? BigInt(q - 1) : count_irred(q, d);
      if (m > cap) return false;
    }
    return true;
  }

  bool operator==(const CentralizerTypeGL&) const = default;
};

inline std::string to_string(const CentralizerTypeGL& t) {
  std::string s;
  for (const auto& f : t.factors) {
    if (!s.empty()) s += " x ";
    s += "GL_" + std::to_string(f.k) + "(q^" + std::to_string(f.d) + ")";
  }
  return s.empty() ? "1" : s;
}

/// Lexicographic order on the factor lists, factors compared as (d, -k).
inline bool type_less(const CentralizerTypeGL& a, const CentralizerTypeGL& b) {
  return std::lexicographical_compare(
      a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
      [](const auto& x, const auto& y) { return x.d != y.d ? x.d < y.d : x.k > y.k; });
}

/// prod_j prod_{i<=k_j} (1 - q^{-i d_j}).
inline Rational type_denominator(const CentralizerTypeGL& t, long q) {
  Rational r = 1;
  for (const auto& f : t.factors)
    for (int i = 1; i <= f.k; ++i) r *= 1 - Rational(1, ipow(q, static_cast<unsigned long>(i * f.d)));
  return r;
}

/// (G:C)_{p'} St_C(1) for GL_n(q).
inline BigInt type_degree(const CentralizerTypeGL& t, long q) {
  const int n = t.size();
  long e = 0;
  for (const auto& f : t.factors) e += static_cast<long>(f.d) * f.k * (f.k - 1) / 2;
  BigInt num = ipow(q, static_cast<unsigned long>(e));
  for (int i = 1; i <= n; ++i) num *= ipow(q, static_cast<unsigned long>(i)) - 1;
  BigInt den = 1;
  for (const auto& f : t.factors)
    for (int i = 1; i <= f.k; ++i) den *= ipow(q, static_cast<unsigned long>(i * f.d)) - 1;
  return exact_div(num, den, "type_degree");
}

struct BGLResult {
  int n = 0;
  long q = 0;
  BigInt b;
  CentralizerTypeGL witness;
  Rational c;  // b / q^{n(n-1)/2}
};

namespace detail {

struct TypeCandidate {
  Rational value;  // type denominator, minimized
  CentralizerTypeGL type;
};

inline bool better(const TypeCandidate& a, const TypeCandidate& b) {
  if (a.value != b.value) return a.value < b.value;
  return type_less(a.type, b.type);
}

/// Visits partitions of m with at most `parts` parts (parts may be 0 for m=0).
inline void partitions_bounded(int m, int parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      visit(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == parts) return;
    for (int k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  rec(m, m);
}

}  // namespace detail

/// b(GL_n(q)) for every n <= n_max, by dynamic programming over field
/// degrees: the best block sizes for each (d, m) are found exhaustively,
/// then combined by a knapsack over d. Ties go to the smaller factor list.
inline std::vector<BGLResult> b_gl_table(int n_max, long q) {
  require(is_prime_power(q), "q must be a prime power");
  require(n_max >= 1, "n must be positive");
  // best[t] = optimum over types of total size t built from degrees <= d.
  std::vector<std::optional<detail::TypeCandidate>> best(static_cast<std::size_t>(n_max) + 1);
  best[0] = detail::TypeCandidate{1, {}};
  for (int d = 1; d <= n_max; ++d) {
    const BigInt cap_big = d == 1 ? BigInt(q - 1) : count_irred(q, d);
    const int cap = cap_big > n_max ? n_max : static_cast<int>(cap_big.get_si());
    // group[m]: best multiset of block sizes k with sum m, at most cap blocks.
    std::vector<std::optional<detail::TypeCandidate>> group(static_cast<std::size_t>(n_max / d) + 1);
    for (int m = 0; m <= n_max / d; ++m)
      detail::partitions_bounded(m, cap, [&](const std::vector<int>& ks) {
        detail::TypeCandidate c{1, {}};
        for (int k : ks) c.type.factors.push_back({k, d});
        c.value = type_denominator(c.type, q);
        auto& slot = group[static_cast<std::size_t>(m)];
        if (!slot || detail::better(c, *slot)) slot = c;
      });
    std::vector<std::optional<detail::TypeCandidate>> next = best;
    for (int t = 0; t <= n_max; ++t) {
      if (!best[static_cast<std::size_t>(t)]) continue;
      for (int m = 1; t + m * d <= n_max; ++m) {
        const auto& g = group[static_cast<std::size_t>(m)];
        if (!g) continue;
        detail::TypeCandidate c = *best[static_cast<std::size_t>(t)];
        c.value *= g->value;
        c.type.factors.insert(c.type.factors.end(), g->type.factors.begin(), g->type.factors.end());
        auto& slot = next[static_cast<std::size_t>(t + m * d)];
        if (!slot || detail::better(c, *slot)) slot = c;
      }
    }
    best = std::move(next);
  }
  std::vector<BGLResult> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto& c = best[static_cast<std::size_t>(n)];
    if (!c) throw InternalError("b_gl_table: no admissible type");
    BGLResult r;
    r.n = n;
    r.q = q;
    r.witness = c->type;
    r.witness.normalize();
    r.c = finite_minus_product(BigInt(q), n) / c->value;
    r.b = type_degree(r.witness, q);
    Rational check = Rational(r.b) / Rational(ipow(q, static_cast<unsigned long>(n) * (n - 1) / 2));
    if (check != r.c) throw InternalError("b_gl_table: two routes disagree");
    out.push_back(r);
  }
  return out;
}

inline BGLResult b_gl_exact(int n, long q) { return b_gl_table(n, q).back(); }

/// All centralizer types of GL_n(q) within the polynomial budgets.
inline std::vector<CentralizerTypeGL> enumerate_centralizer_types(int n, long q) {
  require(is_prime_power(q), "q must be a prime power");
  std::vector<CentralizerTypeGL> out;
  CentralizerTypeGL cur;
  std::function<void(int, int)> rec = [&](int d, int rem) {
    if (rem == 0) {
      CentralizerTypeGL t = cur;
      t.normalize();
      out.push_back(t);
      return;
    }
    if (d > rem) return;
    const BigInt cap_big = d == 1 ? BigInt(q - 1) : count_irred(q, d);
    const int cap = cap_big > n ? n : static_cast<int>(cap_big.get_si());
    for (int m = rem / d; m >= 0; --m)
      detail::partitions_bounded(m, cap, [&](const std::vector<int>& ks) {
        for (int k : ks) cur.factors.push_back({k, d});
        rec(d + 1, rem - m * d);
        cur.factors.resize(cur.factors.size() - ks.size());
      });
  };
  rec(1, n);
  return out;
}

// ---------------------------------------------------------------------------
// Seitz bound and brackets

/// floor(|L|_{p'} / minimal torus order): (q-1)^{n-1} for A, (q-1)^n for
/// B, C, D, 2D, and (q^2-1)^{n/2}/(q+1) for 2A.
inline BigInt seitz_bound(const GroupSpec& g) {
  const BigInt pp = order_parts(g).pprime_part;
  const long q = g.q, n = g.n;
  switch (g.family) {
    case GroupFamily::A:
      return floor_of(Rational(pp, ipow(q - 1, static_cast<unsigned long>(n - 1))));
    case GroupFamily::A2: {
      // pp (q+1) / (q^2-1)^{n/2}; for odd n take floor(sqrt(x^2/(q^2-1))).
      const BigInt s = BigInt(q) * q - 1;
      Rational x(pp * (q + 1), ipow(s, static_cast<unsigned long>(n / 2)));
      x.canonicalize();
      if (n % 2 == 0) return floor_of(x);
      return isqrt(floor_of(Rational(x * x / s)));
    }
    default:
      return floor_of(Rational(pp, ipow(q - 1, static_cast<unsigned long>(n))));
  }
}

struct BoundBracket {
  RationalInterval lower;  // encloses max(1, lower formula)
  RationalInterval upper;  // encloses the upper formula
  std::string formula;

  /// Certified lower <= c < upper.
  bool certifies(const Rational& c) const { return lower.hi <= c && c < upper.lo; }
};

namespace detail {

inline RationalInterval max_one(const RationalInterval& x) {
  return {x.lo > 1 ? x.lo : Rational(1), x.hi > 1 ? x.hi : Rational(1)};
}

inline RationalInterval log_power(const Rational& arg, long q, const Rational& e) {
  return pow(log_base(RationalInterval::point(arg), Rational(q)), e).rounded();
}

}  // namespace detail

/// Brackets for c(G) = b(G)/St(1).
inline BoundBracket bound_bracket(const GroupSpec& g) {
  const long n = g.n, q = g.q;
  const Rational Q(q), N(n);
  BoundBracket br;
  switch (g.family) {
    case GroupFamily::A: {
      Rational lo_arg = (N - 1) * (1 - 1 / Q) + Q * Q;
      Rational up_arg = N * (Q - 1) + Q;
      br.lower = detail::max_one(Rational(1, 4) * detail::log_power(lo_arg, q, Rational(3, 4)));
      br.upper = Rational(13) * detail::log_power(up_arg, q, Rational(127, 50));
      br.formula = "max(1,(1/4)log_q((n-1)(1-1/q)+q^2)^(3/4)) <= c < 13 log_q(n(q-1)+q)^2.54";
      break;
    }
    case GroupFamily::A2: {
      Rational lo_arg = (N - 1) * (1 - 1 / (Q * Q)) + Q * Q * Q * Q;
      Rational up_arg = N * (Q * Q - 1) + Q * Q;
      br.lower = detail::max_one(Rational(1, 4) * detail::log_power(lo_arg, q, Rational(2, 5)));
      br.upper = Rational(2) * detail::log_power(up_arg, q, Rational(127, 100));
      br.formula = "max(1,(1/4)log_q((n-1)(1-1/q^2)+q^4)^(2/5)) <= c < 2 log_q(n(q^2-1)+q^2)^1.27";
      break;
    }
    default: {
      const bool odd = q % 2;
      Rational lo_arg = odd ? Rational((4 * N + 25) / 3) : Rational(N + 17);
      br.lower = detail::max_one(Rational(1, 5) * detail::log_power(lo_arg, q, Rational(3, 8)));
      RationalInterval l = RationalInterval::point(1) + log_base(RationalInterval::point(2 * N + 1), Q);
      br.upper = Rational(odd ? 38 : 8) * pow(l, Rational(127, 100)).rounded();
      br.formula = odd ? "max(1,(1/5)log_q((4n+25)/3)^(3/8)) <= c < 38(1+log_q(2n+1))^1.27"
                       : "max(1,(1/5)log_q(n+17)^(3/8)) <= c < 8(1+log_q(2n+1))^1.27";
      break;
    }
  }
  return br;
}

// ---------------------------------------------------------------------------
// Epsilon certificates

enum class EpsilonVerdict { CertifiedGtOne, ListedException, Inconclusive };

inline std::string to_string(EpsilonVerdict v) {
  switch (v) {
    case EpsilonVerdict::CertifiedGtOne: return "CertifiedGtOne";
    case EpsilonVerdict::ListedException: return "ListedException";
    case EpsilonVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct EpsilonCertificate {
  EpsilonVerdict verdict = EpsilonVerdict::Inconclusive;
  BigInt lhs = 0;  // zero when the inequality was not evaluated
  BigInt rhs = 0;
  std::string reason;
};

/// Groups excluded from the epsilon(S) > 1 statement.
inline bool is_listed_exception(const GroupSpec& g) {
  const long n = g.n, q = g.q;
  switch (g.family) {
    case GroupFamily::A: return q == 2 || (q == 3 && n >= 5 && n <= 14);
    case GroupFamily::A2: return q == 2 && n >= 7 && n <= 14;
    case GroupFamily::B:
    case GroupFamily::C: return q == 2 || (q == 3 && n >= 4 && n <= 17);
    case GroupFamily::D:
    case GroupFamily::D2:
      return q == 2 || (q == 3 && n >= 4 && n <= 30) || (q == 7 && n == 4) || (q == 5 && n >= 4 && n <= 6);
  }
  return false;
}

/// Evaluates the family's sufficient inequality where its hypotheses hold.
inline EpsilonCertificate epsilon_certificate(const GroupSpec& g) {
  EpsilonCertificate c;
  const long n = g.n, q = g.q;
  if (is_listed_exception(g)) {
    c.verdict = EpsilonVerdict::ListedException;
    c.reason = "listed exception";
    return c;
  }
  auto P = [](long base, long e) { return ipow(base, static_cast<unsigned long>(e)); };
  switch (g.family) {
    case GroupFamily::A:
      if (n < 4 || q < 3) {
        c.reason = "needs n >= 4 and q >= 3";
        return c;
      }
      c.lhs = P(q - 1, 2 * n - 3);
      c.rhs = 2 * (n - 1) * (P(q, n - 1) - 1);
      break;
    case GroupFamily::A2: {
      if (n < 4 || (n <= 7 && q < 3)) {
        c.reason = "needs n >= 4, and q >= 3 when n <= 7";
        return c;
      }
      c.lhs = P(q * q - 1, n);
      BigInt t = P(q, n - 1) - ((n - 1) % 2 ? -1 : 1);
      c.rhs = 2 * (n - 1) * t * P(q + 1, 3);
      break;
    }
    case GroupFamily::B:
    case GroupFamily::C: {
      if (n < 2 || q < 3) {
        c.reason = "needs n >= 2 and q >= 3";
        return c;
      }
      const long kappa = (q - 1) % 2 ? 1 : 2;
      c.lhs = P(q - 1, 2 * n);
      c.rhs = 4 * kappa * n * (P(q, n) - 1);
      break;
    }
    case GroupFamily::D:
    case GroupFamily::D2: {
      if (n < 4 || q < 3) {
        c.reason = "needs n >= 4 and q >= 3";
        return c;
      }
      const BigInt t = P(q, n) - g.epsilon();
      const BigInt kappa = gcd(BigInt(4), t);
      c.lhs = P(q - 1, 2 * n);
      c.rhs = 3 * kappa * kappa * kappa * n * t;
      break;
    }
  }
  c.verdict = c.lhs > c.rhs ? EpsilonVerdict::CertifiedGtOne : EpsilonVerdict::Inconclusive;
  c.reason = c.lhs > c.rhs ? "inequality holds" : "inequality fails";
  return c;
}

// ---------------------------------------------------------------------------
// Merge ratios over F_2

struct MergeRatio {
  Rational ratio;
  CentralizerTypeGL::Factor first;
  CentralizerTypeGL::Factor second;
};

/// Ratio of degrees after merging the two largest factors (by k d, then d,
/// then k) into one torus factor, q = 2.
inline MergeRatio merge_ratio_sl_n_2(const CentralizerTypeGL& t) {
  require(t.factors.size() >= 2, "merge needs at least two factors");
  std::vector<CentralizerTypeGL::Factor> fs = t.factors;
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    if (a.k * a.d != b.k * b.d) return a.k * a.d > b.k * b.d;
    if (a.d != b.d) return a.d > b.d;
    return a.k > b.k;
  });
  const auto f1 = fs[0], f2 = fs[1];
  require(!(f1.d == 1 && f2.d == 1), "merge needs (d1,d2) != (1,1)");
  BigInt num = 1;
  for (int i = 1; i <= f1.k; ++i) num *= ipow(2, static_cast<unsigned long>(i * f1.d)) - 1;
  for (int i = 1; i <= f2.k; ++i) num *= ipow(2, static_cast<unsigned long>(i * f2.d)) - 1;
  const long e = static_cast<long>(f1.d) * f1.k * (f1.k - 1) / 2 + static_cast<long>(f2.d) * f2.k * (f2.k - 1) / 2;
  BigInt den = ipow(2, static_cast<unsigned long>(e)) * (ipow(2, static_cast<unsigned long>(f1.k * f1.d + f2.k * f2.d)) - 1);
  Rational r(num, den);
  r.canonicalize();
  return {r, f1, f2};
}

inline bool merge_ratio_in_range(const Rational& r) { return Rational(81, 512) < r && r < 1; }

}  // namespace lie_degrees

#endif  // LIE_DEGREES_MAXDEGREE_HPP
