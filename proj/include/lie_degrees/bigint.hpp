#ifndef LIE_DEGREES_BIGINT_HPP
#define LIE_DEGREES_BIGINT_HPP

// Exact integer and rational arithmetic shared by every module.
// Backed by GMP through its C++ wrapper.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lie_degrees {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when a caller violates a documented precondition.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an identity that must hold (exact divisibility, two
/// independent routes agreeing) fails. Always indicates a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const char* what) {
  if (!cond) throw PreconditionError(what);
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt ipow(long base, unsigned long e) { return ipow(BigInt(base), e); }

inline Rational rpow(const Rational& base, long e) {
  BigInt num, den;
  unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), ue);
  Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt isqrt(const BigInt& a) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

/// Floor of a non-negative rational.
inline BigInt floor_of(const Rational& r) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return out;
}

/// Divides exactly, throwing InternalError when the quotient is not integral.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
  if (den == 0) throw InternalError(std::string(context) + ": division by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw InternalError(std::string(context) + ": non-integral quotient");
  return q;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

/// 15 significant digits, deterministic (computed in 512-bit binary float).
inline std::string to_decimal(const Rational& v, int digits = 15) {
  mpf_class f(v, 512);
  char buf[128];
  gmp_snprintf(buf, sizeof buf, "%.*Fg", digits, f.get_mpf_t());
  return buf;
}

inline std::string to_decimal(const BigInt& v, int digits = 15) {
  return to_decimal(Rational(v), digits);
}

inline long to_long(const BigInt& v) {
  if (!v.fits_slong_p()) throw PreconditionError("integer does not fit in long");
  return v.get_si();
}

}  // namespace lie_degrees

#endif  // LIE_DEGREES_BIGINT_HPP
