#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pdp {

// Exact arbitrary-precision signed integer. GMP does the heavy lifting; the
// rest of the library only relies on ring operations, comparisons and exact
// division, so the alias is the entire surface we need.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt big(long long v) {
  // gmpxx lacks a long long constructor; on LP64 long carries it losslessly.
  return BigInt(static_cast<long>(v));
}

inline BigInt abs(const BigInt& v) {
  BigInt r;
  mpz_abs(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

inline int sign(const BigInt& v) { return sgn(v); }

// v * 2^bits
inline BigInt shift_left(const BigInt& v, unsigned long bits) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), bits);
  return r;
}

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Exact quotient; caller guarantees divisibility.
inline BigInt divexact(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool fits_longlong(const BigInt& v) {
  return v.fits_slong_p();
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Ring-constant hooks used by the generic determinant code. Overloads for
// other rings (e.g. the y-quotient ring) live next to their types.
inline BigInt ring_zero(const BigInt&) { return BigInt(0); }
inline BigInt ring_one(const BigInt&) { return BigInt(1); }
inline bool ring_is_zero(const BigInt& v) { return sgn(v) == 0; }

}  // namespace pdp
