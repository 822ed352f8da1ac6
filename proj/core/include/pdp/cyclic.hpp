#pragma once

#include <string>
#include <vector>

#include "pdp/bigint.hpp"
#include "pdp/errors.hpp"
#include "pdp/poly.hpp"

namespace pdp {

// Element of R[y] / (y^k - 1): exactly k coefficient slots, exponents wrap
// modulo k, so y^{-1} is the slot k-1. The ring has zero divisors for k > 1
// (e.g. (1+y)(1-y) = 0 for k = 2), which is why determinants over it go
// through the division-free path.
template <typename R>
class Cyclic {
 public:
  explicit Cyclic(int modulus)
      : modulus_(modulus), coeffs_(modulus, R()) {}

  Cyclic(int modulus, std::vector<R> coeffs)
      : modulus_(modulus), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != modulus_) {
      fail(ErrorCode::ModulusMismatch, "coefficient count != modulus");
    }
  }

  static Cyclic constant(int modulus, R value) {
    Cyclic c(modulus);
    c.coeffs_[0] = std::move(value);
    return c;
  }

  // c * y^exp with exp taken modulo k (negative exponents allowed).
  static Cyclic monomial(int modulus, R value, long exp) {
    Cyclic c(modulus);
    long e = exp % modulus;
    if (e < 0) e += modulus;
    c.coeffs_[static_cast<std::size_t>(e)] = std::move(value);
    return c;
  }

  int modulus() const { return modulus_; }
  const R& coeff(int yclass) const { return coeffs_[yclass]; }
  R& coeff(int yclass) { return coeffs_[yclass]; }
  const std::vector<R>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!ring_is_zero(c)) return false;
    return true;
  }

  Cyclic operator+(const Cyclic& o) const {
    check(o);
    Cyclic r(*this);
    for (int i = 0; i < modulus_; ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
  }

  Cyclic& operator+=(const Cyclic& o) {
    check(o);
    for (int i = 0; i < modulus_; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  Cyclic operator-(const Cyclic& o) const {
    check(o);
    Cyclic r(*this);
    for (int i = 0; i < modulus_; ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
  }

  Cyclic& operator-=(const Cyclic& o) {
    check(o);
    for (int i = 0; i < modulus_; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  Cyclic operator-() const {
    Cyclic r(modulus_);
    for (int i = 0; i < modulus_; ++i) r.coeffs_[i] = R() - coeffs_[i];
    return r;
  }

  // Convolution with exponent wraparound modulo k.
  Cyclic operator*(const Cyclic& o) const {
    check(o);
    Cyclic r(modulus_);
    for (int i = 0; i < modulus_; ++i) {
      if (ring_is_zero(coeffs_[i])) continue;
      for (int j = 0; j < modulus_; ++j) {
        if (ring_is_zero(o.coeffs_[j])) continue;
        int t = i + j;
        if (t >= modulus_) t -= modulus_;
        r.coeffs_[t] += coeffs_[i] * o.coeffs_[j];
      }
    }
    return r;
  }

  bool operator==(const Cyclic& o) const {
    return modulus_ == o.modulus_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Cyclic& o) const { return !(*this == o); }

 private:
  void check(const Cyclic& o) const {
    if (modulus_ != o.modulus_) {
      fail(ErrorCode::ModulusMismatch, "mixed moduli in Cyclic arithmetic");
    }
  }

  int modulus_;
  std::vector<R> coeffs_;
};

using CyclicInt = Cyclic<BigInt>;    // y-ring over integers (x evaluated)
using CyclicPoly = Cyclic<Poly>;     // y-ring with polynomial-in-x coefficients

template <typename R>
Cyclic<R> ring_zero(const Cyclic<R>& exemplar) {
  return Cyclic<R>(exemplar.modulus());
}

template <typename R>
Cyclic<R> ring_one(const Cyclic<R>& exemplar) {
  R one = ring_one(R());
  return Cyclic<R>::constant(exemplar.modulus(), std::move(one));
}

template <typename R>
bool ring_is_zero(const Cyclic<R>& v) {
  return v.is_zero();
}

}  // namespace pdp
