#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdp/bigint.hpp"

namespace pdp {

// Univariate polynomial over BigInt, coefficients in ascending degree.
// Canonical form never stores a trailing zero coefficient; the zero
// polynomial has an empty coefficient vector and no degree (the sentinel is
// an absent optional, so it can never win a degree-minimum scan by accident).
class Poly {
 public:
  Poly() = default;
  explicit Poly(BigInt constant);
  explicit Poly(std::vector<BigInt> ascending_coeffs);

  static Poly monomial(const BigInt& coeff, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  // Lowest degree with a non-zero coefficient; empty for the zero polynomial.
  std::optional<int> min_degree() const;

  const BigInt& coeff(int degree) const;  // zero outside stored range
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  Poly scaled(const BigInt& c) const;
  Poly shifted(int degree_up) const;  // multiply by x^degree_up

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

inline Poly ring_zero(const Poly&) { return Poly(); }
inline Poly ring_one(const Poly&) { return Poly(BigInt(1)); }
inline bool ring_is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace pdp
