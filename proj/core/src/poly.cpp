#include "pdp/poly.hpp"

#include <sstream>

namespace pdp {

namespace {
const BigInt kZero(0);
}

Poly::Poly(BigInt constant) {
  if (sgn(constant) != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<BigInt> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

Poly Poly::monomial(const BigInt& coeff, int degree) {
  Poly p;
  if (sgn(coeff) != 0) {
    p.coeffs_.assign(degree + 1, kZero);
    p.coeffs_[degree] = coeff;
  }
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<int> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

std::optional<int> Poly::min_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
  }
  return std::nullopt;
}

const BigInt& Poly::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[degree];
}

BigInt Poly::evaluate(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  r -= o;
  return r;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly Poly::scaled(const BigInt& c) const {
  if (sgn(c) == 0) return Poly();
  Poly r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Poly Poly::shifted(int degree_up) const {
  if (is_zero() || degree_up == 0) return *this;
  Poly r;
  r.coeffs_.assign(coeffs_.size() + degree_up, kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + degree_up] = coeffs_[i];
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) out << (sgn(coeffs_[i]) > 0 ? " + " : " - ");
    else if (sgn(coeffs_[i]) < 0) out << "-";
    first = false;
    BigInt a = abs(coeffs_[i]);
    if (i == 0 || a != 1) out << a.get_str();
    if (i > 0) {
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace pdp
