#pragma once

#include <string>
#include <vector>

#include "fpd/numbers.hpp"

namespace fpd {

// Univariate polynomial in q with exact integer coefficients, stored in
// ascending powers. Canonical form: no trailing zero coefficients; the
// zero polynomial is the empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(BigInt constant);
  explicit Poly(long constant) : Poly(BigInt(constant)) {}

  static Poly from_coeffs(std::vector<BigInt> coeffs);
  static Poly monomial(BigInt c, int power);

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int power) const;

  Rational eval(const Rational& q) const;
  double eval_double(double q) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& scale(const BigInt& k);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(const BigInt& k, Poly p) { return p.scale(k); }

  bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }

  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;
  void trim();
};

Poly pow_poly(const Poly& base, int exponent);

// One term c * q^a * (1-q)^b of a survival/failure expansion.
struct BernsteinTerm {
  BigInt c;
  int q_pow;
  int one_minus_q_pow;
};

// Expands a sum of Bernstein-style terms to standard form, exactly.
Poly poly_from_bernstein(const std::vector<BernsteinTerm>& terms);

// Sign changes of p - r inside (lo, hi), each bracketed by exact-rational
// bisection to an interval of width <= tol and reported as its midpoint,
// sorted ascending and deduplicated. Detection samples a uniform grid of
// ceil((hi-lo)/tol) points, capped at `max_grid` intervals; roots that do
// not change sign (tangencies) are not reported.
std::vector<Rational> sign_crossings(const Poly& p, const Poly& r,
                                     const Rational& lo, const Rational& hi,
                                     const Rational& tol, int max_grid = 4096);

}  // namespace fpd
