#pragma once

#include <utility>
#include <vector>

#include "retractkit/scalar.hpp"

namespace retractkit {

// Polynomial in one indeterminate t, coefficients stored lowest degree first
// with no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long constant) : UniPoly(Scalar(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(const Scalar& constant);
  explicit UniPoly(std::vector<Scalar> coefficients);

  static UniPoly t() { return UniPoly(std::vector<Scalar>{0, 1}); }
  static UniPoly monomial(unsigned degree, const Scalar& coeff);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Throws DegreeOfZero on the zero polynomial.
  unsigned degree() const;
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
  const Scalar& leading_coefficient() const;

  Scalar operator()(const Scalar& at) const;
  // f(g(t)).
  UniPoly compose(const UniPoly& inner) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Scalar& c, const UniPoly& p);
  UniPoly pow(unsigned exponent) const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // Quotient and remainder; throws DivisorZero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  UniPoly monic() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

// Distinct rational roots in increasing order. The zero polynomial has no
// finite root set and throws std::invalid_argument.
std::vector<Scalar> rational_roots(const UniPoly& p);

}  // namespace retractkit
