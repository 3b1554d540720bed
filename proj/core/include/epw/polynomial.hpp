#pragma once

#include <span>
#include <string>
#include <vector>

#include "epw/scalar.hpp"

namespace epw {

// Dense univariate polynomial over Q; coefficient i multiplies t^i.
// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coeffs);
  static UPoly constant(const Scalar& c);
  static UPoly monomial(const Scalar& c, unsigned degree);

  // Lagrange interpolation through (xs[i], ys[i]); the xs must be distinct.
  static UPoly interpolate(std::span<const Scalar> xs, std::span<const Scalar> ys);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(unsigned i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const Scalar& leading() const { return c_.back(); }

  Scalar operator()(const Scalar& t) const;
  UPoly monic() const;
  std::string to_string() const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Scalar> c_;
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator*(const Scalar& s, const UPoly& a);

struct UPolyDivision {
  UPoly quotient;
  UPoly remainder;
};
UPolyDivision divide(const UPoly& a, const UPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace epw
