#include "epw/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace epw {

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Scalar& c) { return UPoly({c}); }

UPoly UPoly::monomial(const Scalar& c, unsigned degree) {
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::interpolate(std::span<const Scalar> xs, std::span<const Scalar> ys) {
  if (xs.size() != ys.size()) throw PreconditionError("UPoly::interpolate: size mismatch");
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Scalar> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      Scalar den = xs[i] - xs[i - j];
      if (sgn(den) == 0) throw PreconditionError("UPoly::interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  UPoly p;
  for (std::size_t k = n; k-- > 0;) p = p * UPoly({-xs[k], Scalar(1)}) + constant(dd[k]);
  return p;
}

Scalar UPoly::operator()(const Scalar& t) const {
  Scalar s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * t + *it;
  return s;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return (Scalar(1) / leading()) * *this;
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    os << "(" << epw::to_string(c_[i]) << ")";
    if (i > 0) os << "*t^" << i;
    first = false;
  }
  return os.str();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + Scalar(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return UPoly(std::move(c));
}

UPoly operator*(const Scalar& s, const UPoly& a) {
  std::vector<Scalar> c = a.coeffs();
  for (auto& x : c) x *= s;
  return UPoly(std::move(c));
}

UPolyDivision divide(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw PreconditionError("divide: division by the zero polynomial");
  UPoly r = a;
  std::vector<Scalar> q(std::max(0, a.degree() - b.degree() + 1));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const unsigned shift = r.degree() - b.degree();
    Scalar f = r.leading() / b.leading();
    q[shift] = f;
    r = r - UPoly::monomial(f, shift) * b;
  }
  return {UPoly(std::move(q)), r};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace epw
