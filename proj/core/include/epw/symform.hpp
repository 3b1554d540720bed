#pragma once

#include <cstddef>
#include <span>

#include "epw/qmatrix.hpp"

namespace epw {

// Symmetric bilinear form / quadratic form q(x) = x^T S x over Q.
class SymForm {
 public:
  SymForm() = default;
  explicit SymForm(QMatrix matrix);
  static SymForm zero(std::size_t n) { return SymForm(QMatrix(n, n)); }

  std::size_t dim() const { return m_.rows(); }
  const QMatrix& matrix() const { return m_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  Scalar value(std::span<const Scalar> x) const;
  Scalar bilinear(std::span<const Scalar> x, std::span<const Scalar> y) const;

  // Gram matrix of the restriction to the row space of `basis`.
  SymForm restrict_to(const QMatrix& basis) const;

  std::size_t rank() const { return epw::rank(m_); }

  friend bool operator==(const SymForm&, const SymForm&) = default;

 private:
  QMatrix m_;
};

SymForm operator+(const SymForm& a, const SymForm& b);
SymForm operator-(const SymForm& a, const SymForm& b);
SymForm operator*(const Scalar& s, const SymForm& a);

// Exact inertia (n_plus, n_minus, n_zero) by symmetric Gaussian reduction.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};
Inertia inertia(const QMatrix& symmetric);

}  // namespace epw
