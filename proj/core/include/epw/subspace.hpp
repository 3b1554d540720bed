#pragma once

#include <cstddef>

#include "epw/qmatrix.hpp"

namespace epw {

// Linear subspace of Q^n, stored as the RREF of any spanning set. Two equal
// subspaces always carry identical bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(std::size_t ambient_dim, const QMatrix& rows);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  QMatrix basis_;
};

// dim A + dim B - rank [A; B]
std::size_t intersection_dim(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Basis rows scaled to primitive integer vectors.
QMatrix integer_basis(const Subspace& s);

}  // namespace epw
