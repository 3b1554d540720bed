#pragma once

#include <cstdint>

#include "epw/exterior.hpp"
#include "epw/matrix3.hpp"
#include "epw/subspace.hpp"
#include "epw/symform.hpp"

namespace epw {

class ChartError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// T_U = (second exterior power of U) ^ V6, a 10-dimensional Lagrangian.
Subspace tangent_lagrangian(const Subspace& u);

// Spanning rows u_i ^ u_j ^ e_k (i < j) of T_U for the given basis rows of U.
QMatrix tangent_spanning_rows(const QMatrix& u_basis);

bool is_lagrangian(const Subspace& a);
bool is_isotropic(const Subspace& a);

// Affine chart of the Lagrangian Grassmannian around T_{U0}, with the
// opposite Lagrangian T_{Uinf}. Given bases u_1..u_3 of U0 and f_1..f_3 of
// Uinf, the tangent frame of T_{U0} is
//   t_0        = u_1 ^ u_2 ^ u_3                  (the vertex direction)
//   t_{1+3a+b} = u_{b+1} ^ u_{b+2} ^ f_a          (indices of u mod 3)
// so that coordinate 1 + 3a + b is the entry (a, b) of a map Hom(U0, Uinf).
class Chart {
 public:
  static Chart standard();
  static Chart from_bases(const QMatrix& u0_basis, const QMatrix& uinf_basis);

  const QMatrix& u0_basis() const { return u0_; }
  const QMatrix& uinf_basis() const { return uinf_; }
  Subspace u0() const { return Subspace::span(kV6, u0_); }
  Subspace uinf() const { return Subspace::span(kV6, uinf_); }
  // det [U0; Uinf] != 0
  const Scalar& complementarity_witness() const { return witness_; }

  const QMatrix& tangent_frame() const { return t0_; }
  const QMatrix& opposite_frame() const { return tinf_; }

  // Coordinates of the rows of `rows` in the basis [tangent; opposite].
  QMatrix coordinates(const QMatrix& rows) const;

  // Lagrangian graph A_q = { t + phi_q(t) : t in T_{U0} } where
  // pairing(phi_q(t), t') = q(t, t').
  Subspace graph(const SymForm& q) const;
  // Inverse of graph(); throws ChartError when A meets T_{Uinf}.
  SymForm form_of(const Subspace& a) const;
  bool contains(const Subspace& a) const;

  // The 3-plane spanned by u_i + sum_a b(a, i) f_a.
  Subspace point(const Matrix3& b) const;
  QMatrix point_basis(const Matrix3& b) const;

 private:
  QMatrix u0_, uinf_;
  Scalar witness_;
  QMatrix t0_, tinf_;
  QMatrix change_inv_;   // inverse of [t0_; tinf_]
  QMatrix pairing_;      // pairing_(a, b) = omega(s_a, t_b)
  QMatrix pairing_inv_;
};

Subspace graph_lagrangian(const SymForm& q, const Chart& chart);

// A Lagrangian containing the isotropic subspace K, obtained by extending K
// one random vector of its symplectic orthogonal at a time (each step stays
// isotropic). Deterministic in `seed`.
Subspace lagrangian_through(const Subspace& k, std::uint64_t seed, long entry_bound = 10);

Subspace random_subspace(std::size_t ambient, std::size_t dim, std::uint64_t seed, long entry_bound = 10);
// Graph of a random integer symmetric form in the standard chart.
Subspace random_lagrangian(std::uint64_t seed, long entry_bound = 10);

}  // namespace epw
