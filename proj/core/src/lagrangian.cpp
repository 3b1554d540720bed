#include "epw/lagrangian.hpp"

#include "epw/random.hpp"

namespace epw {

namespace {

Vec6 row6(const QMatrix& m, std::size_t i) {
  Vec6 v;
  for (std::size_t j = 0; j < kV6; ++j) v[j] = m(i, j);
  return v;
}

}  // namespace

QMatrix tangent_spanning_rows(const QMatrix& u) {
  if (u.rows() != 3 || u.cols() != kV6) throw PreconditionError("tangent_spanning_rows: need 3 rows in Q^6");
  QMatrix rows(0, kWedge3);
  const Vec6 us[3] = {row6(u, 0), row6(u, 1), row6(u, 2)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (std::size_t k = 0; k < kV6; ++k) rows.append_row(wedge3(us[i], us[j], unit_vector(k)).coords);
  return rows;
}

Subspace tangent_lagrangian(const Subspace& u) {
  if (u.ambient_dim() != kV6 || u.dim() != 3) throw PreconditionError("tangent_lagrangian: U must be a 3-plane in Q^6");
  Subspace t = Subspace::span(kWedge3, tangent_spanning_rows(u.basis()));
  if (t.dim() != 10) throw VerificationFailure("tangent_lagrangian: dimension is not 10");
  return t;
}

bool is_isotropic(const Subspace& a) {
  if (a.ambient_dim() != kWedge3) return false;
  const QMatrix& b = a.basis();
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i + 1; j < b.rows(); ++j)
      if (sgn(symplectic_pairing(b.row(i), b.row(j))) != 0) return false;
  return true;
}

bool is_lagrangian(const Subspace& a) { return a.ambient_dim() == kWedge3 && a.dim() == 10 && is_isotropic(a); }

Chart Chart::standard() {
  QMatrix u0(3, kV6), uinf(3, kV6);
  for (std::size_t i = 0; i < 3; ++i) {
    u0(i, i) = 1;
    uinf(i, 3 + i) = 1;
  }
  return from_bases(u0, uinf);
}

Chart Chart::from_bases(const QMatrix& u0, const QMatrix& uinf) {
  if (u0.rows() != 3 || uinf.rows() != 3 || u0.cols() != kV6 || uinf.cols() != kV6)
    throw PreconditionError("Chart: bases must be 3x6");
  Chart c;
  c.u0_ = u0;
  c.uinf_ = uinf;
  c.witness_ = determinant(vstack(u0, uinf));
  if (sgn(c.witness_) == 0) throw PreconditionError("Chart: U0 and Uinf are not complementary");

  auto frame = [](const QMatrix& base, const QMatrix& other) {
    const Vec6 u[3] = {row6(base, 0), row6(base, 1), row6(base, 2)};
    const Vec6 f[3] = {row6(other, 0), row6(other, 1), row6(other, 2)};
    QMatrix t(0, kWedge3);
    t.append_row(wedge3(u[0], u[1], u[2]).coords);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) t.append_row(wedge3(u[(b + 1) % 3], u[(b + 2) % 3], f[a]).coords);
    return t;
  };
  c.t0_ = frame(u0, uinf);
  c.tinf_ = frame(uinf, u0);
  auto inv = inverse(vstack(c.t0_, c.tinf_));
  if (!inv) throw VerificationFailure("Chart: T_U0 and T_Uinf are not complementary");
  c.change_inv_ = std::move(*inv);
  c.pairing_ = QMatrix(10, 10);
  for (std::size_t a = 0; a < 10; ++a)
    for (std::size_t b = 0; b < 10; ++b) c.pairing_(a, b) = symplectic_pairing(c.tinf_.row(a), c.t0_.row(b));
  auto pinv = inverse(c.pairing_);
  if (!pinv) throw VerificationFailure("Chart: pairing between T_Uinf and T_U0 is degenerate");
  c.pairing_inv_ = std::move(*pinv);
  return c;
}

QMatrix Chart::coordinates(const QMatrix& rows) const { return rows * change_inv_; }

Subspace Chart::graph(const SymForm& q) const {
  if (q.dim() != 10) throw PreconditionError("Chart::graph: form must be 10x10");
  return Subspace::span(kWedge3, t0_ + q.matrix() * pairing_inv_ * tinf_);
}

SymForm Chart::form_of(const Subspace& a) const {
  if (a.ambient_dim() != kWedge3 || a.dim() != 10) throw PreconditionError("Chart::form_of: A must be 10-dimensional");
  QMatrix coords = coordinates(a.basis());
  auto alpha_inv = inverse(coords.block(0, 0, 10, 10));
  if (!alpha_inv) throw ChartError("Chart::form_of: A meets T_Uinf");
  QMatrix q = *alpha_inv * coords.block(0, 10, 10, 10) * pairing_;
  if (!q.is_symmetric()) throw PreconditionError("Chart::form_of: A is not Lagrangian");
  return SymForm(std::move(q));
}

bool Chart::contains(const Subspace& a) const {
  return a.dim() == 10 && intersection_dim(a, Subspace::span(kWedge3, tinf_)) == 0;
}

QMatrix Chart::point_basis(const Matrix3& b) const {
  QMatrix u = u0_;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < 3; ++a) {
      if (sgn(b(a, i)) == 0) continue;
      for (std::size_t j = 0; j < kV6; ++j) u(i, j) += b(a, i) * uinf_(a, j);
    }
  return u;
}

Subspace Chart::point(const Matrix3& b) const { return Subspace::span(kV6, point_basis(b)); }

Subspace graph_lagrangian(const SymForm& q, const Chart& chart) { return chart.graph(q); }

Subspace lagrangian_through(const Subspace& k, std::uint64_t seed, long entry_bound) {
  if (k.ambient_dim() != kWedge3) throw PreconditionError("lagrangian_through: K must live in the 20-dimensional space");
  if (k.dim() > 10 || !is_isotropic(k)) throw PreconditionError("lagrangian_through: K is not isotropic");
  Rng rng(seed);
  Subspace l = k;
  while (l.dim() < 10) {
    QMatrix perp = kernel(l.dim() == 0 ? QMatrix(1, kWedge3) : l.basis() * pairing_gram());
    QVector v(kWedge3);
    for (std::size_t r = 0; r < perp.rows(); ++r) {
      const long c = rng.uniform(-entry_bound, entry_bound);
      if (c == 0) continue;
      for (std::size_t j = 0; j < kWedge3; ++j) v[j] += c * perp(r, j);
    }
    if (l.contains(v)) continue;
    QMatrix rows = l.basis();
    rows.append_row(v);
    l = Subspace::span(kWedge3, rows);
  }
  if (!is_lagrangian(l)) throw VerificationFailure("lagrangian_through: result is not Lagrangian");
  return l;
}

Subspace random_subspace(std::size_t ambient, std::size_t dim, std::uint64_t seed, long entry_bound) {
  Rng rng(seed);
  for (;;) {
    QMatrix m(dim, ambient);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < ambient; ++j) m(i, j) = rng.uniform(-entry_bound, entry_bound);
    Subspace s = Subspace::span(ambient, m);
    if (s.dim() == dim) return s;
  }
}

Subspace random_lagrangian(std::uint64_t seed, long entry_bound) {
  Rng rng(seed);
  QMatrix q(10, 10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i; j < 10; ++j) {
      q(i, j) = rng.uniform(-entry_bound, entry_bound);
      q(j, i) = q(i, j);
    }
  return Chart::standard().graph(SymForm(std::move(q)));
}

}  // namespace epw
