#include "epw/subspace.hpp"

namespace epw {

Subspace Subspace::span(std::size_t ambient_dim, const QMatrix& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient_dim)
    throw PreconditionError("Subspace::span: row width differs from ambient dimension");
  Subspace s;
  s.ambient_ = ambient_dim;
  if (rows.rows() == 0) {
    s.basis_ = QMatrix(0, ambient_dim);
    return s;
  }
  s.basis_ = rref(rows).reduced;
  if (s.basis_.rows() == 0) s.basis_ = QMatrix(0, ambient_dim);
  return s;
}

Subspace Subspace::zero(std::size_t ambient_dim) { return span(ambient_dim, QMatrix(0, ambient_dim)); }

Subspace Subspace::whole(std::size_t ambient_dim) { return span(ambient_dim, QMatrix::identity(ambient_dim)); }

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw PreconditionError("Subspace::contains: dimension mismatch");
  QMatrix m = basis_;
  m.append_row(v);
  return rank(m) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw PreconditionError("Subspace::contains: ambient mismatch");
  return rank(vstack(basis_, other.basis_)) == dim();
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("intersection_dim: ambient mismatch");
  return a.dim() + b.dim() - rank(vstack(a.basis(), b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("intersection: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  // (x, y) with x A + y B = 0  <=>  x A lies in both.
  QMatrix relations = kernel(vstack(a.basis(), b.basis()).transpose());
  QMatrix rows(0, n);
  for (std::size_t r = 0; r < relations.rows(); ++r) {
    QVector v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Scalar& c = relations(r, i);
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += c * a.basis()(i, j);
    }
    rows.append_row(v);
  }
  return Subspace::span(n, rows);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("sum: ambient mismatch");
  return Subspace::span(a.ambient_dim(), vstack(a.basis(), b.basis()));
}

QMatrix integer_basis(const Subspace& s) {
  QMatrix out(0, s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) out.append_row(primitive_integer_row(s.basis().row(i)));
  return out;
}

}  // namespace epw
