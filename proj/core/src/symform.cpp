#include "epw/symform.hpp"

#include <utility>

namespace epw {

SymForm::SymForm(QMatrix matrix) : m_(std::move(matrix)) {
  if (!m_.is_symmetric()) throw PreconditionError("SymForm: matrix is not symmetric");
}

Scalar SymForm::value(std::span<const Scalar> x) const { return bilinear(x, x); }

Scalar SymForm::bilinear(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim() || y.size() != dim()) throw PreconditionError("SymForm: dimension mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (sgn(y[j]) != 0 && sgn(m_(i, j)) != 0) s += x[i] * m_(i, j) * y[j];
  }
  return s;
}

SymForm SymForm::restrict_to(const QMatrix& basis) const {
  if (basis.cols() != dim()) throw PreconditionError("SymForm::restrict_to: width mismatch");
  return SymForm(basis * m_ * basis.transpose());
}

SymForm operator+(const SymForm& a, const SymForm& b) { return SymForm(a.matrix() + b.matrix()); }
SymForm operator-(const SymForm& a, const SymForm& b) { return SymForm(a.matrix() - b.matrix()); }
SymForm operator*(const Scalar& s, const SymForm& a) { return SymForm(s * a.matrix()); }

Inertia inertia(const QMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw PreconditionError("inertia: matrix is not symmetric");
  QMatrix a = symmetric;
  std::size_t n = a.rows();
  Inertia out;
  std::size_t done = 0;
  // Work on the trailing block [done, n). Congruence moves only.
  auto sym_swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  while (done < n) {
    std::size_t piv = n;
    for (std::size_t i = done; i < n; ++i)
      if (sgn(a(i, i)) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // No nonzero diagonal: use e_i + e_j for some a_ij != 0.
      std::size_t bi = n, bj = n;
      for (std::size_t i = done; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(a(i, j)) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) {
        out.zero += n - done;
        break;
      }
      // row_i += row_j, col_i += col_j: new a_ii = 2 a_ij.
      for (std::size_t c = 0; c < n; ++c) a(bi, c) += a(bj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, bi) += a(r, bj);
      piv = bi;
    }
    sym_swap(done, piv);
    const Scalar d = a(done, done);
    if (sgn(d) > 0) ++out.positive; else ++out.negative;
    // Schur complement keeps the trailing block symmetric.
    for (std::size_t i = done + 1; i < n; ++i) {
      if (sgn(a(i, done)) == 0) continue;
      const Scalar f = a(i, done) / d;
      for (std::size_t j = done + 1; j < n; ++j)
        if (sgn(a(done, j)) != 0) a(i, j) -= f * a(done, j);
    }
    for (std::size_t i = done + 1; i < n; ++i) {
      a(done, i) = 0;
      a(i, done) = 0;
    }
    ++done;
  }
  return out;
}

}  // namespace epw
