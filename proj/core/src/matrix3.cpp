#include "epw/matrix3.hpp"

namespace epw {

Matrix3 Matrix3::identity() {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i) m.x[i][i] = 1;
  return m;
}

Matrix3 Matrix3::unit(std::size_t i, std::size_t j) {
  Matrix3 m;
  m.x.at(i).at(j) = 1;
  return m;
}

Matrix3 Matrix3::from_qmatrix(const QMatrix& q) {
  if (q.rows() != 3 || q.cols() != 3) throw PreconditionError("Matrix3: expected 3x3");
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.x[i][j] = q(i, j);
  return m;
}

QMatrix Matrix3::to_qmatrix() const {
  QMatrix q(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) q(i, j) = x[i][j];
  return q;
}

Scalar Matrix3::det() const {
  return x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) - x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
         x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
}

std::size_t Matrix3::rank() const { return epw::rank(to_qmatrix()); }

Matrix3 operator*(const Scalar& s, const Matrix3& m) {
  Matrix3 r = m;
  for (auto& row : r.x)
    for (auto& v : row) v *= s;
  return r;
}

Matrix3 operator+(const Matrix3& a, const Matrix3& b) {
  Matrix3 r = a;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.x[i][j] += b.x[i][j];
  return r;
}

Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
  Matrix3 r = a;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.x[i][j] -= b.x[i][j];
  return r;
}

}  // namespace epw
