#pragma once

#include <array>
#include <cstddef>

#include "epw/qmatrix.hpp"

namespace epw {

// 3x3 matrix over Q; entry (i, j) is row i, column j. As a map
// Hom(U0, Uinf) the columns are indexed by the basis of U0 and the rows by
// the basis of Uinf.
struct Matrix3 {
  std::array<std::array<Scalar, 3>, 3> x{};

  static Matrix3 identity();
  static Matrix3 unit(std::size_t i, std::size_t j);
  static Matrix3 from_qmatrix(const QMatrix& m);
  QMatrix to_qmatrix() const;

  Scalar& operator()(std::size_t i, std::size_t j) { return x[i][j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return x[i][j]; }

  Scalar det() const;
  std::size_t rank() const;

  friend bool operator==(const Matrix3&, const Matrix3&) = default;
};

Matrix3 operator*(const Scalar& s, const Matrix3& m);
Matrix3 operator+(const Matrix3& a, const Matrix3& b);
Matrix3 operator-(const Matrix3& a, const Matrix3& b);

}  // namespace epw
