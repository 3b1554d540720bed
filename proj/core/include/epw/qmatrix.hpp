#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "epw/scalar.hpp"

namespace epw {

using QVector = std::vector<Scalar>;

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  QVector row_vector(std::size_t i) const;
  QVector column(std::size_t j) const;

  void append_row(std::span<const Scalar> values);
  void swap_rows(std::size_t a, std::size_t b);

  QMatrix transpose() const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Scalar& s, const QMatrix& a);
QVector operator*(const QMatrix& a, std::span<const Scalar> x);

QMatrix vstack(const QMatrix& top, const QMatrix& bottom);
QMatrix hstack(const QMatrix& left, const QMatrix& right);

struct Echelon {
  QMatrix reduced;  // nonzero rows only, leading ones, pivot columns cleared
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form. Canonical: equal row spaces give equal output.
Echelon rref(QMatrix m);
std::size_t rank(const QMatrix& m);

// Rows form a basis of the right kernel {x : m x = 0}.
QMatrix kernel(const QMatrix& m);

Scalar determinant(QMatrix m);
std::optional<QMatrix> inverse(const QMatrix& m);

// Scales a row to a primitive integer vector (same projective point).
QVector primitive_integer_row(std::span<const Scalar> row);

}  // namespace epw
