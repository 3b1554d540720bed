#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "epw/qmatrix.hpp"
#include "epw/symform.hpp"

namespace epw {

inline constexpr std::size_t kV6 = 6;
inline constexpr std::size_t kWedge3 = 20;

using Vec6 = std::array<Scalar, kV6>;

// Element of the third exterior power of Q^6. Coordinate i belongs to the
// i-th 3-subset of {1..6} in lexicographic order: 123, 124, ..., 456.
struct TriVector {
  std::array<Scalar, kWedge3> coords{};

  static TriVector basis(std::size_t index);
  bool is_zero() const;
  QVector to_vector() const { return {coords.begin(), coords.end()}; }
  static TriVector from_span(std::span<const Scalar> v);

  friend bool operator==(const TriVector&, const TriVector&) = default;
};

TriVector operator+(const TriVector& a, const TriVector& b);
TriVector operator-(const TriVector& a, const TriVector& b);
TriVector operator*(const Scalar& s, const TriVector& a);

// 0-based indices (i < j < k) of the triple at position `index`.
const std::array<std::size_t, 3>& triple(std::size_t index);
// Position of the sorted triple {i, j, k} (0-based, distinct).
std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k);

Vec6 unit_vector(std::size_t i);

TriVector wedge3(const Vec6& v1, const Vec6& v2, const Vec6& v3);

// Coefficient of e1 ^ ... ^ e6 in a ^ b. Antisymmetric and nondegenerate.
Scalar symplectic_pairing(const TriVector& a, const TriVector& b);
Scalar symplectic_pairing(std::span<const Scalar> a, std::span<const Scalar> b);

// Matrix of the pairing on the standard basis.
const QMatrix& pairing_gram();

// Decides decomposability with the contraction criterion:
// t is decomposable iff (i_xi t) ^ t = 0 for every 2-form xi.
bool decomposable_witness(const TriVector& t);

// A basis (35 forms) of the degree-2 part of the Plücker ideal of Gr(3,6),
// extracted from the contraction quadrics. Integer coefficients.
const std::vector<SymForm>& plucker_quadrics();

// All 225 contraction quadrics (xi ranges over e_p^* ^ e_q^*, result over
// the 15 coordinates of the 4th exterior power).
std::vector<SymForm> contraction_quadrics();

}  // namespace epw
