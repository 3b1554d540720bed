#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "epw/qmatrix.hpp"
#include "epw/symform.hpp"

namespace epw {

// n x n matrix, not necessarily symmetric (an element of V^v (x) V^v).
using Tensor2 = QMatrix;

Tensor2 outer(std::span<const Scalar> x, std::span<const Scalar> y);

// mu + mu^T for mu of rank <= 1.
SymForm g2(const Tensor2& mu);

// True iff every 3x3 minor vanishes.
bool rank_at_most_two(const QMatrix& s);

struct Fiber {
  bool requires_extension = false;
  std::vector<Tensor2> elements;  // one or two elements, mapping to S
};

// Fiber of g2 over a rank-2 symmetric S. With a hint mu such that
// g2(mu) = S, the fiber is {mu, mu^T}. Without one, a rational rank-1
// factorization is searched for; if none exists, requires_extension is set.
Fiber fiber_g2(const SymForm& s, const std::optional<Tensor2>& mu_hint = std::nullopt);

struct GradedDims {
  std::size_t plus = 0;
  std::size_t minus = 0;
  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

// m = C(i + n - 1, n - 1); returns (m(m+1)/2, m(m-1)/2).
GradedDims graded_dims(std::size_t n, std::size_t i);

struct CoordRingReport {
  bool ok = false;
  std::size_t dim = 0;        // dimension of the degree-j part of S(V(x)V)/I
  std::size_t expected = 0;   // dim(S^j V)^2
  GradedDims eigen;           // iota-eigenspace dimensions
  GradedDims expected_eigen;  // graded_dims(n, j)
};

// Degree-j part of S(V (x) V) modulo the 2x2 minors (v(x)w)(v'(x)w') -
// (v(x)w')(v'(x)w), for n <= 3 and j <= 3.
CoordRingReport verify_coord_ring(std::size_t n, std::size_t j);

// B(x, y) = H(g2(x (x) y)) for the linear functional H(S) = sum_ij h_ij S_ij
// over i <= j, with coefficients taken from the upper triangle of `h`.
QMatrix hyperplane_pullback(const SymForm& h);

// Rank of the differential of (x, y) -> x(x)y + y(x)x at (x, y).
std::size_t jacobian_rank_g2(std::span<const Scalar> x, std::span<const Scalar> y);

// x . y = 0 for nonzero x, y.
bool incidence_member(std::span<const Scalar> x, std::span<const Scalar> y);

struct FlopGraph {
  std::size_t r = 0;
  // Vertex v encodes the sign tuple by its bits (bit i set means -).
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::vector<std::size_t>> adjacency() const;
  bool connected() const;
  bool regular(std::size_t degree) const;
  std::size_t antipode(std::size_t v) const { return v ^ (vertices - 1); }
};

FlopGraph flop_graph(std::size_t r);

}  // namespace epw
