#include "epw/double_cover.hpp"

#include <algorithm>
#include <numeric>

#include "epw/certificate.hpp"

namespace epw {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::optional<Scalar> rational_sqrt(const Scalar& q) {
  if (sgn(q) < 0) return std::nullopt;
  BigInt n = q.get_num(), d = q.get_den();
  BigInt rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Scalar(rn) / Scalar(rd);
}

}  // namespace

Tensor2 outer(std::span<const Scalar> x, std::span<const Scalar> y) {
  Tensor2 m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j];
  return m;
}

SymForm g2(const Tensor2& mu) {
  if (mu.rows() != mu.cols()) throw PreconditionError("g2: mu must be square");
  if (rank(mu) > 1) throw PreconditionError("g2: mu must have rank at most 1");
  return SymForm(mu + mu.transpose());
}

bool rank_at_most_two(const QMatrix& s) {
  const std::size_t n = s.rows();
  for (std::size_t r0 = 0; r0 < n; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < n; ++r1)
      for (std::size_t r2 = r1 + 1; r2 < n; ++r2)
        for (std::size_t c0 = 0; c0 < s.cols(); ++c0)
          for (std::size_t c1 = c0 + 1; c1 < s.cols(); ++c1)
            for (std::size_t c2 = c1 + 1; c2 < s.cols(); ++c2) {
              const Scalar m = s(r0, c0) * (s(r1, c1) * s(r2, c2) - s(r1, c2) * s(r2, c1)) -
                               s(r0, c1) * (s(r1, c0) * s(r2, c2) - s(r1, c2) * s(r2, c0)) +
                               s(r0, c2) * (s(r1, c0) * s(r2, c1) - s(r1, c1) * s(r2, c0));
              if (sgn(m) != 0) return false;
            }
  return true;
}

Fiber fiber_g2(const SymForm& s, const std::optional<Tensor2>& mu_hint) {
  if (s.rank() != 2) throw PreconditionError("fiber_g2: S must have rank 2");
  Fiber f;
  if (mu_hint) {
    if (g2(*mu_hint) != s) throw PreconditionError("fiber_g2: hint does not map to S");
    f.elements.push_back(*mu_hint);
    if (mu_hint->transpose() != *mu_hint) f.elements.push_back(mu_hint->transpose());
    return f;
  }
  // A symmetric matrix of rank 2 has a nonsingular principal 2x2 block P;
  // S(z) = 2 (x.z)(y.z) is then a product over Q iff -det P is a square.
  const std::size_t n = s.dim();
  std::size_t bi = n, bj = n;
  for (std::size_t i = 0; i < n && bi == n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sgn(s(i, i) * s(j, j) - s(i, j) * s(i, j)) != 0) {
        bi = i;
        bj = j;
        break;
      }
  if (bi == n) throw VerificationFailure("fiber_g2: no nonsingular principal 2x2 block in a rank-2 form");
  const Scalar a = s(bi, bi), b = s(bi, bj), c = s(bj, bj);
  const auto root = rational_sqrt(b * b - a * c);
  if (!root) {
    f.requires_extension = true;
    return f;
  }
  // w = P^{-1} S_{[bi,bj],:} z are the coordinates of z modulo ker S.
  QMatrix p = QMatrix::from_rows({{a, b}, {b, c}}, 2);
  QMatrix rows = QMatrix::from_rows({s.matrix().row_vector(bi), s.matrix().row_vector(bj)}, n);
  const QMatrix w = *inverse(p) * rows;
  // (alpha.w)(beta.w) = q(w) / 2 for q(w) = a w1^2 + 2b w1 w2 + c w2^2.
  QVector alpha, beta;
  if (sgn(a) != 0) {
    const Scalar r1 = (-b + *root) / a, r2 = (-b - *root) / a;
    alpha = {a / 2, -a / 2 * r1};
    beta = {Scalar(1), -r2};
  } else {
    alpha = {Scalar(0), Scalar(1)};
    beta = {b, c / 2};
  }
  QVector x(n), y(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = alpha[0] * w(0, k) + alpha[1] * w(1, k);
    y[k] = beta[0] * w(0, k) + beta[1] * w(1, k);
  }
  const Tensor2 mu = outer(x, y);
  if (g2(mu) != s) throw VerificationFailure("fiber_g2: factorization does not reproduce S");
  f.elements = {mu, mu.transpose()};
  return f;
}

GradedDims graded_dims(std::size_t n, std::size_t i) {
  if (n == 0) throw PreconditionError("graded_dims: n must be positive");
  const std::size_t m = binomial(i + n - 1, n - 1);
  return {m * (m + 1) / 2, m * (m - 1) / 2};
}

CoordRingReport verify_coord_ring(std::size_t n, std::size_t j) {
  if (n < 1 || n > 3 || j > 3) throw PreconditionError("verify_coord_ring: requires 1 <= n <= 3 and j <= 3");
  const std::size_t vars = n * n;  // z_ab at index n a + b
  const auto basis = monomials(vars, static_cast<unsigned>(j));
  const std::size_t total = basis.size();

  QMatrix ideal(0, total);
  if (j >= 2) {
    std::vector<Polynomial> minors;
    for (std::size_t a0 = 0; a0 < n; ++a0)
      for (std::size_t a1 = a0 + 1; a1 < n; ++a1)
        for (std::size_t b0 = 0; b0 < n; ++b0)
          for (std::size_t b1 = b0 + 1; b1 < n; ++b1) {
            Polynomial p(vars);
            Polynomial::Exponents e(vars, 0);
            e[n * a0 + b0] += 1;
            e[n * a1 + b1] += 1;
            p.add_term(e, 1);
            e.assign(vars, 0);
            e[n * a0 + b1] += 1;
            e[n * a1 + b0] += 1;
            p.add_term(e, -1);
            minors.push_back(std::move(p));
          }
    if (!minors.empty()) ideal = macaulay_matrix(minors, static_cast<unsigned>(j));
  }
  const std::size_t ideal_rank = rank(ideal);

  // iota swaps z_ab and z_ba.
  QMatrix iota(total, total);
  for (std::size_t c = 0; c < total; ++c) {
    Polynomial::Exponents e(vars);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) e[n * b + a] = basis[c][n * a + b];
    const auto it = std::find(basis.begin(), basis.end(), e);
    iota(c, static_cast<std::size_t>(it - basis.begin())) = 1;
  }
  const QMatrix id = QMatrix::identity(total);

  CoordRingReport r;
  r.dim = total - ideal_rank;
  const std::size_t m = binomial(j + n - 1, n - 1);
  r.expected = m * m;
  r.eigen.plus = rank(vstack(ideal, id + iota)) - ideal_rank;
  r.eigen.minus = rank(vstack(ideal, id - iota)) - ideal_rank;
  r.expected_eigen = graded_dims(n, j);
  r.ok = r.dim == r.expected && r.eigen == r.expected_eigen;
  return r;
}

QMatrix hyperplane_pullback(const SymForm& h) {
  const std::size_t n = h.dim();
  QMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = 2 * h(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      b(i, j) = h(i, j);
      b(j, i) = h(i, j);
    }
  }
  return b;
}

std::size_t jacobian_rank_g2(std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t n = x.size();
  if (y.size() != n) throw PreconditionError("jacobian_rank_g2: size mismatch");
  auto zero = [](std::span<const Scalar> v) { return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; }); };
  if (zero(x) || zero(y)) throw PreconditionError("jacobian_rank_g2: zero factor");
  // Entry (i, j) = x_i y_j + y_i x_j; columns are d/dx_k, then d/dy_k.
  QMatrix d(n * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = n * i + j;
      d(row, i) += y[j];
      d(row, j) += y[i];
      d(row, n + j) += x[i];
      d(row, n + i) += x[j];
    }
  return rank(d);
}

bool incidence_member(std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) throw PreconditionError("incidence_member: size mismatch");
  bool xz = true, yz = true;
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xz = xz && sgn(x[i]) == 0;
    yz = yz && sgn(y[i]) == 0;
    s += x[i] * y[i];
  }
  if (xz || yz) throw PreconditionError("incidence_member: zero vector");
  return sgn(s) == 0;
}

std::vector<std::vector<std::size_t>> FlopGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

bool FlopGraph::connected() const {
  if (vertices == 0) return true;
  const auto adj = adjacency();
  std::vector<bool> seen(vertices, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == vertices;
}

bool FlopGraph::regular(std::size_t degree) const {
  const auto adj = adjacency();
  return std::all_of(adj.begin(), adj.end(), [&](const auto& n) { return n.size() == degree; });
}

FlopGraph flop_graph(std::size_t r) {
  if (r > 24) throw PreconditionError("flop_graph: r too large");
  FlopGraph g;
  g.r = r;
  g.vertices = std::size_t{1} << r;
  for (std::size_t v = 0; v < g.vertices; ++v)
    for (std::size_t i = 0; i < r; ++i)
      if (!(v & (std::size_t{1} << i))) g.edges.emplace_back(v, v | (std::size_t{1} << i));
  return g;
}

}  // namespace epw
