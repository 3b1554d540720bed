#include <gtest/gtest.h>

#include "epw/double_cover.hpp"
#include "epw/random.hpp"

namespace {

using namespace epw;

QVector random_vec(Rng& rng, std::size_t n, long bound = 9) {
  QVector v(n);
  for (auto& x : v) x = rng.uniform(-bound, bound);
  return v;
}

QVector unit(std::size_t n, std::size_t i) {
  QVector v(n);
  v[i] = 1;
  return v;
}

bool is_zero_vec(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

TEST(G2, Examples) {
  QVector x{Scalar(1), Scalar(2), Scalar(3)};
  SymForm s = g2(outer(x, x));
  EXPECT_EQ(s.matrix(), Scalar(2) * outer(x, x));
  EXPECT_EQ(s.rank(), 1u);
  SymForm t = g2(outer(unit(4, 0), unit(4, 1)));
  EXPECT_EQ(t.rank(), 2u);
  EXPECT_EQ(t(0, 1), 1);
  EXPECT_EQ(t(1, 0), 1);
  EXPECT_THROW(g2(QMatrix::identity(3)), PreconditionError);
}

// All 3x3 minors of g2(x (x) y) vanish; checked against rank over Q.
TEST(G2, ImagesHaveRankAtMostTwo) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    QVector x = random_vec(rng, 5), y = random_vec(rng, 5);
    Tensor2 mu = outer(x, y);
    SymForm s = g2(mu);
    EXPECT_TRUE(rank_at_most_two(s.matrix()));
    EXPECT_LE(s.rank(), 2u);
    EXPECT_EQ(g2(mu.transpose()), s);
  }
  EXPECT_FALSE(rank_at_most_two(QMatrix::identity(3)));
}

TEST(Fibers, HintAndFactorization) {
  Tensor2 mu = outer(unit(4, 0), unit(4, 1));
  Fiber f = fiber_g2(g2(mu));
  EXPECT_FALSE(f.requires_extension);
  ASSERT_EQ(f.elements.size(), 2u);
  EXPECT_TRUE((f.elements[0] == mu && f.elements[1] == mu.transpose()) ||
              (f.elements[1] == mu && f.elements[0] == mu.transpose()));

  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    QVector x = random_vec(rng, 4), y = random_vec(rng, 4);
    Tensor2 m = outer(x, y);
    SymForm s = g2(m);
    if (s.rank() != 2) continue;
    Fiber hinted = fiber_g2(s, m);
    ASSERT_EQ(hinted.elements.size(), 2u);
    EXPECT_NE(hinted.elements[0], hinted.elements[1]);
    Fiber free = fiber_g2(s);
    ASSERT_FALSE(free.requires_extension);
    ASSERT_LE(free.elements.size(), 2u);
    for (const auto& e : free.elements) EXPECT_EQ(g2(e), s);
    // The unhinted fiber is the same unordered pair.
    bool same = (free.elements[0] == m && free.elements[1] == m.transpose()) ||
                (free.elements[1] == m && free.elements[0] == m.transpose());
    EXPECT_TRUE(same);
  }
}

TEST(Fibers, IrrationalFactorRequiresExtension) {
  QMatrix d(4, 4);
  d(0, 0) = 1;
  d(1, 1) = 1;
  Fiber f = fiber_g2(SymForm(d));
  EXPECT_TRUE(f.requires_extension);
  EXPECT_TRUE(f.elements.empty());
  EXPECT_THROW(fiber_g2(SymForm(QMatrix::identity(3))), PreconditionError);
}

TEST(GradedDims, Examples) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(graded_dims(n, 0), (GradedDims{1, 0}));
    EXPECT_EQ(graded_dims(n, 1), (GradedDims{n * (n + 1) / 2, n * (n - 1) / 2}));
  }
  EXPECT_EQ(graded_dims(2, 2), (GradedDims{6, 3}));
  EXPECT_EQ(graded_dims(3, 2), (GradedDims{21, 15}));
}

TEST(CoordRing, SmallCases) {
  CoordRingReport r21 = verify_coord_ring(2, 1);
  EXPECT_TRUE(r21.ok);
  EXPECT_EQ(r21.eigen, (GradedDims{3, 1}));
  CoordRingReport r22 = verify_coord_ring(2, 2);
  EXPECT_TRUE(r22.ok);
  EXPECT_EQ(r22.dim, 9u);
  EXPECT_EQ(r22.eigen, (GradedDims{6, 3}));
  CoordRingReport r32 = verify_coord_ring(3, 2);
  EXPECT_TRUE(r32.ok);
  EXPECT_EQ(r32.dim, 36u);
  EXPECT_EQ(r32.eigen, (GradedDims{21, 15}));
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t j = 0; j <= 3; ++j) {
      CoordRingReport r = verify_coord_ring(n, j);
      EXPECT_TRUE(r.ok) << n << " " << j;
      EXPECT_EQ(r.dim, r.expected);
      EXPECT_EQ(r.eigen, graded_dims(n, j));
      EXPECT_EQ(r.eigen.plus + r.eigen.minus, r.dim);
    }
  EXPECT_THROW(verify_coord_ring(4, 1), PreconditionError);
}

TEST(Pullback, TraceAndSingleEntry) {
  QMatrix tr = hyperplane_pullback(SymForm(QMatrix::identity(4)));
  EXPECT_EQ(tr, Scalar(2) * QMatrix::identity(4));
  QMatrix h(4, 4);
  h(0, 1) = h(1, 0) = 1;
  QMatrix b = hyperplane_pullback(SymForm(h));
  QMatrix expected(4, 4);
  expected(0, 1) = expected(1, 0) = 1;
  EXPECT_EQ(b, expected);
}

// B(x, y) against the direct sum over i <= j of h_ij g2(x (x) y)_ij.
TEST(Pullback, MatchesDirectEvaluation) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    QMatrix h(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) h(i, j) = h(j, i) = rng.uniform(-5, 5);
    QMatrix b = hyperplane_pullback(SymForm(h));
    QVector x = random_vec(rng, 4), y = random_vec(rng, 4);
    SymForm s = g2(outer(x, y));
    Scalar direct = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) direct += h(i, j) * s(i, j);
    Scalar via_b = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) via_b += x[i] * b(i, j) * y[j];
    EXPECT_EQ(via_b, direct);
  }
}

TEST(Jacobian, Ranks) {
  EXPECT_EQ(jacobian_rank_g2(unit(4, 0), unit(4, 1)), 7u);
  EXPECT_EQ(jacobian_rank_g2(unit(4, 0), unit(4, 0)), 4u);
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    QVector x = random_vec(rng, 2), y = random_vec(rng, 2);
    if (is_zero_vec(x) || is_zero_vec(y) || x[0] * y[1] == x[1] * y[0]) continue;
    EXPECT_EQ(jacobian_rank_g2(x, y), 3u);
  }
  for (int trial = 0; trial < 20; ++trial) {
    QVector x = random_vec(rng, 4);
    if (is_zero_vec(x)) continue;
    QVector y = x;
    for (auto& v : y) v *= 3;
    EXPECT_EQ(jacobian_rank_g2(x, y), 4u);
  }
  EXPECT_THROW(jacobian_rank_g2(QVector(4), unit(4, 1)), PreconditionError);
}

TEST(Incidence, Members) {
  EXPECT_TRUE(incidence_member(unit(4, 0), unit(4, 1)));
  EXPECT_FALSE(incidence_member(unit(4, 0), unit(4, 0)));
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    QVector x = random_vec(rng, 4);
    if (x[3] == 0) x[3] = 1;
    QVector y = random_vec(rng, 4);
    // Solve for y_3 so that x . y = 0.
    Scalar partial = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    y[3] = -partial / x[3];
    if (is_zero_vec(y)) continue;
    EXPECT_TRUE(incidence_member(x, y));
  }
  EXPECT_THROW(incidence_member(QVector(4), unit(4, 0)), PreconditionError);
}

TEST(Flops, Hypercubes) {
  FlopGraph g0 = flop_graph(0);
  EXPECT_EQ(g0.vertices, 1u);
  EXPECT_TRUE(g0.edges.empty());
  FlopGraph g1 = flop_graph(1);
  EXPECT_EQ(g1.vertices, 2u);
  EXPECT_EQ(g1.edges.size(), 1u);
  for (std::size_t r = 1; r <= 8; ++r) {
    FlopGraph g = flop_graph(r);
    EXPECT_EQ(g.vertices, std::size_t{1} << r);
    EXPECT_EQ(g.edges.size(), r * (std::size_t{1} << (r - 1)));
    EXPECT_TRUE(g.connected());
    EXPECT_TRUE(g.regular(r));
    for (std::size_t v = 0; v < g.vertices; ++v) EXPECT_EQ(__builtin_popcountll(v ^ g.antipode(v)), static_cast<int>(r));
  }
}

}  // namespace
