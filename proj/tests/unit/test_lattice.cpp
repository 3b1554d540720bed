#include <gtest/gtest.h>

#include <numeric>

#include "epw/lattice.hpp"
#include "epw/random.hpp"

namespace {

using namespace epw;

LatticeVector vec(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// u, v, k, l with Gram U + <-2> + <-2>.
IntegralLattice small_model() {
  return IntegralLattice(IntMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}}),
                         {"u", "v", "k", "l"});
}

LatticeVector combo(const IntegralLattice& l, std::initializer_list<std::pair<const char*, long>> terms) {
  LatticeVector v(l.rank());
  for (const auto& [name, c] : terms) {
    LatticeVector b = l.basis_vector(name);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
  }
  return v;
}

TEST(Constructors, Determinants) {
  EXPECT_EQ(hyperbolic_U().det(), -1);
  IntegralLattice e8 = E8(-1);
  EXPECT_EQ(e8.det(), 1);
  EXPECT_TRUE(e8.is_even());
  EXPECT_EQ(e8.signature(), (Inertia{0, 8, 0}));
  EXPECT_EQ(E8(1).signature(), (Inertia{8, 0, 0}));
  EXPECT_EQ(direct_sum(hyperbolic_U(), rank1(-4)).disc(), 4);
  EXPECT_EQ(rescale(hyperbolic_U(), 3).det(), -9);
  EXPECT_THROW(IntegralLattice(IntMatrix::from_rows({{1, 1}, {1, 1}})), PreconditionError);
  EXPECT_THROW(IntegralLattice(IntMatrix::from_rows({{1, 2}, {0, 1}})), PreconditionError);
}

TEST(Smith, FactorizationAndChain) {
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = rng.uniform(-6, 6);
    SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.left * m * s.right, s.d);
    EXPECT_EQ(abs(determinant(s.left)), 1);
    EXPECT_EQ(abs(determinant(s.right)), 1);
    BigInt prod = 1;
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_GE(s.d(i, i), 0);
      if (i + 1 < 4 && s.d(i, i) != 0) EXPECT_EQ(s.d(i + 1, i + 1) % s.d(i, i), 0);
      prod *= s.d(i, i);
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j) EXPECT_EQ(s.d(i, j), 0);
    }
    EXPECT_EQ(prod, abs(determinant(m)));
  }
}

TEST(Divisibility, Examples) {
  IntegralLattice u = hyperbolic_U();
  EXPECT_EQ(divisibility(vec({1, 0}), u), 1);
  EXPECT_EQ(divisibility(vec({1}), rank1(-2, "k")), 2);
  IntegralLattice m = small_model();
  LatticeVector beta = combo(m, {{"u", 2}, {"v", -2}, {"k", 1}, {"l", 1}});
  EXPECT_EQ(divisibility(beta, m), 2);
  EXPECT_EQ(m.square(beta), -12);
  EXPECT_THROW(divisibility(vec({0, 0}), u), PreconditionError);
}

TEST(DiscriminantGroups, Examples) {
  EXPECT_TRUE(discriminant_group(hyperbolic_U()).invariants.empty());
  IntegralLattice kl = direct_sum(rank1(-2, "k"), rank1(-2, "l"));
  DiscriminantGroup g = discriminant_group(kl);
  EXPECT_EQ(g.invariants, (std::vector<BigInt>{2, 2}));
  EXPECT_EQ(g.generator_values, (std::vector<Scalar>{Scalar(3) / 2, Scalar(3) / 2}));
  DiscriminantGroup z4 = discriminant_group(rank1(-4));
  EXPECT_EQ(z4.invariants, (std::vector<BigInt>{4}));
  EXPECT_EQ(z4.generator_values, (std::vector<Scalar>{Scalar(7) / 4}));
  for (const auto& l : {hyperbolic_U(), kl, rank1(-4), build_h_perp(), E8(-1), rescale(E8(1), 2)})
    EXPECT_EQ(discriminant_group(l).order(), l.disc());
}

TEST(DiscClasses, Examples) {
  IntegralLattice m = small_model();
  EXPECT_EQ(disc_class(combo(m, {{"u", 1}}), m).kl, std::make_pair(0, 0));
  EXPECT_EQ(disc_class(combo(m, {{"k", 1}}), m).kl, std::make_pair(1, 0));
  LatticeVector beta = combo(m, {{"u", 2}, {"v", -2}, {"k", 1}, {"l", 1}});
  EXPECT_EQ(disc_class(beta, m).kl, std::make_pair(1, 1));
  EXPECT_THROW(disc_class(vec({2, 0, 0, 0}), m), PreconditionError);
}

TEST(Complements, Examples) {
  IntegralLattice u = hyperbolic_U();
  OrthComplement c = orth_complement(vec({1, 1}), u);
  EXPECT_EQ(c.lattice.gram(), IntMatrix::from_rows({{-2}}));
  EXPECT_TRUE(c.primitive);

  IntegralLattice m = small_model();
  LatticeVector beta = combo(m, {{"u", 2}, {"v", -2}, {"k", 1}, {"l", 1}});
  OrthComplement b = orth_complement(beta, m);
  EXPECT_EQ(b.lattice.rank(), 3u);
  EXPECT_EQ(b.lattice.disc(), 12);
  EXPECT_EQ(disc_formula(beta, m), 12);
  std::vector<LatticeVector> basis{combo(m, {{"u", 1}, {"v", 1}}), combo(m, {{"k", 1}, {"l", -1}}),
                                   combo(m, {{"v", 1}, {"k", 1}})};
  for (const auto& w : basis) EXPECT_EQ(m.product(w, beta), 0);
  EXPECT_EQ(gram_of(m, basis), t_prime_gram());
  EXPECT_EQ(t_prime_gram(), IntMatrix::from_rows({{2, 0, 1}, {0, -4, -2}, {1, -2, -2}}));
}

TEST(HPerp, Invariants) {
  IntegralLattice h = build_h_perp();
  EXPECT_EQ(h.rank(), 22u);
  EXPECT_EQ(h.disc(), 4);
  EXPECT_EQ(h.signature(), (Inertia{2, 20, 0}));
  EXPECT_TRUE(h.is_even());
  EXPECT_EQ(discriminant_group(h).invariants, (std::vector<BigInt>{2, 2}));
  EXPECT_EQ(h.square(h.basis_vector("k")), -2);
  EXPECT_EQ(h.square(h.basis_vector("l")), -2);
}

TEST(HPerp, GammaComplement) {
  IntegralLattice h = build_h_perp();
  LatticeVector beta = gamma_beta(h);
  EXPECT_EQ(h.square(beta), -12);
  EXPECT_EQ(divisibility(beta, h), 2);
  EXPECT_EQ(disc_class(beta, h).kl, std::make_pair(1, 1));
  EXPECT_EQ(disc_formula(beta, h), 12);
  EXPECT_EQ(gram_of(h, gamma_complement_basis(h)), t_prime_gram());
  OrthComplement c = orth_complement(beta, h);
  EXPECT_EQ(c.lattice.rank(), 21u);
  EXPECT_EQ(c.lattice.disc(), 12);
  EXPECT_TRUE(c.primitive);
}

// Independent oracle: the determinant of the complement Gram computed from
// an integer kernel basis.
TEST(HPerp, DiscFormulaMatchesComplement) {
  IntegralLattice h = build_h_perp();
  Rng rng(42);
  int checked = 0;
  while (checked < 150) {
    LatticeVector v(h.rank());
    for (auto& x : v) x = rng.uniform(-3, 3);
    if (!is_primitive(v) || h.square(v) == 0) continue;
    OrthComplement c = orth_complement(v, h);
    EXPECT_TRUE(c.primitive);
    for (std::size_t i = 0; i < c.basis.rows(); ++i) {
      LatticeVector w(h.rank());
      for (std::size_t j = 0; j < h.rank(); ++j) w[j] = c.basis(i, j);
      EXPECT_EQ(h.product(v, w), 0);
    }
    EXPECT_EQ(disc_formula(v, h), c.lattice.disc());
    ++checked;
  }
}

TEST(DiscFormula, Preconditions) {
  IntegralLattice u = hyperbolic_U();
  EXPECT_THROW(disc_formula(vec({1, 0}), u), PreconditionError);
  EXPECT_THROW(disc_formula(vec({2, 2}), u), PreconditionError);
}

TEST(Heegner, TableShape) {
  IntegralLattice h = build_h_perp();
  for (long e = 1; e <= 40; ++e) {
    HeegnerEntry r = heegner_classify(e);
    EXPECT_EQ(r.nonempty, e % 4 != 3) << e;
    if (!r.nonempty) {
      EXPECT_FALSE(r.witness);
      continue;
    }
    ASSERT_TRUE(r.witness);
    const LatticeVector& w = *r.witness;
    EXPECT_TRUE(is_primitive(w));
    EXPECT_EQ(h.square(w), *r.square);
    EXPECT_EQ(divisibility(w, h), *r.div);
    EXPECT_EQ(disc_class(w, h).kl, *r.disc_class);
    EXPECT_EQ(orth_complement(w, h).lattice.disc(), 2 * e);
    switch (e % 4) {
      case 0:
        EXPECT_EQ(*r.div, 1);
        EXPECT_EQ(*r.square, -e / 2);
        EXPECT_EQ(*r.disc_class, std::make_pair(0, 0));
        break;
      case 1:
        EXPECT_EQ(*r.div, 2);
        EXPECT_EQ(*r.square, -2 * e);
        EXPECT_TRUE(*r.disc_class == std::make_pair(1, 0) || *r.disc_class == std::make_pair(0, 1));
        break;
      case 2:
        EXPECT_EQ(*r.div, 2);
        EXPECT_EQ(*r.square, -2 * e);
        EXPECT_EQ(*r.disc_class, std::make_pair(1, 1));
        break;
    }
  }
  HeegnerEntry six = heegner_classify(6);
  EXPECT_EQ(*six.witness, gamma_beta(h));
  HeegnerEntry four = heegner_classify(4);
  EXPECT_EQ(*four.square, -2);
  EXPECT_THROW(heegner_classify(0), PreconditionError);
}

TEST(BetaSearch, RecordsAndScan) {
  BetaRecord g = beta_record(2, 1, 1, -1);
  EXPECT_EQ(g.square, -12);
  EXPECT_EQ(g.div, 2);
  EXPECT_EQ(g.disc_class, std::make_pair(1, 1));
  EXPECT_EQ(g.disc, 12);
  EXPECT_TRUE(g.heegner);
  BetaRecord pos = beta_record(1, 0, 0, 1);
  EXPECT_EQ(pos.square, 2);
  EXPECT_FALSE(pos.heegner);

  BetaSearchResult r = beta_search(2, 2, 2, 2);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.heegner_records, 0u);
  for (const auto& rec : r.records) {
    EXPECT_EQ(std::gcd(std::gcd(rec.a, rec.b), rec.c), 1);
    EXPECT_EQ(rec.square, 2 * rec.a * rec.a * rec.t - 2 * rec.b * rec.b - 2 * rec.c * rec.c);
  }
}

TEST(NoK3, Certificate) {
  NoK3Transcript t = no_k3_certificate(50);
  EXPECT_TRUE(t.passed());
  EXPECT_TRUE(t.witnesses.empty());
  EXPECT_EQ(t.searched, 101u * 101u * 101u);
  EXPECT_EQ(t.residue_table.size(), 3u);
  EXPECT_EQ((t.residue_table.at({1, 0})), 1);
  EXPECT_EQ((t.residue_table.at({0, 1})), 1);
  EXPECT_EQ((t.residue_table.at({1, 1})), 1);
  EXPECT_TRUE(no_k3_certificate(1).passed());
  IntegralLattice tp(t_prime_gram());
  EXPECT_EQ(tp.square(vec({0, 1, 0})), -4);
  EXPECT_THROW(no_k3_certificate(0), PreconditionError);
}

TEST(NoK3, BruteForceOracle) {
  // Direct enumeration of isotropic vectors with the explicit form.
  const long b = 12;
  std::size_t isotropic = 0;
  for (long x = -b; x <= b; ++x)
    for (long y = -b; y <= b; ++y)
      for (long z = -b; z <= b; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        long q = 2 * x * x - 4 * y * y - 2 * z * z + 2 * x * z - 4 * y * z;
        if (q != 0) continue;
        ++isotropic;
        long g = std::gcd(std::gcd(2 * x + z, -4 * y - 2 * z), x - 2 * y - 2 * z);
        EXPECT_NE(std::abs(g), 1);
      }
  EXPECT_EQ(no_k3_certificate(b).isotropic, isotropic);
}

TEST(DivisorImages, Labels) {
  auto d = divisor_image_labels();
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0].discriminant, 10);
  EXPECT_EQ(d[1].discriminant, 12);
  EXPECT_EQ(d[2].discriminant, 8);
  for (const auto& x : d) EXPECT_TRUE(x.nonempty);
  EXPECT_EQ(*d[2].div, 1);
  EXPECT_EQ(*d[1].div, 2);
}

}  // namespace
