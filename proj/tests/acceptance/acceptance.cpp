// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "epw/double_cover.hpp"
#include "epw/exterior.hpp"
#include "epw/lagrangian.hpp"
#include "epw/lattice.hpp"
#include "epw/random.hpp"
#include "epw/strata.hpp"
#include "epwcli/cli.hpp"

namespace {

using namespace epw;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

QMatrix random_int_matrix(Rng& rng, std::size_t r, std::size_t c, long bound) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

Matrix3 random_matrix3(Rng& rng, long bound) { return Matrix3::from_qmatrix(random_int_matrix(rng, 3, 3, bound)); }

Scalar minor(const Matrix3& m, std::size_t r, std::size_t c) {
  std::array<std::size_t, 2> rows{}, cols{};
  for (std::size_t i = 0, n = 0; i < 3; ++i)
    if (i != r) rows[n++] = i;
  for (std::size_t j = 0, n = 0; j < 3; ++j)
    if (j != c) cols[n++] = j;
  return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
}

std::string str(std::size_t n) { return std::to_string(n); }

// Certified random Lagrangians shared by criteria 4 and 5.
std::vector<CertifiedLagrangian>& certified_pool() {
  static std::vector<CertifiedLagrangian> pool;
  return pool;
}

const std::vector<CertifiedLagrangian>& ensure_pool(std::size_t n) {
  auto& pool = certified_pool();
  for (std::uint64_t i = 0; pool.size() < n && i < 4 * n; ++i)
    if (auto c = CertifiedLagrangian::certify(random_lagrangian(Rng::derive_seed(2026, i)))) pool.push_back(*c);
  return pool;
}

Outcome symplectic_core() {
  const std::size_t gram_rank = rank(pairing_gram());
  Rng rng(1);
  std::size_t ok = 0;
  const std::size_t n = 10000;
  for (std::size_t i = 0; i < n; ++i) {
    Subspace u;
    do u = Subspace::span(kV6, random_int_matrix(rng, 3, kV6, kDefaultEntryBound));
    while (u.dim() != 3);
    const Subspace t = tangent_lagrangian(u);
    ok += t.dim() == 10 && is_lagrangian(t);
  }
  return {ok == n && gram_rank == 20, str(ok) + "/" + str(n) + " tangent spaces Lagrangian, pairing rank " + str(gram_rank)};
}

Outcome phi_suite() {
  Rng rng(2);
  std::size_t checked = 0, bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Matrix3 m = random_matrix3(rng, kDefaultEntryBound);
    const Matrix3 p = phi_cofactor(m);
    // Cofactors of Phi(M) by direct expansion: Phi(M)^{i,j} = det(M) x_ij.
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) bad += minor(p, b, a) != m.det() * m(a, b);
    bad += phi_cofactor(p) != m.det() * m;
    ++checked;
  }
  std::size_t low = 0, low_bad = 0;
  while (low < 1000) {
    const std::size_t r = 1 + low % 2;
    const QMatrix f = random_int_matrix(rng, 3, r, 6) * random_int_matrix(rng, r, 3, 6);
    const Matrix3 m = Matrix3::from_qmatrix(f);
    if (m.rank() != r) continue;
    low_bad += phi_cofactor(m).rank() != r - 1;
    ++low;
  }
  return {bad == 0 && low_bad == 0, str(checked) + " identity checks (" + str(bad) + " bad), " + str(low) +
                                        " low-rank mappings (" + str(low_bad) + " bad)"};
}

Outcome restriction_ranks() {
  const Chart c = Chart::standard();
  const std::array<std::size_t, 5> expected{0, 1, 3, 6, 9};
  std::ostringstream detail;
  bool pass = true;
  for (std::size_t k = 1; k <= 4; ++k) {
    std::size_t good = 0, total = 0;
    for (std::uint64_t s = 0; total < 20 && s < 40; ++s) {
      auto inst = constructed_instance(c, k, Rng::derive_seed(300 + k, s));
      if (!inst) continue;
      ++total;
      const RestrictionMap r = restriction_map(inst->k, c);
      bool ok = r.rank == expected[k];
      if (k == 4) ok = ok && r.annihilator_rank && *r.annihilator_rank == 4;
      good += ok;
    }
    pass = pass && total >= 20 && good == total;
    detail << "k=" << k << ": " << good << "/" << total << (k < 4 ? ", " : "");
  }
  return {pass, detail.str()};
}

Outcome quartic_degree() {
  const auto& pool = ensure_pool(10);
  std::size_t pairs = 0, fours = 0, root_checks = 0, root_bad = 0;
  for (std::size_t i = 0; i < pool.size() && i < 10; ++i) {
    const Subspace& a = pool[i].subspace();
    const Pencil p = random_pencil(Rng::derive_seed(400, i));
    const LineDegree ld = line_degree(a, p, Rng::derive_seed(401, i));
    ++pairs;
    const auto qr = divide(ld.d, ld.frame_factor);
    fours += ld.degree == 4 && qr.remainder.is_zero();
    // Roots of d_A / h at integer parameters are exactly the positive-corank points.
    for (long t = -5; t <= 5; ++t) {
      const Scalar tt(t);
      if (ld.frame_factor(tt) == 0) continue;
      ++root_checks;
      root_bad += (qr.quotient(tt) == 0) != (corank(a, Subspace::span(kV6, p.basis_at(tt))) > 0);
    }
  }
  return {pairs >= 10 && fours == pairs && root_bad == 0,
          str(fours) + "/" + str(pairs) + " pairs of degree 4, " + str(root_checks) + " root spot checks (" +
              str(root_bad) + " bad)"};
}

Outcome corank_bound() {
  const auto& pool = ensure_pool(10);
  const Chart c = Chart::standard();
  std::size_t total = 0, max_corank = 0, lagrangians = 0, gamma_fours = 0;
  for (std::size_t i = 0; i < pool.size() && i < 10; ++i) {
    const StratumSample s = stratum_sample(pool[i], 9000, Rng::derive_seed(500, i));
    total += s.samples;
    max_corank = std::max(max_corank, s.max_corank());
    ++lagrangians;
  }
  for (std::uint64_t g = 0; g < 2; ++g) {
    auto inst = constructed_instance(c, 4, Rng::derive_seed(510, g));
    if (!inst) continue;
    auto cert = CertifiedLagrangian::certify(inst->a);
    if (!cert) continue;
    const StratumSample s = stratum_sample(*cert, 5000, Rng::derive_seed(520, g), {c.u0()});
    total += s.samples;
    max_corank = std::max(max_corank, s.max_corank());
    gamma_fours += s.points.front().corank == 4;
    ++lagrangians;
  }
  return {total >= 100000 && lagrangians >= 10 && max_corank <= 4 && gamma_fours >= 1 && max_corank == 4,
          str(total) + " points on " + str(lagrangians) + " certified Lagrangians, max corank " + str(max_corank) +
              ", corank 4 attained on " + str(gamma_fours) + " gamma instances"};
}

Outcome tangent_identity() {
  const Chart c = Chart::standard();
  std::size_t total = 0, good = 0;
  for (std::size_t k : {2u, 3u, 4u})
    for (std::uint64_t s = 0; s < 4; ++s) {
      auto inst = constructed_instance(c, k, Rng::derive_seed(600 + k, s));
      if (!inst) continue;
      const TangentMapReport r = tangent_map_check(inst->a, c);
      ++total;
      good += r.matches && r.k == k;
    }
  return {total >= 10 && good == total, str(good) + "/" + str(total) + " instances with k in {2,3,4}"};
}

Outcome double_cover() {
  Rng rng(7);
  std::size_t minors_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    QVector x(4), y(4);
    for (auto& v : x) v = rng.uniform(-9, 9);
    for (auto& v : y) v = rng.uniform(-9, 9);
    minors_ok += rank_at_most_two(g2(outer(x, y)).matrix());
  }
  std::size_t jac_ok = 0, jac_total = 0;
  while (jac_total < 100) {
    QMatrix xy = random_int_matrix(rng, 2, 4, 9);
    if (rank(xy) < 2) continue;
    ++jac_total;
    jac_ok += jacobian_rank_g2(xy.row(0), xy.row(1)) == 7;
  }
  std::size_t ring_ok = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t j = 0; j <= 3; ++j) {
      const CoordRingReport r = verify_coord_ring(n, j);
      ring_ok += r.ok && r.eigen == graded_dims(n, j);
    }
  const bool trace_ok = hyperplane_pullback(SymForm(QMatrix::identity(4))) == Scalar(2) * QMatrix::identity(4);
  return {minors_ok == 1000 && jac_ok == 100 && ring_ok == 12 && trace_ok,
          "minors " + str(minors_ok) + "/1000, jacobian 7 at " + str(jac_ok) + "/100, coordinate ring " + str(ring_ok) +
              "/12, trace pullback = 2 sum x_i y_i: " + (trace_ok ? "yes" : "no")};
}

Outcome lattices() {
  const IntegralLattice h = build_h_perp();
  Rng rng(8);
  std::size_t disc_ok = 0, disc_total = 0;
  while (disc_total < 1000) {
    LatticeVector v(h.rank());
    for (auto& x : v) x = rng.uniform(-3, 3);
    if (!is_primitive(v) || h.square(v) == 0) continue;
    ++disc_total;
    disc_ok += disc_formula(v, h) == orth_complement(v, h).lattice.disc();
  }
  std::size_t table_ok = 0;
  for (long e = 1; e <= 40; ++e) {
    const HeegnerEntry r = heegner_classify(e);
    bool ok = r.nonempty == (e % 4 != 3);
    if (r.nonempty) {
      ok = ok && r.witness && h.square(*r.witness) == *r.square && divisibility(*r.witness, h) == *r.div &&
           disc_class(*r.witness, h).kl == r.disc_class && orth_complement(*r.witness, h).lattice.disc() == 2 * e;
    }
    table_ok += ok;
  }
  const HeegnerEntry r4 = heegner_classify(4), r5 = heegner_classify(5), r6 = heegner_classify(6);
  const bool rows_ok = *r4.div == 1 && abs(*r4.square) == 2 && *r4.disc_class == std::make_pair(0, 0) && *r5.div == 2 &&
                       abs(*r5.square) == 10 && (*r5.disc_class == std::make_pair(1, 0) || *r5.disc_class == std::make_pair(0, 1)) &&
                       *r6.div == 2 && abs(*r6.square) == 12 && *r6.disc_class == std::make_pair(1, 1);
  const bool gram_ok = gram_of(h, gamma_complement_basis(h)) ==
                       IntMatrix::from_rows({{2, 0, 1}, {0, -4, -2}, {1, -2, -2}});
  const NoK3Transcript t = no_k3_certificate(50);
  return {disc_ok == 1000 && table_ok == 40 && rows_ok && gram_ok && t.passed(),
          "disc formula " + str(disc_ok) + "/1000, table " + str(table_ok) + "/40, rows 4/5/6 " +
              (rows_ok ? "ok" : "bad") + ", beta-perp Gram " + (gram_ok ? "ok" : "bad") + ", no-K3 B=50 " +
              (t.passed() ? "passed" : "failed")};
}

Outcome flop_graphs() {
  std::size_t ok = 0;
  for (std::size_t r = 0; r <= 6; ++r) {
    const FlopGraph g = flop_graph(r);
    const std::size_t edges = r == 0 ? 0 : r * (std::size_t{1} << (r - 1));
    ok += g.vertices == (std::size_t{1} << r) && g.edges.size() == edges && g.connected() && g.regular(r);
  }
  return {ok == 7, str(ok) + "/7 hypercubes for r = 0..6"};
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands{
      {"verify-identities"},
      {"verify-identities", "--format", "csv", "--seed", "5"},
      {"strata", "--gamma", "--line-degree"},
      {"strata", "--format", "csv", "--samples", "200"},
      {"lattice-table"},
      {"lattice-table", "--format", "json", "--bound", "20"},
      {"no-k3"},
      {"no-k3", "--format", "json"},
      {"no-k3", "--format", "csv"}};
  std::size_t same = 0;
  for (const auto& args : commands) {
    std::ostringstream o1, o2, e1, e2;
    const int c1 = cli::run(args, o1, e1);
    const int c2 = cli::run(args, o2, e2);
    same += c1 == cli::kOk && c1 == c2 && o1.str() == o2.str() && !o1.str().empty();
  }
  return {same == commands.size(), str(same) + "/" + str(commands.size()) + " invocations byte-identical"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "symplectic core", symplectic_core},
      {2, "cofactor involution identities", phi_suite},
      {3, "restriction map ranks", restriction_ranks},
      {4, "quartic line degree", quartic_degree},
      {5, "corank bound", corank_bound},
      {6, "tangent map identity", tangent_identity},
      {7, "double cover", double_cover},
      {8, "lattices", lattices},
      {9, "flop graph", flop_graphs},
      {10, "CLI determinism", determinism}};
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("[%s] %2d %-32s %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
