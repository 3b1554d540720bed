#include "epw/strata.hpp"

#include <algorithm>

#include "epw/modp.hpp"
#include "epw/random.hpp"

namespace epw {

namespace {

std::vector<std::uint32_t> reduce_row(std::span<const Scalar> row, std::uint32_t p) {
  std::vector<std::uint32_t> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = modp::reduce(row[j].get_num(), p);
  return out;
}

// 3x3 minor of the rows r0, r1, r2 on columns (i, j, k), modulo p.
std::uint64_t minor3(const std::array<std::array<std::uint64_t, 6>, 3>& r, std::size_t i, std::size_t j, std::size_t k,
                     std::uint64_t p) {
  auto m2 = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return (r[a][c] * r[b][d] % p + p - r[a][d] * r[b][c] % p) % p;
  };
  std::uint64_t s = r[0][i] * m2(1, 2, j, k) % p;
  s = (s + p - r[0][j] * m2(1, 2, i, k) % p) % p;
  s = (s + r[0][k] * m2(1, 2, i, j)) % p;
  return s;
}

Vec6 row6(const QMatrix& m, std::size_t i) {
  Vec6 v;
  for (std::size_t j = 0; j < kV6; ++j) v[j] = m(i, j);
  return v;
}

// Entries (i <= j) of a symmetric matrix, row by row.
QVector upper_entries(const QMatrix& s) {
  QVector out;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = i; j < s.cols(); ++j) out.push_back(s(i, j));
  return out;
}

SymForm lift_to_tangent(const SymForm& f) {
  QMatrix m(10, 10);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) m(i + 1, j + 1) = f(i, j);
  return SymForm(std::move(m));
}

QMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

}  // namespace

std::size_t corank(const Subspace& a, const Subspace& u) { return intersection_dim(a, tangent_lagrangian(u)); }

CorankEngine::CorankEngine(const Subspace& a) : a_(a), p_(modp::primes()[0]) {
  if (!is_lagrangian(a)) throw PreconditionError("CorankEngine: A is not Lagrangian");
  const QMatrix basis = integer_basis(a);
  for (std::size_t i = 0; i < basis.rows(); ++i) a_rows_.push_back(reduce_row(basis.row(i), p_));
}

std::size_t CorankEngine::operator()(const Subspace& u) const {
  if (u.ambient_dim() != kV6 || u.dim() != 3) throw PreconditionError("CorankEngine: U must be a 3-plane in V6");
  const QMatrix ub = integer_basis(u);
  std::array<std::array<std::uint64_t, 6>, 3> r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < kV6; ++j) r[i][j] = modp::reduce(ub(i, j).get_num(), p_);

  modp::Echelon e(kWedge3, p_);
  for (const auto& row : a_rows_) e.add_row(row);
  std::array<std::array<std::uint64_t, 6>, 3> w{};
  std::vector<std::uint32_t> row(kWedge3);
  const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    for (std::size_t k = 0; k < kV6; ++k) {
      w[0] = r[pr[0]];
      w[1] = r[pr[1]];
      w[2] = {};
      w[2][k] = 1;
      for (std::size_t t = 0; t < kWedge3; ++t) {
        const auto& tr = triple(t);
        row[t] = static_cast<std::uint32_t>(minor3(w, tr[0], tr[1], tr[2], p_));
      }
      e.add_row(row);
      if (e.full()) return 0;
    }
  }
  ++fallbacks_;
  return corank(a_, u);
}

SymForm q_of_lagrangian(const Subspace& a, const Chart& chart) { return chart.form_of(a); }

SymForm psi(const Subspace& a, const Subspace& u, const Chart& chart) {
  return chart.form_of(tangent_lagrangian(u)) - chart.form_of(a);
}

std::vector<SymForm> cofactor_quadrics() {
  std::vector<SymForm> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::array<std::size_t, 2> rows{}, cols{};
      for (std::size_t t = 0, r = 0, c = 0; t < 3; ++t) {
        if (t != j) rows[r++] = t;
        if (t != i) cols[c++] = t;
      }
      QMatrix m(9, 9);
      auto add = [&](std::size_t p, std::size_t q, const Scalar& c) {
        m(p, q) += c / 2;
        m(q, p) += c / 2;
      };
      add(3 * rows[0] + cols[0], 3 * rows[1] + cols[1], 1);
      add(3 * rows[0] + cols[1], 3 * rows[1] + cols[0], -1);
      out.emplace_back(std::move(m));
    }
  return out;
}

std::vector<SymForm> cofactor_quadrics(const Chart&) {
  std::vector<SymForm> out;
  for (const auto& f : cofactor_quadrics()) out.push_back(lift_to_tangent(f));
  return out;
}

SymForm theta(const Matrix3& b) {
  const auto quads = cofactor_quadrics();
  SymForm s = SymForm::zero(9);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c) {
      if (sgn(b(a, c)) == 0) continue;
      Scalar f = 2 * b(a, c);
      if ((a + c) % 2 == 1) f = -f;
      s = s + f * quads[3 * c + a];
    }
  return lift_to_tangent(s);
}

Matrix3 phi_cofactor(const Matrix3& m) {
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::array<std::size_t, 2> rows{}, cols{};
      for (std::size_t t = 0, r = 0, c = 0; t < 3; ++t) {
        if (t != j) rows[r++] = t;
        if (t != i) cols[c++] = t;
      }
      out(i, j) = m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
    }
  return out;
}

QMatrix tangent_coordinates(const Subspace& k, const Chart& chart) {
  if (k.ambient_dim() != kWedge3) throw PreconditionError("tangent_coordinates: K must live in the 20-dimensional space");
  const QMatrix coords = chart.coordinates(k.basis());
  if (!coords.block(0, 10, coords.rows(), 10).is_zero())
    throw PreconditionError("tangent_coordinates: K is not contained in T_U0");
  return coords.block(0, 0, coords.rows(), 10);
}

RestrictionMap restriction_map(const Subspace& k, const Chart& chart) {
  if (k.dim() < 1 || k.dim() > 4) throw PreconditionError("restriction_map: dim K must be between 1 and 4");
  const QMatrix w = tangent_coordinates(k, chart);
  RestrictionMap r;
  r.k = k.dim();
  const std::size_t sym = r.k * (r.k + 1) / 2;
  r.matrix = QMatrix(sym, 9);
  const auto quads = cofactor_quadrics(chart);
  for (std::size_t c = 0; c < quads.size(); ++c) {
    const QVector col = upper_entries(quads[c].restrict_to(w).matrix());
    for (std::size_t i = 0; i < sym; ++i) r.matrix(i, c) = col[i];
  }
  r.rank = rank(r.matrix);
  if (r.k == 4) {
    const QMatrix ann = kernel(r.matrix.transpose());
    if (ann.rows() == 1) {
      // Dual pairing <p, S> = sum_ij p_ij S_ij halves the off-diagonal entries.
      QMatrix p(4, 4);
      std::size_t idx = 0;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j, ++idx) {
          p(i, j) = i == j ? ann(0, idx) : ann(0, idx) / 2;
          p(j, i) = p(i, j);
        }
      r.annihilator_rank = rank(p);
      r.annihilator = std::move(p);
    }
  }
  return r;
}

TangentMapReport tangent_map_check(const Subspace& a, const Chart& chart) {
  TangentMapReport report;
  const Subspace k = intersection(a, tangent_lagrangian(chart.u0()));
  report.k = k.dim();
  if (report.k == 0) {
    report.matches = true;
    report.direction_matches.fill(true);
    return report;
  }
  const SymForm qa = chart.form_of(a);
  const QMatrix w = tangent_coordinates(k, chart);
  const QMatrix wt = w.transpose();
  const std::size_t points = std::max<std::size_t>(report.k + 3, 5);

  report.matches = true;
  for (std::size_t dir = 0; dir < 9; ++dir) {
    const Matrix3 b = Matrix3::unit(dir / 3, dir % 3);
    std::vector<Scalar> xs;
    std::vector<QMatrix> values;
    for (std::size_t i = 1; i <= points + 1; ++i) {
      const Scalar e(static_cast<long>(i));
      xs.push_back(e);
      const SymForm qu = chart.form_of(tangent_lagrangian(chart.point(e * b)));
      values.push_back(w * (qu - qa).matrix() * wt);
    }
    bool ok = true;
    QMatrix linear(report.k, report.k);
    for (std::size_t i = 0; i < report.k; ++i)
      for (std::size_t j = 0; j < report.k; ++j) {
        std::vector<Scalar> ys;
        for (std::size_t t = 0; t < points; ++t) ys.push_back(values[t](i, j));
        const UPoly p = UPoly::interpolate(std::span(xs).first(points), ys);
        if (p(xs.back()) != values.back()(i, j))
          throw VerificationFailure("tangent_map_check: interpolation failed validation; degree bound exceeded");
        if (sgn(p.coeff(0)) != 0) ok = false;  // psi vanishes on K at e = 0
        linear(i, j) = p.coeff(1);
      }
    ok = ok && linear == w * theta(b).matrix() * wt;
    report.direction_matches[dir] = ok;
    report.matches = report.matches && ok;
  }
  return report;
}

QMatrix Pencil::basis_at(const Scalar& t) const {
  QMatrix m(3, kV6);
  for (std::size_t j = 0; j < kV6; ++j) {
    m(0, j) = u1[j];
    m(1, j) = u2[j];
    m(2, j) = x[j] + t * y[j];
  }
  return m;
}

Pencil random_pencil(std::uint64_t seed, long entry_bound) {
  Rng rng(seed);
  for (;;) {
    const QMatrix m = random_integer_matrix(rng, 4, kV6, entry_bound);
    if (rank(m) < 4) continue;
    Pencil p;
    p.u1 = row6(m, 0);
    p.u2 = row6(m, 1);
    p.x = row6(m, 2);
    p.y = row6(m, 3);
    return p;
  }
}

QMatrix PencilFrame::rows_at(const Pencil& pencil, const Scalar& t) const {
  const QMatrix b = pencil.basis_at(t);
  const Vec6 u1 = row6(b, 0), u2 = row6(b, 1), u3 = row6(b, 2);
  QMatrix rows(0, kWedge3);
  for (std::size_t k : g12) rows.append_row(wedge3(u1, u2, unit_vector(k)).coords);
  for (std::size_t k : g13) rows.append_row(wedge3(u1, u3, unit_vector(k)).coords);
  for (std::size_t k : g23) rows.append_row(wedge3(u2, u3, unit_vector(k)).coords);
  return rows;
}

PencilFrame pencil_frame(const Pencil& pencil) {
  const QMatrix b = pencil.basis_at(0);
  const Vec6 u[3] = {row6(b, 0), row6(b, 1), row6(b, 2)};
  QMatrix rows(0, kWedge3);
  std::size_t current = 0;
  auto pick = [&](std::size_t i, std::size_t j, auto& slots) {
    std::size_t filled = 0;
    for (std::size_t k = 0; k < kV6 && filled < slots.size(); ++k) {
      QMatrix trial = rows;
      trial.append_row(wedge3(u[i], u[j], unit_vector(k)).coords);
      const std::size_t r = rank(trial);
      if (r == current + 1) {
        rows = std::move(trial);
        current = r;
        slots[filled++] = k;
      }
    }
    if (filled < slots.size()) throw PreconditionError("pencil_frame: frame degenerate; the pencil is not a line in Gr(3,6)");
  };
  PencilFrame f;
  pick(0, 1, f.g12);
  pick(0, 2, f.g13);
  pick(1, 2, f.g23);
  if (rank(f.rows_at(pencil, 1)) != 10) throw PreconditionError("pencil_frame: frame degenerate at t = 1");
  return f;
}

UPoly pencil_determinant(const Subspace& a, const Pencil& pencil, const PencilFrame& frame) {
  if (a.ambient_dim() != kWedge3 || a.dim() != 10) throw PreconditionError("pencil_determinant: A must be 10-dimensional");
  const QMatrix ab = integer_basis(a);
  std::vector<Scalar> xs, ys;
  for (long t = 0; t < 8; ++t) {
    xs.emplace_back(t);
    ys.push_back(determinant(vstack(ab, frame.rows_at(pencil, Scalar(t)))));
  }
  UPoly d = UPoly::interpolate(xs, ys);
  if (d.degree() > 6) throw VerificationFailure("pencil_determinant: degree exceeds the frame bound 6");
  return d;
}

LineDegree line_degree(const Subspace& a, const Pencil& pencil, std::uint64_t seed) {
  const PencilFrame frame = pencil_frame(pencil);
  LineDegree out;
  out.d = pencil_determinant(a, pencil, frame);
  if (out.d.is_zero()) throw PreconditionError("line_degree: A meets T_U for every U on the pencil");
  UPoly h;
  for (std::uint64_t i = 0; i < 3; ++i)
    h = gcd(h, pencil_determinant(random_lagrangian(Rng::derive_seed(seed, i)), pencil, frame));
  if (!divide(out.d, h).remainder.is_zero())
    throw VerificationFailure("line_degree: frame factor does not divide d_A");
  out.frame_factor = h;
  out.degree = out.d.degree() - h.degree();
  return out;
}

std::optional<CertifiedLagrangian> CertifiedLagrangian::certify(const Subspace& a, unsigned max_degree) {
  if (!is_lagrangian(a)) throw PreconditionError("CertifiedLagrangian: A is not Lagrangian");
  const Certificate c = decomposable_free_certificate(a, max_degree);
  if (!c.certified()) return std::nullopt;
  return CertifiedLagrangian(a, c.degree);
}

std::size_t StratumSample::max_corank() const { return histogram.empty() ? 0 : histogram.rbegin()->first; }

StratumSample stratum_sample(const CertifiedLagrangian& a, std::size_t n_samples, std::uint64_t seed,
                             const std::vector<Subspace>& special, const std::string& id) {
  StratumSample s;
  s.seed = seed;
  s.lagrangian_id = id;
  const CorankEngine engine(a.subspace());
  for (const auto& u : special) {
    const std::size_t c = corank(a.subspace(), u);
    ++s.histogram[c];
    s.points.push_back({integer_basis(u), c, true});
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < n_samples; ++i) {
    Subspace u;
    do {
      u = Subspace::span(kV6, random_integer_matrix(rng, 3, kV6, kDefaultEntryBound));
    } while (u.dim() != 3);
    const std::size_t c = engine(u);
    ++s.histogram[c];
    if (c > 0) s.points.push_back({integer_basis(u), c, false});
  }
  s.samples = n_samples + special.size();
  if (s.max_corank() > kMaxCorank)
    throw VerificationFailure("stratum_sample: corank " + std::to_string(s.max_corank()) + " on a certified Lagrangian");
  return s;
}

StratumSample stratum_sample(const Subspace& a, std::size_t n_samples, std::uint64_t seed, unsigned max_degree,
                             const std::vector<Subspace>& special, const std::string& id) {
  auto certified = CertifiedLagrangian::certify(a, max_degree);
  if (!certified)
    throw UncertifiedInput("stratum_sample: no certificate that A is free of decomposable vectors up to degree " +
                           std::to_string(max_degree));
  return stratum_sample(*certified, n_samples, seed, special, id);
}

std::optional<GammaInstance> constructed_instance(const Chart& chart, std::size_t k, std::uint64_t seed,
                                                  unsigned max_attempts, unsigned max_degree) {
  if (k > 10) throw PreconditionError("constructed_instance: k must be at most 10");
  const Subspace t0 = tangent_lagrangian(chart.u0());
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t s = Rng::derive_seed(seed, attempt);
    Rng rng(s);
    const QMatrix coeffs = random_integer_matrix(rng, k, 10, kDefaultEntryBound);
    const Subspace kk = Subspace::span(kWedge3, coeffs * chart.tangent_frame());
    if (kk.dim() != k) continue;
    if (!decomposable_free_certificate(kk, max_degree).certified()) continue;
    Subspace a = lagrangian_through(kk, rng.next());
    if (intersection_dim(a, t0) != k || !chart.contains(a)) continue;
    return GammaInstance{kk, std::move(a), s, attempt + 1};
  }
  return std::nullopt;
}

}  // namespace epw
