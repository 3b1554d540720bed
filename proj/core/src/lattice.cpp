#include "epw/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace epw {

namespace {

BigInt gcd_of(const LatticeVector& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

int mod2(const BigInt& x) { return mpz_odd_p(x.get_mpz_t()) ? 1 : 0; }

BigInt mod_nonneg(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

const IntegralLattice& h_perp_model() {
  static const IntegralLattice l = build_h_perp();
  return l;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw PreconditionError("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix IntMatrix::to_qmatrix() const {
  QMatrix q(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) q(i, j) = Scalar((*this)(i, j));
  return q;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("IntMatrix: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

LatticeVector operator*(const IntMatrix& a, const LatticeVector& v) {
  if (a.cols() != v.size()) throw PreconditionError("IntMatrix: shape mismatch");
  LatticeVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& a = s.d;
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a(i, j) != 0 && (pi == r || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == r) return s;
      swap_rows(a, t, pi);
      swap_rows(s.left, t, pi);
      swap_cols(a, t, pj);
      swap_cols(s.right, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        const BigInt q = a(i, t) / a(t, t);
        row_axpy(a, i, t, q);
        row_axpy(s.left, i, t, q);
        clean = clean && a(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        const BigInt q = a(t, j) / a(t, t);
        col_axpy(a, j, t, q);
        col_axpy(s.right, j, t, q);
        clean = clean && a(t, j) == 0;
      }
      if (!clean) continue;
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      row_axpy(a, t, bad, -1);
      row_axpy(s.left, t, bad, -1);
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < r; ++j) s.left(t, j) = -s.left(t, j);
    }
  }
  return s;
}

IntegralLattice::IntegralLattice(IntMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (!gram_.is_symmetric()) throw PreconditionError("IntegralLattice: Gram matrix must be symmetric");
  if (!labels_.empty() && labels_.size() != gram_.rows()) throw PreconditionError("IntegralLattice: wrong number of labels");
  if (determinant(gram_) == 0) throw PreconditionError("IntegralLattice: Gram matrix is degenerate");
}

std::optional<std::size_t> IntegralLattice::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

LatticeVector IntegralLattice::basis_vector(const std::string& label) const {
  const auto i = index_of(label);
  if (!i) throw PreconditionError("IntegralLattice: unknown label " + label);
  LatticeVector v(rank());
  v[*i] = 1;
  return v;
}

BigInt IntegralLattice::product(const LatticeVector& v, const LatticeVector& w) const {
  if (v.size() != rank() || w.size() != rank()) throw PreconditionError("IntegralLattice: vector length mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) s += v[i] * gram_(i, j) * w[j];
  }
  return s;
}

bool IntegralLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (mod2(gram_(i, i)) != 0) return false;
  return true;
}

Inertia IntegralLattice::signature() const { return inertia(gram_.to_qmatrix()); }

IntegralLattice hyperbolic_U(const std::string& suffix) {
  return IntegralLattice(IntMatrix::from_rows({{0, 1}, {1, 0}}), {"u" + suffix, "v" + suffix});
}

IntegralLattice E8(int sign, const std::string& prefix) {
  if (sign != 1 && sign != -1) throw PreconditionError("E8: sign must be +1 or -1");
  static const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2 * sign;
  for (const auto& [a, b] : edges) {
    g(a, b) = -sign;
    g(b, a) = -sign;
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back(prefix + std::to_string(i));
  return IntegralLattice(std::move(g), std::move(labels));
}

IntegralLattice rank1(long n, const std::string& label) {
  if (n == 0) throw PreconditionError("rank1: n must be nonzero");
  return IntegralLattice(IntMatrix::from_rows({{n}}), {label});
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  const std::size_t n = a.rank(), m = b.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  }
  return IntegralLattice(std::move(g), std::move(labels));
}

IntegralLattice rescale(const IntegralLattice& l, long c) {
  if (c == 0) throw PreconditionError("rescale: c must be nonzero");
  IntMatrix g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= c;
  return IntegralLattice(std::move(g), l.labels());
}

BigInt divisibility(const LatticeVector& v, const IntegralLattice& l) {
  if (v.size() != l.rank()) throw PreconditionError("divisibility: vector length mismatch");
  if (gcd_of(v) == 0) throw PreconditionError("divisibility: zero vector");
  return gcd_of(l.gram() * v);
}

bool is_primitive(const LatticeVector& v) { return gcd_of(v) == 1; }

BigInt DiscriminantGroup::order() const {
  BigInt o = 1;
  for (const auto& d : invariants) o *= d;
  return o;
}

DiscriminantGroup discriminant_group(const IntegralLattice& l) {
  const SmithForm s = smith_normal_form(l.gram());
  const QMatrix gram_inv = *inverse(l.gram().to_qmatrix());
  const QMatrix left_inv = *inverse(s.left.to_qmatrix());
  DiscriminantGroup g;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (s.d(i, i) == 1) continue;
    g.invariants.push_back(s.d(i, i));
    const QVector y = left_inv.column(i);
    const QVector x = gram_inv * std::span<const Scalar>(y);
    Scalar q = 0;
    for (std::size_t k = 0; k < y.size(); ++k) q += x[k] * y[k];
    // Reduce into [0, 2).
    Scalar twice = q / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
    g.generator_values.push_back(q - 2 * Scalar(fl));
    g.generators.push_back(x);
  }
  return g;
}

DiscClass disc_class(const LatticeVector& v, const IntegralLattice& l) {
  if (!is_primitive(v)) throw PreconditionError("disc_class: v must be primitive");
  const BigInt d = divisibility(v, l);
  LatticeVector y = l.gram() * v;
  for (auto& x : y) x /= d;
  const SmithForm s = smith_normal_form(l.gram());
  const LatticeVector ly = s.left * y;
  DiscClass c;
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (s.d(i, i) != 1) c.components.push_back(mod_nonneg(ly[i], s.d(i, i)));
  const auto ik = l.index_of("k"), il = l.index_of("l");
  if (ik && il) c.kl = std::make_pair(mod2(y[*ik]), mod2(y[*il]));
  return c;
}

OrthComplement orth_complement(const LatticeVector& v, const IntegralLattice& l) {
  if (v.size() != l.rank()) throw PreconditionError("orth_complement: vector length mismatch");
  if (gcd_of(v) == 0) throw PreconditionError("orth_complement: zero vector");
  if (l.square(v) == 0) throw PreconditionError("orth_complement: isotropic v has a degenerate complement");
  const LatticeVector row = l.gram() * v;  // symmetric gram: v^T G = (G v)^T
  IntMatrix r(1, l.rank());
  for (std::size_t j = 0; j < l.rank(); ++j) r(0, j) = row[j];
  const SmithForm s = smith_normal_form(r);
  // r * right = (g, 0, ..., 0) up to the left unit: the trailing columns span the kernel.
  IntMatrix basis(l.rank() - 1, l.rank());
  for (std::size_t c = 1; c < l.rank(); ++c)
    for (std::size_t i = 0; i < l.rank(); ++i) basis(c - 1, i) = s.right(i, c);
  IntMatrix gram = basis * l.gram() * basis.transpose();
  const SmithForm sb = smith_normal_form(basis);
  bool primitive = true;
  for (std::size_t i = 0; i < basis.rows(); ++i) primitive = primitive && sb.d(i, i) == 1;
  return OrthComplement{IntegralLattice(std::move(gram)), std::move(basis), primitive};
}

IntMatrix gram_of(const IntegralLattice& l, const std::vector<LatticeVector>& vectors) {
  IntMatrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) g(i, j) = l.product(vectors[i], vectors[j]);
  return g;
}

BigInt disc_formula(const LatticeVector& v, const IntegralLattice& l) {
  if (!is_primitive(v)) throw PreconditionError("disc_formula: v must be primitive");
  const BigInt sq = l.square(v);
  if (sq == 0) throw PreconditionError("disc_formula: v is isotropic");
  const BigInt d = divisibility(v, l);
  const BigInt num = -sq * l.disc();
  if (num % (d * d) != 0) throw VerificationFailure("disc_formula: non-integral result");
  return num / (d * d);
}

IntegralLattice build_h_perp() {
  IntegralLattice m = direct_sum(direct_sum(hyperbolic_U(), hyperbolic_U("2")), direct_sum(E8(-1, "e"), E8(-1, "f")));
  return direct_sum(m, direct_sum(rank1(-2, "k"), rank1(-2, "l")));
}

BetaRecord beta_record(long a, long b, long c, long t) {
  const IntegralLattice& h = h_perp_model();
  LatticeVector beta(h.rank());
  beta[*h.index_of("u")] = a;
  beta[*h.index_of("v")] = BigInt(a) * t;
  beta[*h.index_of("k")] = b;
  beta[*h.index_of("l")] = c;
  BetaRecord r{a, b, c, t, h.square(beta), divisibility(beta, h), 0, {}, false};
  r.disc_class = *disc_class(beta, h).kl;
  r.heegner = r.square < 0;
  if (r.square != 0) r.disc = disc_formula(beta, h);
  return r;
}

BetaSearchResult beta_search(long max_a, long max_b, long max_c, long max_t) {
  BetaSearchResult out;
  for (long t = -max_t; t <= max_t; ++t)
    for (long a = -max_a; a <= max_a; ++a)
      for (long b = -max_b; b <= max_b; ++b)
        for (long c = -max_c; c <= max_c; ++c) {
          if (std::gcd(std::gcd(a, b), c) != 1) continue;
          BetaRecord r = beta_record(a, b, c, t);
          if (r.heegner) {
            ++out.heegner_records;
            bool ok = mod2(r.disc) == 0;
            const BigInt e = r.disc / 2;
            const BigInt e4 = mod_nonneg(e, 4);
            const auto cls = r.disc_class;
            if (r.div == 1) {
              ok = ok && e4 == 0 && cls == std::make_pair(0, 0) && 2 * r.square == -e;
            } else if (r.div == 2) {
              ok = ok && r.square == -2 * e;
              if (e4 == 1) ok = ok && (cls == std::make_pair(0, 1) || cls == std::make_pair(1, 0));
              else if (e4 == 2) ok = ok && cls == std::make_pair(1, 1);
              else ok = false;
              if (mod_nonneg(r.disc, 8) == 6) ++out.disc_6_mod_8;
            } else {
              ok = false;
            }
            if (!ok) ++out.trichotomy_violations;
          }
          out.records.push_back(std::move(r));
        }
  return out;
}

HeegnerEntry heegner_classify(long e) {
  if (e < 1) throw PreconditionError("heegner_classify: e must be positive");
  HeegnerEntry entry;
  entry.e = e;
  static const std::pair<long, long> bc[] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  for (long a : {1L, 2L}) {
    for (const auto& [b, c] : bc) {
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      // square = 2 t a^2 - 2 b^2 - 2 c^2 must equal -e/2 (a odd) or -2e (a even).
      long twice_target = a % 2 ? -e : -4 * e;  // 2 * target
      long num = twice_target + 4 * b * b + 4 * c * c;
      long den = 4 * a * a;
      if (num % den != 0) continue;
      const long t = num / den;
      const BetaRecord r = beta_record(a, b, c, t);
      if (!r.heegner || r.disc != 2 * e) continue;
      const IntegralLattice& h = h_perp_model();
      LatticeVector beta(h.rank());
      beta[*h.index_of("u")] = a;
      beta[*h.index_of("v")] = BigInt(a) * t;
      beta[*h.index_of("k")] = b;
      beta[*h.index_of("l")] = c;
      entry.nonempty = true;
      entry.div = r.div;
      entry.square = r.square;
      entry.disc_class = r.disc_class;
      entry.disc = r.disc;
      entry.witness_text = format_vector(beta, h);
      entry.witness = std::move(beta);
      entry.a = a;
      entry.b = b;
      entry.c = c;
      entry.t = t;
      break;
    }
    if (entry.nonempty) break;
  }
  const long e4 = e % 4;
  if (entry.nonempty == (e4 == 3))
    throw VerificationFailure("heegner_classify: witness search disagrees with e mod 4 for e = " + std::to_string(e));
  if (entry.nonempty) {
    bool ok;
    if (e4 == 0) ok = *entry.div == 1 && 2 * *entry.square == -e && *entry.disc_class == std::make_pair(0, 0);
    else if (e4 == 1)
      ok = *entry.div == 2 && *entry.square == -2 * e &&
           (*entry.disc_class == std::make_pair(0, 1) || *entry.disc_class == std::make_pair(1, 0));
    else ok = *entry.div == 2 && *entry.square == -2 * e && *entry.disc_class == std::make_pair(1, 1);
    if (!ok) throw VerificationFailure("heegner_classify: witness invariants disagree for e = " + std::to_string(e));
  }
  return entry;
}

IntMatrix t_prime_gram() { return IntMatrix::from_rows({{2, 0, 1}, {0, -4, -2}, {1, -2, -2}}); }

NoK3Transcript no_k3_certificate(long bound) {
  if (bound < 1) throw PreconditionError("no_k3_certificate: bound must be at least 1");
  NoK3Transcript tr;
  tr.bound = bound;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y)
      for (long z = -bound; z <= bound; ++z) {
        ++tr.searched;
        if (x == 0 && y == 0 && z == 0) continue;
        const long sq = 2 * x * x - 4 * y * y - 2 * z * z + 2 * x * z - 4 * y * z;
        if (sq != 0) continue;
        ++tr.isotropic;
        const long div = std::gcd(std::gcd(2 * x + z, -4 * y - 2 * z), x - 2 * y - 2 * z);
        if (div == 1) tr.witnesses.push_back({x, y, z});
      }
  tr.residue_ok = true;
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) {
      if (x == 0 && z == 0) continue;
      const int r = (x * x + z * z + x * z) % 2;
      tr.residue_table[{x, z}] = r;
      tr.residue_ok = tr.residue_ok && r == 1;
    }
  // With x and z even, the components of G w reduce mod 2 to (z, 0, x).
  tr.parity_ok = true;
  for (long x : {0L, 2L})
    for (long y : {0L, 1L})
      for (long z : {0L, 2L}) {
        const long comps[3] = {2 * x + z, -4 * y - 2 * z, x - 2 * y - 2 * z};
        for (long c : comps) tr.parity_ok = tr.parity_ok && c % 2 == 0;
      }
  return tr;
}

LatticeVector gamma_beta(const IntegralLattice& h) {
  LatticeVector b(h.rank());
  b[*h.index_of("u")] = 2;
  b[*h.index_of("v")] = -2;
  b[*h.index_of("k")] = 1;
  b[*h.index_of("l")] = 1;
  return b;
}

std::vector<LatticeVector> gamma_complement_basis(const IntegralLattice& h) {
  const LatticeVector u = h.basis_vector("u"), v = h.basis_vector("v"), k = h.basis_vector("k"),
                      l = h.basis_vector("l");
  LatticeVector b1(h.rank()), b2(h.rank()), b3(h.rank());
  for (std::size_t i = 0; i < h.rank(); ++i) {
    b1[i] = u[i] + v[i];
    b2[i] = k[i] - l[i];
    b3[i] = v[i] + k[i];
  }
  return {b1, b2, b3};
}

std::vector<DivisorImage> divisor_image_labels() {
  std::vector<DivisorImage> out = {{"Delta", 10, false, {}}, {"Gamma", 12, false, {}}, {"Sigma", 8, false, {}}};
  for (auto& d : out) {
    const HeegnerEntry entry = heegner_classify(d.discriminant / 2);
    d.nonempty = entry.nonempty;
    d.div = entry.div;
  }
  return out;
}

std::string format_vector(const LatticeVector& v, const IntegralLattice& l) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const std::string name = l.labels().empty() ? "b" + std::to_string(i + 1) : l.labels()[i];
    if (v[i] < 0) os << "-";
    else if (!first) os << "+";
    if (abs(v[i]) != 1) os << abs(v[i]);
    os << name;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace epw
