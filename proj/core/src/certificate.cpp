#include "epw/certificate.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "epw/exterior.hpp"
#include "epw/modp.hpp"

namespace epw {

namespace {

struct ExponentHash {
  std::size_t operator()(const Polynomial::Exponents& e) const {
    std::size_t h = 1469598103934665603ULL;
    for (unsigned x : e) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

void monomials_rec(std::size_t n, unsigned d, std::size_t var, Polynomial::Exponents& cur,
                   std::vector<Polynomial::Exponents>& out) {
  if (var + 1 == n) {
    cur[var] = d;
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (unsigned k = d + 1; k-- > 0;) {
    cur[var] = k;
    monomials_rec(n, d - k, var + 1, cur, out);
  }
  cur[var] = 0;
}

// Integer coefficients of each polynomial, scaled by the lcm of denominators.
std::vector<std::vector<std::pair<Polynomial::Exponents, BigInt>>> integer_terms(std::span<const Polynomial> quads) {
  std::vector<std::vector<std::pair<Polynomial::Exponents, BigInt>>> out;
  for (const auto& q : quads) {
    BigInt den = 1;
    for (const auto& [e, c] : q.terms()) den = lcm(den, BigInt(c.get_den()));
    std::vector<std::pair<Polynomial::Exponents, BigInt>> terms;
    for (const auto& [e, c] : q.terms()) terms.emplace_back(e, BigInt(c.get_num() * (den / c.get_den())));
    out.push_back(std::move(terms));
  }
  return out;
}

bool full_rank_mod_p(const std::vector<std::vector<std::pair<Polynomial::Exponents, BigInt>>>& quads,
                     std::size_t n, unsigned d, std::uint32_t p) {
  const auto cols = monomials(n, d);
  std::unordered_map<Polynomial::Exponents, std::size_t, ExponentHash> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  const auto multipliers = monomials(n, d - 2);
  if (quads.size() * multipliers.size() < cols.size()) return false;

  modp::Echelon echelon(cols.size(), p);
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> reduced(quads.size());
  std::vector<std::pair<std::size_t, std::uint32_t>> row;
  Polynomial::Exponents e(n);
  // Monomial-major order spreads the leading terms early, which lets the
  // echelon fill up before all rows are seen.
  for (const auto& m : multipliers) {
    for (const auto& q : quads) {
      row.clear();
      for (const auto& [qe, c] : q) {
        for (std::size_t v = 0; v < n; ++v) e[v] = qe[v] + m[v];
        const std::uint32_t r = modp::reduce(c, p);
        if (r != 0) row.emplace_back(index.at(e), r);
      }
      echelon.add_sparse_row(row);
      if (echelon.full()) return true;
    }
  }
  return false;
}

}  // namespace

Polynomial Polynomial::from_quadratic_form(const SymForm& form) {
  const std::size_t n = form.dim();
  Polynomial p(n);
  Exponents e(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (sgn(form(i, j)) == 0) continue;
      e[i] += 1;
      e[j] += 1;
      p.add_term(e, i == j ? form(i, j) : Scalar(2 * form(i, j)));
      e[i] -= 1;
      e[j] -= 1;
    }
  return p;
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != num_vars_) throw PreconditionError("Polynomial::add_term: wrong number of variables");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  std::optional<unsigned> deg;
  for (const auto& [e, c] : terms_) {
    unsigned d = std::accumulate(e.begin(), e.end(), 0u);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

Scalar Polynomial::evaluate(std::span<const Scalar> x) const {
  if (x.size() != num_vars_) throw PreconditionError("Polynomial::evaluate: wrong number of variables");
  Scalar s = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t v = 0; v < num_vars_; ++v)
      for (unsigned k = 0; k < e[v]; ++k) t *= x[v];
    s += t;
  }
  return s;
}

Polynomial restrict_quadric(const SymForm& quadric, const QMatrix& basis) {
  return Polynomial::from_quadratic_form(quadric.restrict_to(basis));
}

std::vector<Polynomial::Exponents> monomials(std::size_t n, unsigned d) {
  std::vector<Polynomial::Exponents> out;
  if (n == 0) return out;
  Polynomial::Exponents cur(n, 0);
  monomials_rec(n, d, 0, cur, out);
  return out;
}

QMatrix macaulay_matrix(std::span<const Polynomial> quads, unsigned d) {
  if (quads.empty()) return {};
  const std::size_t n = quads.front().num_vars();
  const auto cols = monomials(n, d);
  std::unordered_map<Polynomial::Exponents, std::size_t, ExponentHash> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  QMatrix m(0, cols.size());
  Polynomial::Exponents e(n);
  for (const auto& mono : monomials(n, d - 2))
    for (const auto& q : quads) {
      QVector row(cols.size());
      for (const auto& [qe, c] : q.terms()) {
        for (std::size_t v = 0; v < n; ++v) e[v] = qe[v] + mono[v];
        row[index.at(e)] += c;
      }
      m.append_row(row);
    }
  return m;
}

Certificate emptiness_certificate(std::span<const Polynomial> quads, unsigned max_degree) {
  if (quads.empty()) return {};
  const std::size_t n = quads.front().num_vars();
  for (const auto& q : quads) {
    if (q.num_vars() != n) throw PreconditionError("emptiness_certificate: quadrics on different spaces");
    if (q.is_zero()) continue;
    auto deg = q.homogeneous_degree();
    if (!deg || *deg != 2) throw PreconditionError("emptiness_certificate: input is not homogeneous of degree 2");
  }
  std::vector<Polynomial> nonzero;
  for (const auto& q : quads)
    if (!q.is_zero()) nonzero.push_back(q);
  if (nonzero.empty() || n == 0) return {};
  const auto ints = integer_terms(nonzero);
  for (unsigned d = 2; d <= max_degree; ++d) {
    // A handful of primes: an unlucky prime only loses rank, never gains it.
    for (std::size_t k = 0; k < 2; ++k)
      if (full_rank_mod_p(ints, n, d, modp::primes()[k])) return {Certificate::Status::CertifiedEmpty, d};
  }
  return {};
}

Certificate restricted_certificate(std::span<const SymForm> quadrics, const Subspace& w, unsigned max_degree) {
  std::vector<Polynomial> restricted;
  const QMatrix basis = integer_basis(w);
  for (const auto& q : quadrics) {
    if (q.dim() != w.ambient_dim()) throw PreconditionError("restricted_certificate: dimension mismatch");
    restricted.push_back(restrict_quadric(q, basis));
  }
  return emptiness_certificate(restricted, max_degree);
}

Certificate decomposable_free_certificate(const Subspace& w, unsigned max_degree) {
  if (w.ambient_dim() != kWedge3) throw PreconditionError("decomposable_free_certificate: W must live in the 20-dimensional space");
  return restricted_certificate(plucker_quadrics(), w, max_degree);
}

}  // namespace epw
