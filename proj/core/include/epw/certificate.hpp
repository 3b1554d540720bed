#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "epw/qmatrix.hpp"
#include "epw/subspace.hpp"
#include "epw/symform.hpp"

namespace epw {

// Sparse multivariate polynomial over Q; keys are exponent vectors.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}
  // q(x) = x^T S x
  static Polynomial from_quadratic_form(const SymForm& form);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }
  // Degree if homogeneous, nullopt otherwise (and for the zero polynomial).
  std::optional<unsigned> homogeneous_degree() const;
  Scalar evaluate(std::span<const Scalar> x) const;

 private:
  std::size_t num_vars_;
  std::map<Exponents, Scalar> terms_;
};

// Quadric on the ambient space, pulled back to the coordinates of the row
// space of `basis` (x = sum_i w_i * basis_i).
Polynomial restrict_quadric(const SymForm& quadric, const QMatrix& basis);

struct Certificate {
  enum class Status { CertifiedEmpty, Inconclusive };
  Status status = Status::Inconclusive;
  unsigned degree = 0;  // valid when CertifiedEmpty

  bool certified() const { return status == Status::CertifiedEmpty; }
};

inline constexpr unsigned kDefaultCertificateDegree = 6;

// Searches for a degree d <= max_degree at which the products q_i * m
// (m a monomial of degree d - 2) span all forms of degree d. That is a
// Nullstellensatz-style proof that the quadrics have no common projective
// zero. Inconclusive is not a proof of the opposite.
//
// Ranks are computed modulo primes after clearing denominators; full rank
// modulo a prime implies full rank over Q, so certificates are exact.
Certificate emptiness_certificate(std::span<const Polynomial> quads, unsigned max_degree = kDefaultCertificateDegree);

// Monomials of degree d in n variables, in lexicographically decreasing order.
std::vector<Polynomial::Exponents> monomials(std::size_t n, unsigned d);

// Macaulay matrix of the products q_i * m at degree d, over Q (rows are the
// products, columns the monomials of degree d). Used as an independent
// cross-check of the modular computation on small instances.
QMatrix macaulay_matrix(std::span<const Polynomial> quads, unsigned d);

// Certificate that P(W) contains no decomposable trivector: the Plucker
// quadrics restricted to W have no common zero. W must lie in the
// 20-dimensional space.
Certificate decomposable_free_certificate(const Subspace& w, unsigned max_degree = kDefaultCertificateDegree);

// The same question for quadrics given as forms on the ambient space.
Certificate restricted_certificate(std::span<const SymForm> quadrics, const Subspace& w,
                                   unsigned max_degree = kDefaultCertificateDegree);

}  // namespace epw
