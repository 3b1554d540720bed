#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epw/certificate.hpp"
#include "epw/lagrangian.hpp"
#include "epw/polynomial.hpp"
#include "epw/random.hpp"

namespace epw {

// dim(A ∩ T_U).
std::size_t corank(const Subspace& a, const Subspace& u);

// Corank evaluation against a fixed Lagrangian. A full rank modulo a prime
// proves corank 0; every other case is recomputed over Q.
class CorankEngine {
 public:
  explicit CorankEngine(const Subspace& a);
  std::size_t operator()(const Subspace& u) const;
  // Number of calls that needed the exact fallback.
  std::size_t exact_fallbacks() const { return fallbacks_; }

 private:
  Subspace a_;
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> a_rows_;
  mutable std::size_t fallbacks_ = 0;
};

SymForm q_of_lagrangian(const Subspace& a, const Chart& chart);

// q_U - q_A on T_{U0}; its kernel is identified with A ∩ T_U.
SymForm psi(const Subspace& a, const Subspace& u, const Chart& chart);

// The 2x2 minor M^{i,j} of M = (x_ab) in Hom(U0, Uinf): the determinant of
// the submatrix without column i and row j. Forms on the 9 entries, with
// x_ab at index 3a + b; quadrics are listed in the order (i, j) = (0,0),
// (0,1), ..., (2,2).
std::vector<SymForm> cofactor_quadrics();
// The same quadrics on T_{U0} in chart coordinates (coordinate 0 is the
// vertex direction and does not appear).
std::vector<SymForm> cofactor_quadrics(const Chart& chart);

// Linear term in e of q_{U(e b)}: 2 * sum_ab (-1)^(a+b) b_ab M^{b,a}.
SymForm theta(const Matrix3& b);

// Entry (i, j) is M^{i,j}.
Matrix3 phi_cofactor(const Matrix3& m);

struct RestrictionMap {
  std::size_t k = 0;
  // Rows: entries (i <= j) of a form on K; columns: the 9 cofactor quadrics.
  QMatrix matrix;
  std::size_t rank = 0;
  // k = 4 only: the point of Sym^2 K annihilating the image, as a
  // symmetric 4x4 matrix, and its rank.
  std::optional<QMatrix> annihilator;
  std::optional<std::size_t> annihilator_rank;
};

// r_K for K ⊂ T_{U0}, 1 <= dim K <= 4.
RestrictionMap restriction_map(const Subspace& k, const Chart& chart);

// Coordinates of K in the tangent frame of the chart (rows), after checking
// K ⊂ T_{U0}.
QMatrix tangent_coordinates(const Subspace& k, const Chart& chart);

struct TangentMapReport {
  std::size_t k = 0;
  bool matches = false;
  // Direction (a, b) at index 3a + b: whether the linear term matched.
  std::array<bool, 9> direction_matches{};
};

// Compares the linear term in e of psi(A, U(e E_ab)) on K = A ∩ T_{U0}
// with r_K(theta(E_ab)) for every direction. The linear term is extracted by
// exact interpolation and validated at one extra point.
TangentMapReport tangent_map_check(const Subspace& a, const Chart& chart);

// A Plucker line of 3-planes <u1, u2, x + t y>.
struct Pencil {
  Vec6 u1{}, u2{}, x{}, y{};
  QMatrix basis_at(const Scalar& t) const;
};

Pencil random_pencil(std::uint64_t seed, long entry_bound = kDefaultEntryBound);

// Fixed frame of T_{U(t)} along the pencil; the indices e_k used in each of
// the three groups u1^u2^e_k, u1^u3^e_k, u2^u3^e_k.
struct PencilFrame {
  std::array<std::size_t, 4> g12{};
  std::array<std::size_t, 3> g13{};
  std::array<std::size_t, 3> g23{};
  QMatrix rows_at(const Pencil& pencil, const Scalar& t) const;
};
PencilFrame pencil_frame(const Pencil& pencil);

// d_A(t) = det [basis of A; frame(t)], by interpolation at 8 points.
UPoly pencil_determinant(const Subspace& a, const Pencil& pencil, const PencilFrame& frame);

struct LineDegree {
  int degree = -1;
  UPoly d;           // d_A
  UPoly frame_factor;  // h
};

// deg d_A - deg gcd(d_A1, d_A2, d_A3) for three auxiliary random
// Lagrangians derived from `seed`.
LineDegree line_degree(const Subspace& a, const Pencil& pencil, std::uint64_t seed);

class UncertifiedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Lagrangian with a proof that it contains no decomposable vector.
class CertifiedLagrangian {
 public:
  static std::optional<CertifiedLagrangian> certify(const Subspace& a, unsigned max_degree = kDefaultCertificateDegree);
  const Subspace& subspace() const { return a_; }
  unsigned certificate_degree() const { return degree_; }

 private:
  CertifiedLagrangian(Subspace a, unsigned degree) : a_(std::move(a)), degree_(degree) {}
  Subspace a_;
  unsigned degree_ = 0;
};

struct StratumPoint {
  QMatrix u;  // integer basis of U
  std::size_t corank = 0;
  bool special = false;  // supplied by the caller rather than sampled
};

struct StratumSample {
  std::uint64_t seed = 0;
  std::string lagrangian_id;
  std::size_t samples = 0;
  std::map<std::size_t, std::size_t> histogram;
  // Special points and every sampled U of positive corank.
  std::vector<StratumPoint> points;
  std::size_t max_corank() const;
};

inline constexpr std::size_t kMaxCorank = 4;

// Coranks at n random 3-planes plus the given special points. Throws
// VerificationFailure if a corank above kMaxCorank appears.
StratumSample stratum_sample(const CertifiedLagrangian& a, std::size_t n_samples, std::uint64_t seed,
                             const std::vector<Subspace>& special = {}, const std::string& id = "");
// Certifies first; throws UncertifiedInput when the certificate is Inconclusive.
StratumSample stratum_sample(const Subspace& a, std::size_t n_samples, std::uint64_t seed, unsigned max_degree,
                             const std::vector<Subspace>& special = {}, const std::string& id = "");

// Random K ⊂ T_{U0} of dimension k certified decomposable-free, and a
// Lagrangian A with A ∩ T_{U0} = K exactly. Retries with derived seeds.
struct GammaInstance {
  Subspace k;
  Subspace a;
  std::uint64_t seed = 0;
  unsigned attempts = 0;
};
std::optional<GammaInstance> constructed_instance(const Chart& chart, std::size_t k, std::uint64_t seed,
                                                  unsigned max_attempts = 20, unsigned max_degree = kDefaultCertificateDegree);

}  // namespace epw
