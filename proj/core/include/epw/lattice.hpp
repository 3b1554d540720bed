#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epw/qmatrix.hpp"
#include "epw/symform.hpp"

namespace epw {

using LatticeVector = std::vector<BigInt>;

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  QMatrix to_qmatrix() const;
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
LatticeVector operator*(const IntMatrix& a, const LatticeVector& v);
BigInt determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;     // diagonal, d_i | d_{i+1}, nonnegative
  IntMatrix left;  // unimodular, left * m * right = d
  IntMatrix right;
};
SmithForm smith_normal_form(const IntMatrix& m);

class IntegralLattice {
 public:
  explicit IntegralLattice(IntMatrix gram, std::vector<std::string> labels = {});

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  // Unit vector of a labelled basis element.
  LatticeVector basis_vector(const std::string& label) const;

  BigInt det() const { return determinant(gram_); }
  BigInt disc() const { return abs(det()); }
  BigInt product(const LatticeVector& v, const LatticeVector& w) const;
  BigInt square(const LatticeVector& v) const { return product(v, v); }
  bool is_even() const;
  Inertia signature() const;

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

// Labels u<suffix>, v<suffix>.
IntegralLattice hyperbolic_U(const std::string& suffix = "");
// Labels <prefix>1 .. <prefix>8 along the Bourbaki numbering.
IntegralLattice E8(int sign, const std::string& prefix = "e");
IntegralLattice rank1(long n, const std::string& label = "x");
IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);
IntegralLattice rescale(const IntegralLattice& l, long c);

// gcd of the entries of gram * v.
BigInt divisibility(const LatticeVector& v, const IntegralLattice& l);
bool is_primitive(const LatticeVector& v);

struct DiscriminantGroup {
  std::vector<BigInt> invariants;       // nontrivial invariant factors
  std::vector<Scalar> generator_values;  // q(g) in Q/2Z, normalized to [0, 2)
  std::vector<QVector> generators;      // in L^v, expressed in the basis of L
  BigInt order() const;
};
DiscriminantGroup discriminant_group(const IntegralLattice& l);

struct DiscClass {
  // Coordinates in the invariant-factor generators of discriminant_group.
  std::vector<BigInt> components;
  // For lattices with basis vectors labelled k and l (the h-perp model):
  // the pair (<v,k>/div mod 2, <v,l>/div mod 2).
  std::optional<std::pair<int, int>> kl;
};
DiscClass disc_class(const LatticeVector& v, const IntegralLattice& l);

struct OrthComplement {
  IntegralLattice lattice;
  IntMatrix basis;  // rows: basis vectors in the coordinates of L
  bool primitive = false;
};
OrthComplement orth_complement(const LatticeVector& v, const IntegralLattice& l);

// Gram matrix of the given vectors (rows).
IntMatrix gram_of(const IntegralLattice& l, const std::vector<LatticeVector>& vectors);

// -v^2 disc(L) / div(v)^2. Throws when the result is not an integer or v^2 = 0.
BigInt disc_formula(const LatticeVector& v, const IntegralLattice& l);

// M + Zk + Zl with M = U + U + E8(-1) + E8(-1); labels u, v (first U),
// u2, v2, e1..e8, f1..f8, k, l.
IntegralLattice build_h_perp();

struct HeegnerEntry {
  long e = 0;
  bool nonempty = false;
  std::optional<BigInt> div;
  std::optional<BigInt> square;  // signed; negative
  std::optional<std::pair<int, int>> disc_class;
  std::optional<BigInt> disc;
  std::optional<LatticeVector> witness;
  std::string witness_text;
  // beta = a (u + t v) + b k + c l
  long a = 0, b = 0, c = 0, t = 0;
};

// Classification of the Heegner divisor of discriminant 2e. Nonempty entries
// carry a witness found by search and verified by divisibility, disc_class
// and disc_formula.
HeegnerEntry heegner_classify(long e);

struct BetaRecord {
  long a = 0, b = 0, c = 0, t = 0;
  BigInt square, div, disc;
  std::pair<int, int> disc_class{};
  bool heegner = false;  // negative square
};

struct BetaSearchResult {
  std::vector<BetaRecord> records;
  std::size_t heegner_records = 0;
  std::size_t trichotomy_violations = 0;
  std::size_t disc_6_mod_8 = 0;  // div-2 Heegner records with disc = 6 mod 8
  bool ok() const { return trichotomy_violations == 0 && disc_6_mod_8 == 0; }
};

// beta = a (u + t v) + b k + c l over |a| <= max_a, ..., gcd(a, b, c) = 1.
BetaSearchResult beta_search(long max_a, long max_b, long max_c, long max_t);
BetaRecord beta_record(long a, long b, long c, long t);

// Gram of the rank-3 lattice T'.
IntMatrix t_prime_gram();

struct NoK3Transcript {
  long bound = 0;
  std::size_t searched = 0;
  std::size_t isotropic = 0;                // nonzero w with w^2 = 0
  std::vector<LatticeVector> witnesses;     // isotropic with divisibility 1
  std::map<std::pair<int, int>, int> residue_table;  // (x, z) mod 2 -> x^2+z^2+xz mod 2
  bool residue_ok = false;
  bool parity_ok = false;  // x, z even forces every component of G w even
  bool passed() const { return witnesses.empty() && residue_ok && parity_ok; }
};
NoK3Transcript no_k3_certificate(long bound);

// beta = 2(u - v) + k + l in the h-perp model and its complement basis
// (u + v, k - l, v + k).
LatticeVector gamma_beta(const IntegralLattice& h_perp);
std::vector<LatticeVector> gamma_complement_basis(const IntegralLattice& h_perp);

struct DivisorImage {
  std::string name;
  long discriminant = 0;  // 2e
  bool nonempty = false;
  std::optional<BigInt> div;
};
// Delta, Gamma, Sigma with 2e = 10, 12, 8.
std::vector<DivisorImage> divisor_image_labels();

std::string format_vector(const LatticeVector& v, const IntegralLattice& l);

}  // namespace epw
