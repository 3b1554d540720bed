#include "epw/exterior.hpp"

#include <algorithm>
#include <utility>

namespace epw {

namespace {

struct Tables {
  std::array<std::array<std::size_t, 3>, kWedge3> triples{};
  std::array<std::array<std::array<int, kV6>, kV6>, kV6> index{};
  std::array<std::size_t, kWedge3> complement{};
  std::array<int, kWedge3> complement_sign{};
  std::array<std::array<std::size_t, 4>, 15> quads{};
};

int permutation_sign(std::vector<std::size_t> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

const Tables& tables() {
  static const Tables t = [] {
    Tables out;
    for (auto& a : out.index)
      for (auto& b : a) b.fill(-1);
    std::size_t n = 0;
    for (std::size_t i = 0; i < kV6; ++i)
      for (std::size_t j = i + 1; j < kV6; ++j)
        for (std::size_t k = j + 1; k < kV6; ++k) {
          out.triples[n] = {i, j, k};
          out.index[i][j][k] = static_cast<int>(n);
          ++n;
        }
    for (std::size_t a = 0; a < kWedge3; ++a) {
      std::vector<std::size_t> rest;
      const auto& tr = out.triples[a];
      for (std::size_t x = 0; x < kV6; ++x)
        if (std::find(tr.begin(), tr.end(), x) == tr.end()) rest.push_back(x);
      out.complement[a] = static_cast<std::size_t>(out.index[rest[0]][rest[1]][rest[2]]);
      out.complement_sign[a] = permutation_sign({tr[0], tr[1], tr[2], rest[0], rest[1], rest[2]});
    }
    std::size_t q = 0;
    for (std::size_t i = 0; i < kV6; ++i)
      for (std::size_t j = i + 1; j < kV6; ++j)
        for (std::size_t k = j + 1; k < kV6; ++k)
          for (std::size_t l = k + 1; l < kV6; ++l) out.quads[q++] = {i, j, k, l};
    return out;
  }();
  return t;
}

std::size_t quad_index(std::array<std::size_t, 4> s) {
  std::sort(s.begin(), s.end());
  const auto& q = tables().quads;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] == s) return i;
  throw PreconditionError("quad_index: not a 4-subset");
}

}  // namespace

TriVector TriVector::basis(std::size_t index) {
  if (index >= kWedge3) throw PreconditionError("TriVector::basis: index out of range");
  TriVector t;
  t.coords[index] = 1;
  return t;
}

bool TriVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

TriVector TriVector::from_span(std::span<const Scalar> v) {
  if (v.size() != kWedge3) throw PreconditionError("TriVector: expected 20 coordinates");
  TriVector t;
  std::copy(v.begin(), v.end(), t.coords.begin());
  return t;
}

TriVector operator+(const TriVector& a, const TriVector& b) {
  TriVector c = a;
  for (std::size_t i = 0; i < kWedge3; ++i) c.coords[i] += b.coords[i];
  return c;
}

TriVector operator-(const TriVector& a, const TriVector& b) {
  TriVector c = a;
  for (std::size_t i = 0; i < kWedge3; ++i) c.coords[i] -= b.coords[i];
  return c;
}

TriVector operator*(const Scalar& s, const TriVector& a) {
  TriVector c = a;
  for (auto& x : c.coords) x *= s;
  return c;
}

const std::array<std::size_t, 3>& triple(std::size_t index) { return tables().triples.at(index); }

std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k) {
  std::array<std::size_t, 3> s{i, j, k};
  std::sort(s.begin(), s.end());
  if (s[0] == s[1] || s[1] == s[2] || s[2] >= kV6) throw PreconditionError("triple_index: not a 3-subset");
  return static_cast<std::size_t>(tables().index[s[0]][s[1]][s[2]]);
}

Vec6 unit_vector(std::size_t i) {
  Vec6 v{};
  v.at(i) = 1;
  return v;
}

TriVector wedge3(const Vec6& v1, const Vec6& v2, const Vec6& v3) {
  TriVector t;
  for (std::size_t n = 0; n < kWedge3; ++n) {
    const auto& [i, j, k] = tables().triples[n];
    t.coords[n] = v1[i] * (v2[j] * v3[k] - v2[k] * v3[j]) - v1[j] * (v2[i] * v3[k] - v2[k] * v3[i]) +
                  v1[k] * (v2[i] * v3[j] - v2[j] * v3[i]);
  }
  return t;
}

Scalar symplectic_pairing(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != kWedge3 || b.size() != kWedge3) throw PreconditionError("symplectic_pairing: need 20 coordinates");
  const Tables& t = tables();
  Scalar s = 0;
  for (std::size_t i = 0; i < kWedge3; ++i) {
    const Scalar& x = a[i];
    const Scalar& y = b[t.complement[i]];
    if (sgn(x) == 0 || sgn(y) == 0) continue;
    if (t.complement_sign[i] > 0) s += x * y; else s -= x * y;
  }
  return s;
}

Scalar symplectic_pairing(const TriVector& a, const TriVector& b) { return symplectic_pairing(a.coords, b.coords); }

const QMatrix& pairing_gram() {
  static const QMatrix g = [] {
    QMatrix m(kWedge3, kWedge3);
    for (std::size_t i = 0; i < kWedge3; ++i)
      m(i, tables().complement[i]) = tables().complement_sign[i];
    return m;
  }();
  return g;
}

namespace {

// Sign of the interior product of e_p^* ^ e_q^* with e_I, where {p, q} is a
// subset of I, and the leftover index r. Zero sign when {p, q} is not in I.
std::pair<int, std::size_t> contraction(std::size_t p, std::size_t q, std::size_t I) {
  const auto& tr = tables().triples[I];
  auto at = [&](std::size_t x) { return static_cast<std::size_t>(std::find(tr.begin(), tr.end(), x) - tr.begin()); };
  const std::size_t ip = at(p), iq = at(q);
  if (ip == 3 || iq == 3) return {0, 0};
  const std::size_t ir = 3 - ip - iq;
  return {permutation_sign({ip, iq, ir}), tr[ir]};
}

}  // namespace

std::vector<SymForm> contraction_quadrics() {
  // (i_xi a) ^ b, coefficient of e_J, is a bilinear form in (a, b); its
  // quadratic part is the contraction quadric.
  std::vector<SymForm> out;
  const Tables& t = tables();
  for (std::size_t p = 0; p < kV6; ++p)
    for (std::size_t q = p + 1; q < kV6; ++q) {
      std::vector<QMatrix> forms(15, QMatrix(kWedge3, kWedge3));
      for (std::size_t I = 0; I < kWedge3; ++I) {
        const auto [csign, r] = contraction(p, q, I);
        if (csign == 0) continue;
        for (std::size_t K = 0; K < kWedge3; ++K) {
          const auto& tk = t.triples[K];
          if (std::find(tk.begin(), tk.end(), r) != tk.end()) continue;
          const int wsign = permutation_sign({r, tk[0], tk[1], tk[2]});
          forms[quad_index({r, tk[0], tk[1], tk[2]})](I, K) += csign * wsign;
        }
      }
      for (auto& f : forms) {
        QMatrix s = f + f.transpose();
        for (std::size_t i = 0; i < kWedge3; ++i)
          for (std::size_t j = 0; j < kWedge3; ++j) s(i, j) /= 2;
        out.emplace_back(std::move(s));
      }
    }
  return out;
}

const std::vector<SymForm>& plucker_quadrics() {
  static const std::vector<SymForm> basis = [] {
    // Greedy independent subset of the contraction quadrics in the space of
    // upper-triangular coefficient vectors.
    std::vector<SymForm> all = contraction_quadrics();
    std::vector<SymForm> chosen;
    QMatrix coeffs(0, kWedge3 * (kWedge3 + 1) / 2);
    for (auto& f : all) {
      if (f.matrix().is_zero()) continue;
      QVector v;
      v.reserve(coeffs.cols());
      for (std::size_t i = 0; i < kWedge3; ++i)
        for (std::size_t j = i; j < kWedge3; ++j) v.push_back(f(i, j));
      QMatrix trial = coeffs;
      trial.append_row(v);
      if (rank(trial) > coeffs.rows()) {
        coeffs = std::move(trial);
        // integer coefficients as a polynomial: scale by 2
        chosen.push_back(Scalar(2) * f);
      }
    }
    return chosen;
  }();
  return basis;
}

bool decomposable_witness(const TriVector& t) {
  if (t.is_zero()) throw PreconditionError("decomposable_witness: zero vector");
  const Tables& tab = tables();
  for (std::size_t p = 0; p < kV6; ++p)
    for (std::size_t q = p + 1; q < kV6; ++q) {
      Vec6 v{};
      for (std::size_t I = 0; I < kWedge3; ++I) {
        if (sgn(t.coords[I]) == 0) continue;
        const auto [csign, r] = contraction(p, q, I);
        if (csign > 0) v[r] += t.coords[I]; else if (csign < 0) v[r] -= t.coords[I];
      }
      std::array<Scalar, 15> w{};
      for (std::size_t r = 0; r < kV6; ++r) {
        if (sgn(v[r]) == 0) continue;
        for (std::size_t K = 0; K < kWedge3; ++K) {
          const auto& tk = tab.triples[K];
          if (sgn(t.coords[K]) == 0 || std::find(tk.begin(), tk.end(), r) != tk.end()) continue;
          const std::size_t J = quad_index({r, tk[0], tk[1], tk[2]});
          if (permutation_sign({r, tk[0], tk[1], tk[2]}) > 0) w[J] += v[r] * t.coords[K];
          else w[J] -= v[r] * t.coords[K];
        }
      }
      for (const auto& x : w)
        if (sgn(x) != 0) return false;
    }
  return true;
}

}  // namespace epw
