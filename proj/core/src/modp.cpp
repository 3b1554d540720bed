#include "epw/modp.hpp"

#include <stdexcept>

namespace epw::modp {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

constexpr std::size_t kReduceEvery = 4000;

}  // namespace

const std::vector<std::uint32_t>& primes() {
  static const std::vector<std::uint32_t> list = [] {
    std::vector<std::uint32_t> out;
    for (std::uint32_t n = (1u << 26) - 1; out.size() < 8; n -= 2)
      if (is_prime(n)) out.push_back(n);
    return out;
  }();
  return list;
}

std::uint32_t reduce(const BigInt& x, std::uint32_t p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("modp::inverse: not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Echelon::Echelon(std::size_t cols, std::uint32_t p) : cols_(cols), p_(p), pivot_at_(cols, -1) {}

bool Echelon::add_row(std::span<const std::uint32_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("modp::Echelon: row width mismatch");
  std::vector<std::uint64_t> acc(row.begin(), row.end());
  return absorb(acc);
}

bool Echelon::add_sparse_row(std::span<const std::pair<std::size_t, std::uint32_t>> entries) {
  std::vector<std::uint64_t> acc(cols_, 0);
  for (const auto& [c, v] : entries) acc[c] = (acc[c] + v) % p_;
  return absorb(acc);
}

bool Echelon::absorb(std::vector<std::uint64_t>& acc) {
  if (full()) return false;
  const std::uint64_t p = p_;
  std::size_t pending = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    const std::uint64_t lead = acc[c] % p;
    acc[c] = lead;
    if (lead == 0) continue;
    const std::int64_t idx = pivot_at_[c];
    if (idx < 0) {
      const std::uint64_t inv = inverse(static_cast<std::uint32_t>(lead), p_);
      std::vector<std::uint32_t> stored(cols_, 0);
      stored[c] = 1;
      for (std::size_t j = c + 1; j < cols_; ++j)
        stored[j] = static_cast<std::uint32_t>((acc[j] % p) * inv % p);
      pivot_at_[c] = static_cast<std::int64_t>(pivot_rows_.size());
      pivot_rows_.push_back(std::move(stored));
      return true;
    }
    const std::uint32_t g = static_cast<std::uint32_t>(p - lead);
    const std::uint32_t* piv = pivot_rows_[static_cast<std::size_t>(idx)].data();
    std::uint64_t* a = acc.data();
    for (std::size_t j = c + 1; j < cols_; ++j) a[j] += static_cast<std::uint64_t>(g) * piv[j];
    acc[c] = 0;
    if (++pending == kReduceEvery) {
      for (std::size_t j = c + 1; j < cols_; ++j) a[j] %= p;
      pending = 0;
    }
  }
  return false;
}

std::size_t rank_of_integer_matrix(const QMatrix& m, std::uint32_t p) {
  Echelon e(m.cols(), p);
  std::vector<std::uint32_t> row(m.cols());
  for (std::size_t i = 0; i < m.rows() && !e.full(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw std::invalid_argument("modp: non-integer entry");
      row[j] = reduce(m(i, j).get_num(), p);
    }
    e.add_row(row);
  }
  return e.rank();
}

}  // namespace epw::modp
