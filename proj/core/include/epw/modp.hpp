#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "epw/qmatrix.hpp"

namespace epw::modp {

// Primes below 2^26; products of two residues fit in 52 bits, which lets the
// elimination loop defer reductions.
const std::vector<std::uint32_t>& primes();

std::uint32_t reduce(const BigInt& x, std::uint32_t p);
std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

// Incremental row echelon form over F_p. Rows are reduced on arrival, so the
// rank is available at every step and callers can stop once it is full.
//
// For an integer matrix, rank mod p never exceeds the rank over Q; a full
// rank observed mod p is therefore an exact statement about Q.
class Echelon {
 public:
  Echelon(std::size_t cols, std::uint32_t p);

  // Returns true if the row was independent of the rows seen so far.
  bool add_row(std::span<const std::uint32_t> row);
  bool add_sparse_row(std::span<const std::pair<std::size_t, std::uint32_t>> entries);

  std::size_t rank() const { return pivot_rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return rank() == cols_; }
  std::uint32_t prime() const { return p_; }

 private:
  bool absorb(std::vector<std::uint64_t>& acc);

  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::int64_t> pivot_at_;  // column -> index into pivot_rows_, or -1
  std::vector<std::vector<std::uint32_t>> pivot_rows_;
};

// Rank mod p of a matrix whose entries are all integers.
std::size_t rank_of_integer_matrix(const QMatrix& m, std::uint32_t p);

}  // namespace epw::modp
