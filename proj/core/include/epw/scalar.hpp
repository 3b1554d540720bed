#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace epw {

// Exact rationals. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Scalar = mpq_class;
using BigInt = mpz_class;

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a computed identity fails; indicates a bug or a counterexample.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "p/q" or "p"; the output is always canonical.
std::string to_string(const Scalar& x);
Scalar parse_scalar(std::string_view text);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }
inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

}  // namespace epw
