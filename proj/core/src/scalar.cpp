#include "epw/scalar.hpp"

namespace epw {

std::string to_string(const Scalar& x) { return x.get_str(); }

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw PreconditionError("empty rational literal");
  Scalar out;
  if (out.set_str(s, 10) != 0) throw PreconditionError("malformed rational literal: " + s);
  if (out.get_den() == 0) throw PreconditionError("zero denominator: " + s);
  out.canonicalize();
  return out;
}

}  // namespace epw
