#pragma once

#include "qconst/scalar.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qconst {

/// Conductor and indeterminate list an expression is read against.
struct ScalarHeader {
  int conductor = 1;
  std::vector<std::string> indeterminates;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
  {
  }
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses the ASCII scalar grammar: integers, `zeta(N)`, indeterminates,
/// `+ - * / ^`, parentheses and unary minus; `^` binds tightest and takes an
/// integer exponent. zeta(M) requires M | conductor.
Scalar parse_scalar(std::string_view text, const ScalarHeader& header);

} // namespace qconst
