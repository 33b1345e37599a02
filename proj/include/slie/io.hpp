#pragma once

// Algebra text format:
//
//   superalgebra NAME
//   even x1 x2 x3
//   odd y1 y2
//   [x1,x2] = x3
//   [y1,y1] = 1/2 x3 + -1 x1
//
// Unspecified brackets are zero and each [a,b] fills its mirror [b,a].
// '#' starts a comment.

#include <stdexcept>
#include <string>
#include <string_view>

#include "slie/superalg.hpp"

namespace slie {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class ParseMode {
  Strict,   // result must pass validate()
  Lenient,  // grading and Jacobi violations are kept for inspection
};

SuperAlgebra parse_algebra(std::string_view doc, ParseMode mode = ParseMode::Strict);
std::string print_algebra(const SuperAlgebra& a);

/// Linear combination of basis names ("x1 + 1/2 x3", "-x2", "0") or a
/// coefficient list ("0, 1, 1/2"), as a coordinate vector.
Vector parse_vector(const SuperAlgebra& a, std::string_view text);

}  // namespace slie
