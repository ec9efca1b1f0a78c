#ifndef MGAMMA_PARSER_HPP
#define MGAMMA_PARSER_HPP

#include <stdexcept>
#include <string>

#include "mgamma/products.hpp"
#include "mgamma/series.hpp"

namespace mgamma {

/// Syntax or semantic error with a reproducible message and the character
/// offset of the first violation.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t position, std::string expected, std::string found);
  size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  size_t position_;
  std::string expected_;
  std::string found_;
};

/// Series grammar:
///   series := "sum(k=" nat "..inf," expr ")"
///   expr   := term (("+"|"-") term)*
///   term   := [rat "*"] ["k^" nat "*"] "log" ["^" nat] "(" "k" (("+"|"-") rat)? ")"
///   rat    := integer ["/" positive-integer]
/// Whitespace is insignificant.  Shifts must satisfy k + shift > 0 from the
/// first index on (shift > -1).
SeriesSpec parse_series(const std::string& text);

/// Product grammar:
///   product := "melzak(x=" rat ")" | "melzak2(x=" rat ["," "start=" nat] ")"
/// melzak requires x > -1/2; melzak2 rejects x whose vanishing factor
/// (k = 2|x| for half-integer x) is not excluded by the start index.
ProductSpec parse_product(const std::string& text);

std::string unparse(const SeriesSpec& spec);
std::string unparse(const ProductSpec& spec);

}  // namespace mgamma

#endif  // MGAMMA_PARSER_HPP
