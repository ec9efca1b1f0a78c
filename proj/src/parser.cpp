#include "mgamma/parser.hpp"

#include <cctype>
#include <cmath>

namespace mgamma {

namespace {

std::string format_message(size_t position, const std::string& expected,
                           const std::string& found) {
  return "parse error at offset " + std::to_string(position) + ": expected " + expected +
         ", found " + found;
}

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  size_t pos() const { return pos_; }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip_ws();
    const std::string found =
        pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, expected, found);
  }

  /// Consume the literal (no whitespace inside the literal itself).
  void expect(const std::string& lit) {
    skip_ws();
    if (text_.compare(pos_, lit.size(), lit) != 0) fail("'" + lit + "'");
    pos_ += lit.size();
  }

  bool try_consume(const std::string& lit) {
    skip_ws();
    if (text_.compare(pos_, lit.size(), lit) != 0) return false;
    pos_ += lit.size();
    return true;
  }

  unsigned long parse_nat() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("a natural number");
    unsigned long v = 0;
    size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (++digits > 9) fail("a smaller number");
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  Rational parse_rational() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = (text_[pos_] == '-');
      ++pos_;
    }
    long num = static_cast<long>(parse_nat());
    if (neg) num = -num;
    if (try_consume("/")) {
      const size_t den_pos = pos_;
      const long den = static_cast<long>(parse_nat());
      if (den == 0) throw ParseError(den_pos, "a positive denominator", "'0'");
      return Rational(num, den);
    }
    return Rational(num);
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
};

SeriesTerm parse_term(Scanner& sc) {
  SeriesTerm term;
  term.coeff = Rational(1);
  term.power = 0;
  term.logpower = 1;

  const char c = sc.peek();
  if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
    term.coeff = sc.parse_rational();
    sc.expect("*");
  }
  if (sc.peek() == 'k') {
    sc.expect("k");
    sc.expect("^");
    term.power = static_cast<unsigned>(sc.parse_nat());
    sc.expect("*");
  }
  sc.expect("log");
  if (sc.try_consume("^")) term.logpower = static_cast<unsigned>(sc.parse_nat());
  sc.expect("(");
  const size_t arg_pos = sc.pos();
  sc.expect("k");
  term.shift = Rational(0);
  if (sc.peek() == '+' || sc.peek() == '-') {
    const bool neg = (sc.peek() == '-');
    sc.expect(neg ? "-" : "+");
    const Rational q = sc.parse_rational();
    if (q.is_negative()) sc.fail("an unsigned rational after the sign");
    term.shift = neg ? -q : q;
  }
  sc.expect(")");
  if (term.shift <= Rational(-1))
    throw ParseError(arg_pos, "a shift with k + shift > 0 for all k >= 1 (shift > -1)",
                     "shift " + term.shift.str());
  return term;
}

}  // namespace

ParseError::ParseError(size_t position, std::string expected, std::string found)
    : std::runtime_error(format_message(position, expected, found)),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

SeriesSpec parse_series(const std::string& text) {
  Scanner sc(text);
  SeriesSpec spec;
  sc.expect("sum");
  sc.expect("(");
  sc.expect("k");
  sc.expect("=");
  spec.start_index = static_cast<unsigned>(sc.parse_nat());
  if (spec.start_index < 1) sc.fail("a start index >= 1");
  sc.expect("..");
  sc.expect("inf");
  sc.expect(",");
  spec.terms.push_back(parse_term(sc));
  while (true) {
    if (sc.try_consume(")")) break;
    Rational sign(1);
    if (sc.try_consume("+")) {
      sign = Rational(1);
    } else if (sc.try_consume("-")) {
      sign = Rational(-1);
    } else {
      sc.fail("'+', '-' or ')'");
    }
    SeriesTerm t = parse_term(sc);
    t.coeff *= sign;
    spec.terms.push_back(t);
  }
  if (!sc.at_end()) sc.fail("end of input");
  spec.normalize();
  spec.validate();
  return spec;
}

ProductSpec parse_product(const std::string& text) {
  Scanner sc(text);
  ProductSpec spec;
  bool squared = false;
  if (sc.try_consume("melzak2")) {
    squared = true;
  } else if (sc.try_consume("melzak")) {
    squared = false;
  } else {
    sc.fail("'melzak' or 'melzak2'");
  }
  spec.kind = squared ? ProductKind::melzak_squared : ProductKind::melzak_linear;
  sc.expect("(");
  sc.expect("x");
  sc.expect("=");
  const size_t x_pos = sc.pos();
  spec.x = sc.parse_rational();
  spec.start_index = 1;
  if (squared && sc.try_consume(",")) {
    sc.expect("start");
    sc.expect("=");
    spec.start_index = static_cast<unsigned>(sc.parse_nat());
    if (spec.start_index < 1) sc.fail("a start index >= 1");
  }
  sc.expect(")");
  if (!sc.at_end()) sc.fail("end of input");

  if (!squared) {
    if (spec.x <= Rational(-1, 2))
      throw ParseError(x_pos, "melzak argument with x > -1/2", "x = " + spec.x.str());
  } else {
    if (spec.x.abs() >= Rational(1))
      throw ParseError(x_pos, "melzak2 argument with |x| < 1", "x = " + spec.x.str());
    const Rational two_abs = spec.x.abs() * Rational(2);
    if (two_abs.is_integer() && two_abs >= Rational(1) &&
        two_abs >= Rational(static_cast<long>(spec.start_index)))
      throw ParseError(x_pos,
                       "start > " + two_abs.str() + " to exclude the vanishing factor at k = " +
                           two_abs.str(),
                       "x = " + spec.x.str());
  }
  return spec;
}

std::string unparse(const SeriesSpec& spec) {
  std::string out = "sum(k=" + std::to_string(spec.start_index) + "..inf, ";
  if (spec.terms.empty()) out += "0*log(k)";  // not producible by the grammar
  bool first = true;
  for (const auto& t : spec.terms) {
    const bool neg = t.coeff.is_negative();
    const Rational a = t.coeff.abs();
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (a != Rational(1)) out += a.str() + "*";
    if (t.power > 0) out += "k^" + std::to_string(t.power) + "*";
    out += "log";
    if (t.logpower != 1) out += "^" + std::to_string(t.logpower);
    out += "(k";
    if (!t.shift.is_zero())
      out += (t.shift.is_negative() ? "-" : "+") + t.shift.abs().str();
    out += ")";
  }
  out += ")";
  return out;
}

std::string unparse(const ProductSpec& spec) {
  std::string out = spec.kind == ProductKind::melzak_squared ? "melzak2" : "melzak";
  out += "(x=" + spec.x.str();
  if (spec.kind == ProductKind::melzak_squared && spec.start_index != 1)
    out += ", start=" + std::to_string(spec.start_index);
  out += ")";
  return out;
}

}  // namespace mgamma
