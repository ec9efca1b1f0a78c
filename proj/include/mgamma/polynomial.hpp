#ifndef MGAMMA_POLYNOMIAL_HPP
#define MGAMMA_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "mgamma/rational.hpp"

namespace mgamma {

/// Dense polynomial with exact rational coefficients, coeffs_[i] = coefficient
/// of z^i.  Canonical form: no trailing zero coefficients; the zero polynomial
/// has degree -1 (empty coefficient list).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static RationalPolynomial constant(const Rational& c) {
    return RationalPolynomial(std::vector<Rational>{c});
  }
  /// The monomial c * z^k.
  static RationalPolynomial monomial(const Rational& c, unsigned k) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return RationalPolynomial(std::move(v));
  }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const Rational& coeff(unsigned i) const {
    static const Rational kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& z) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  double eval_double(double z) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_double();
    return acc;
  }

  RationalPolynomial& operator+=(const RationalPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  RationalPolynomial& operator-=(const RationalPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }

  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
  }

  friend RationalPolynomial operator*(const Rational& c, RationalPolynomial p) {
    if (c.is_zero()) return {};
    for (auto& x : p.coeffs_) x *= c;
    return p;
  }

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) {
    return !(a == b);
  }

  /// Substitution p(inner(z)).
  RationalPolynomial compose(const RationalPolynomial& inner) const {
    RationalPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * inner + constant(*it);
    return acc;
  }

  RationalPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return RationalPolynomial(std::move(out));
  }

  std::string str(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const Rational& c = coeffs_[static_cast<size_t>(i)];
      if (c.is_zero()) continue;
      if (!out.empty()) out += c.is_negative() ? " - " : " + ";
      else if (c.is_negative()) out += "-";
      const Rational a = c.abs();
      const bool unit = (a == Rational(1)) && i > 0;
      if (!unit) out += a.str();
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

}  // namespace mgamma

#endif  // MGAMMA_POLYNOMIAL_HPP
