#ifndef MGAMMA_CLOSED_FORM_HPP
#define MGAMMA_CLOSED_FORM_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mgamma/rational.hpp"

namespace mgamma {

enum class NamedConstant {
  euler_gamma,      // gamma
  stieltjes_gamma1, // gamma_1
  log_two_pi,       // log(2 pi)
  zeta_three,       // zeta(3)
  catalan,          // Catalan's constant
  log_glaisher,     // log A = 1/12 - zeta'(-1)
};

/// d^order/ds^order zeta(s, q) at s = -lambda; order >= 1.
struct ZetaDerivAtom {
  unsigned order = 1;
  unsigned lambda = 0;
  Rational q = Rational(1);
};

/// log Gamma_n(q).
struct LogGammaAtom {
  unsigned n = 1;
  Rational q = Rational(1);
};

/// log q for a positive rational q.
struct LogAtom {
  Rational q = Rational(1);
};

using Primitive = std::variant<ZetaDerivAtom, LogGammaAtom, LogAtom, NamedConstant>;

double evaluate_primitive(const Primitive& p);
std::string primitive_str(const Primitive& p);

/// weight * prod_i primitive_i^exponent_i (an empty factor list is the
/// rational constant `weight`).
struct Monomial {
  Rational weight;
  std::vector<std::pair<Primitive, unsigned>> factors;
};

/// Exact-rational-weighted combination of monomials in transcendental
/// primitives, evaluable to a double.
class ClosedForm {
 public:
  ClosedForm() = default;

  void add_rational(const Rational& r);
  void add(const Rational& weight, const Primitive& p, unsigned exponent = 1);
  void add_monomial(Monomial m);
  void add_scaled(const ClosedForm& other, const Rational& scale);

  const std::vector<Monomial>& monomials() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Merge equal factor products, drop zero weights, apply basic rewrites
  /// (log Gamma_1 at integers -> log of a factorial, zeta'(0) -> -log(2pi)/2,
  /// zeta'(-1) -> 1/12 - log A).
  void simplify();

  double value() const;
  std::string str() const;

 private:
  std::vector<Monomial> terms_;
};

}  // namespace mgamma

#endif  // MGAMMA_CLOSED_FORM_HPP
