#include "mgamma/stirling_poly.hpp"

#include <stdexcept>

#include "mgamma/combinatorics.hpp"

namespace mgamma {

namespace {

RationalPolynomial pow_poly(const RationalPolynomial& base, unsigned e) {
  RationalPolynomial acc = RationalPolynomial::constant(Rational(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

}  // namespace

RationalPolynomial p_poly(unsigned k, unsigned n) {
  if (n < 1 || k >= n)
    throw std::domain_error("p_poly: requires n >= 1 and k <= n-1");
  RationalPolynomial acc;
  for (unsigned j = k + 1; j <= n; ++j) {
    const Rational c = Rational(binomial(j - 1, k)) * Rational(stirling_cycle(n, j));
    // (-z)^{j-k-1}
    const unsigned e = j - k - 1;
    const Rational sign = (e % 2 == 0) ? Rational(1) : Rational(-1);
    acc += RationalPolynomial::monomial(sign * c, e);
  }
  return acc;
}

RationalPolynomial p_poly_alt(unsigned k, unsigned n) {
  if (n < 1 || k >= n)
    throw std::domain_error("p_poly_alt: requires n >= 1 and k <= n-1");
  // the (-1)^{n-i} factor comes with the reversed order of summation in the
  // derivation; without it the form is off by alternating signs
  RationalPolynomial acc;
  for (unsigned i = k + 1; i <= n; ++i) {
    Rational c =
        Rational(factorial(n - 1), factorial(i - 1)) * Rational(stirling_cycle(i, k + 1));
    if ((n - i) % 2 == 1) c = -c;
    acc += c * binomial_poly(n - i);
  }
  return acc;
}

RationalPolynomial q_poly(unsigned k, unsigned n) {
  if (k > n) throw std::domain_error("q_poly: requires k <= n");
  const RationalPolynomial one_minus_z{Rational(1), Rational(-1)};
  RationalPolynomial acc;
  for (unsigned j = k; j <= n; ++j) {
    const Rational c = Rational(binomial(n, j)) * Rational(stirling_subset(j, k));
    if (c.is_zero()) continue;
    acc += c * pow_poly(one_minus_z, n - j);
  }
  return acc;
}

RationalPolynomial orthogonality_poly(unsigned k, unsigned n) {
  if (n < 1 || k >= n)
    throw std::domain_error("orthogonality_poly: requires k <= n-1");
  RationalPolynomial acc;
  for (unsigned j = k; j <= n - 1; ++j) {
    const Rational sign = ((j - k) % 2 == 0) ? Rational(1) : Rational(-1);
    acc += sign * (q_poly(k, j) * p_poly(j, n));
  }
  return acc;
}

Rational orthogonality_sum(unsigned k, unsigned n, const Rational& z) {
  return orthogonality_poly(k, n).eval(z);
}

}  // namespace mgamma
