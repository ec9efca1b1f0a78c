#ifndef MGAMMA_STIRLING_POLY_HPP
#define MGAMMA_STIRLING_POLY_HPP

#include "mgamma/polynomial.hpp"
#include "mgamma/rational.hpp"

namespace mgamma {

/// Generalized Stirling polynomial of the first kind,
///   P_{k,n}(z) = sum_{j=k+1}^{n} (-z)^{j-k-1} C(j-1, k) [n j],
/// the coefficient of x^k in prod_{i=1}^{n-1} (i + x - z).
/// Requires n >= 1 and k <= n-1; degree <= n-k-1; P_{k,n}(1) = [n-1 k].
RationalPolynomial p_poly(unsigned k, unsigned n);

/// Alternative representation of the same polynomial,
///   P_{k,n}(z) = sum_{i=k+1}^{n} C(z, n-i) (n-1)!/(i-1)! [i k+1],
/// where C(z, m) is the falling-factorial polynomial in z.  Kept as an
/// independent route for identity checks.
RationalPolynomial p_poly_alt(unsigned k, unsigned n);

/// Generalized Stirling polynomial of the second kind,
///   Q_{k,n}(z) = sum_{j=k}^{n} (1-z)^{n-j} C(n, j) {j k}.
/// Requires k <= n; degree <= n-k; Q_{k,n}(0) = {n+1 k+1}.
RationalPolynomial q_poly(unsigned k, unsigned n);

/// sum_{j=k}^{n-1} (-1)^{j-k} Q_{k,j} P_{j,n} as an exact polynomial in z.
/// Equals the constant delta_{k,n-1}.
RationalPolynomial orthogonality_poly(unsigned k, unsigned n);

/// The orthogonality sum evaluated at a rational point.
Rational orthogonality_sum(unsigned k, unsigned n, const Rational& z);

}  // namespace mgamma

#endif  // MGAMMA_STIRLING_POLY_HPP
