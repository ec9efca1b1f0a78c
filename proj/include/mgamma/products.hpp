#ifndef MGAMMA_PRODUCTS_HPP
#define MGAMMA_PRODUCTS_HPP

#include <complex>

#include "mgamma/rational.hpp"

namespace mgamma {

enum class ProductKind { melzak_linear, melzak_squared };

/// Parsed description of an alternating infinite product:
///   melzak_linear:  prod_{k>=start} (1 + 2x/k)^{-k (-1)^k}
///   melzak_squared: prod_{k>=start} (1 - 4x^2/k^2)^{-k^2 (-1)^k}
/// Products are truncated at even upper limits when evaluated numerically.
struct ProductSpec {
  ProductKind kind = ProductKind::melzak_linear;
  Rational x;
  unsigned start_index = 1;
};

/// Closed form of prod_{k>=1} (1 + 2x/k)^{-k (-1)^k} for x > -1/2:
/// e^{-x} Gamma(x+1/2)/Gamma(1/2) * (G(x+1/2)/(G(x+1) G(1/2)))^2.
double melzak_product(double x);

/// Closed form of prod_{k>=start} (1 - 4x^2/k^2)^{-k^2 (-1)^k}.  Vanishing
/// factors (2|x| an integer >= start) are rejected; start_index > 1 divides
/// the k < start factors out of the full closed form, taking the x = 1/2,
/// start = 2 case through its explicit limit.
double melzak_squared_product(double x, unsigned start_index = 1);

/// Li_k(e^{i theta}) for k in {2, 3}, via the boundary series with
/// summation-by-parts tail acceleration.
std::complex<double> polylog_unit_circle(unsigned k, double theta);

/// Polylog form of melzak_squared_product on (0, 1/2); at x = 1/2 the
/// tan(pi x)^{-4x^2}/(1-4x^2) -> pi/4 limit gives the k >= 2 product.
double corollary_product(double x);

/// log(G(1+z)/G(1-z)) evaluated from the reflection identity
/// z log(pi/sin(pi z)) - (pi i/2) B_2(z) + (i/(2 pi)) Li_2(e^{2 pi i z});
/// the imaginary part cancels identically, the real part matches the Barnes
/// route.  0 < z < 1.
std::complex<double> barnes_reflection(double z);

/// Residual of the degree-three reflection identity
/// 2 log(Gamma_3(1+z)Gamma_3(1-z)) + log(G(1+z)G(1-z)) =
///   z^2 log(pi/sin(pi z)) - pi i z B_2(z) + (pi i/3) B_3(z)
///   + (i z/pi) Li_2(e^{2 pi i z}) - Li_3(e^{2 pi i z})/(2 pi^2)
///   + zeta(3)/(2 pi^2),
/// for 0 < z < 1.  Near zero when the identity holds.
double gamma3_reflection(double z);

/// Catalan's constant sum_k (-1)^k/(2k+1)^2, via paired terms with an
/// Euler-Maclaurin tail.
double catalan_constant();

/// Closed-form value of a parsed ProductSpec.
double product_closed_form(const ProductSpec& spec);

}  // namespace mgamma

#endif  // MGAMMA_PRODUCTS_HPP
