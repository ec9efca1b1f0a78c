#ifndef MGAMMA_HURWITZ_HPP
#define MGAMMA_HURWITZ_HPP

#include "mgamma/asymptotic.hpp"

namespace mgamma {

/// A point (s, z) in the real domain of the Hurwitz zeta function.
struct ZetaPoint {
  double s = 0.0;
  double z = 1.0;
  void validate() const;  // throws on s == 1 or z <= 0
};

/// Hurwitz zeta zeta(s, z) = sum_{k>=0} (k+z)^{-s}, continued to real s != 1.
/// Evaluated by shifting z upward and applying the Euler-Maclaurin tail;
/// relative error ~1e-13 for |s| <= 30, z > 0.
double hurwitz_zeta(double s, double z);

/// Exact asymptotic expansion (z -> infinity) of the m-th s-derivative of
/// zeta(s, z) at s = -lambda, including r Bernoulli correction pairs.
/// All coefficients are exact rationals; remainder order lambda - 1 - 2r.
/// m = 0 reproduces the Bernoulli-polynomial value of zeta(-lambda, z).
AsymptoticExpansion zeta_sderiv_expansion(unsigned m, unsigned lambda, unsigned r);

/// Expansion of zeta'(-lambda, z) for z -> infinity (m = 1 case).
AsymptoticExpansion prop1_expansion(unsigned lambda, unsigned r);

/// Leading expansion of the k-th s-derivative at s = 0 for z -> infinity,
/// accurate to O(1/z).
AsymptoticExpansion kth_deriv_asymptotic(unsigned k);

/// m-th s-derivative of zeta(s, z) at s = -lambda, computed by shifting z and
/// differentiating the Euler-Maclaurin tail term by term.
double zeta_sderiv_analytic(unsigned m, unsigned lambda, double z);

/// zeta'(-lambda, z).
double zeta_sderiv_neg(unsigned lambda, double z);

/// k-th s-derivative of zeta(s, z) at s = 0, 0 <= k <= 4 (k = 0 is the plain
/// function value).
double zeta_kth_deriv_at0(unsigned k, double z);

/// Stieltjes constant gamma_k for k <= 2, from the limit definition with
/// Euler-Maclaurin correction terms.
double stieltjes(unsigned k);

}  // namespace mgamma

#endif  // MGAMMA_HURWITZ_HPP
