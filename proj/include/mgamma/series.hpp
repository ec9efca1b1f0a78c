#ifndef MGAMMA_SERIES_HPP
#define MGAMMA_SERIES_HPP

#include <string>
#include <vector>

#include "mgamma/asymptotic.hpp"
#include "mgamma/closed_form.hpp"
#include "mgamma/rational.hpp"

namespace mgamma {

/// One summand coeff * k^power * log^logpower(k + shift).
struct SeriesTerm {
  Rational coeff;
  unsigned power = 0;
  Rational shift;
  unsigned logpower = 1;
};

/// sum_{k >= start_index} of the terms.  Shifts must satisfy shift > -1 so
/// every logarithm argument stays positive from k = 1 on.
struct SeriesSpec {
  std::vector<SeriesTerm> terms;
  unsigned start_index = 1;

  /// Merge duplicate (power, shift, logpower) keys, drop zero coefficients,
  /// sort canonically.
  void normalize();
  void validate() const;

  /// Numeric value of the full summand at index k.
  double summand(unsigned long k) const;

  friend bool operator==(const SeriesSpec& a, const SeriesSpec& b);
};

/// Outcome of zeta regularization: the series value when convergent, or the
/// Hadamard constant term plus the exact non-vanishing part of the partial
/// sums' asymptotic expansion in N.
struct RegularizedResult {
  bool convergent = false;
  ClosedForm constant_term;
  AsymptoticExpansion divergent_profile{"N"};
};

/// Regularized sum_{k>=1} k^p log(k+z), z > -1.
RegularizedResult phi_regularized(unsigned p, const Rational& z);

/// Regularize an arbitrary spec.  Divergence detection is exact: the
/// N-dependent expansion coefficients are rationals and the series converges
/// iff they all cancel.
RegularizedResult evaluate_series(const SeriesSpec& spec);

/// Rewrite first-derivative zeta atoms zeta'(-j, q), q != 1, as multiple
/// gamma values at q plus zeta'(-j) constants.
ClosedForm convert_zeta_derivs_to_gammas(const ClosedForm& cf);

/// The spec of sum_j [log^k(j+1/2) - 2 log^k j + log^k(j-1/2)].
SeriesSpec dilcher_spec(unsigned k);

/// Closed form of the Dilcher sum D_k, 1 <= k <= 4, in terms of derivatives
/// of the Riemann zeta function at 0 and powers of log 2.
ClosedForm dilcher_sum(unsigned k);

/// sum_{k>=2} (-z)^k zeta(k)/(k+r-1) for |z| < 1 and r in {1, 3}, returned
/// from the Barnes / triple-gamma closed form after checking it against the
/// direct convergent sum.
double zeta_power_series(double z, unsigned r);

}  // namespace mgamma

#endif  // MGAMMA_SERIES_HPP
