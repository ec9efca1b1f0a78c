#ifndef MGAMMA_ORACLE_HPP
#define MGAMMA_ORACLE_HPP

#include <functional>

#include "mgamma/products.hpp"
#include "mgamma/series.hpp"

namespace mgamma::oracle {

struct ExtrapolationReport {
  double raw_value_at_N = 0.0;
  double extrapolated = 0.0;
  unsigned long N = 0;
  unsigned levels = 0;
  double estimated_error = 0.0;
};

using TermFn = std::function<double(unsigned long)>;

/// Compensated sum of f(k) for k in [lo, hi], single pass in index order.
double sum_terms_serial(const TermFn& f, unsigned long lo, unsigned long hi);

/// Same sum in fixed 8192-element chunks accumulated independently (OpenMP
/// across chunks when enabled) and reduced in chunk order, so the result is
/// identical for any thread count.
double sum_terms_parallel(const TermFn& f, unsigned long lo, unsigned long hi);

/// Partial sums S(N), S(2N), ..., S(2^levels N) of sum_{k >= start} f(k),
/// Richardson-extrapolated assuming a tail in integer powers of 1/N.
/// estimated_error is the last-level difference.
ExtrapolationReport sum_sequence_extrapolated(const TermFn& f, unsigned long N, unsigned levels,
                                              unsigned long start = 1);

/// Brute-force oracle for a convergent series spec.  Refuses divergent specs
/// (the exact divergence profile is consulted for the verdict only; the value
/// is summed independently).  Requires N >= 64, levels <= 5.
ExtrapolationReport partial_sum_extrapolated(const SeriesSpec& spec, unsigned long N,
                                             unsigned levels);

/// Brute-force oracle for an infinite product, truncated at even index 2N as
/// the alternating exponents require; accumulation is in the log domain.
ExtrapolationReport partial_product_extrapolated(const ProductSpec& spec, unsigned long N,
                                                 unsigned levels);

/// order-th s-derivative of zeta(s, z) at s = -lambda by Richardson-
/// extrapolated central differences (step 1/64, levels 1/64, 1/128, 1/256).
/// Accurate to ~1e-8 for order <= 2; noise grows as h^-order beyond that.
double finite_difference_sderiv(unsigned lambda, double z, unsigned order);

}  // namespace mgamma::oracle

#endif  // MGAMMA_ORACLE_HPP
