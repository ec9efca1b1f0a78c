#ifndef MGAMMA_COMBINATORICS_HPP
#define MGAMMA_COMBINATORICS_HPP

#include "mgamma/polynomial.hpp"
#include "mgamma/rational.hpp"

namespace mgamma {

/// Stirling cycle number [n k] (first kind, unsigned): permutations of n
/// elements with k cycles.  Returns 0 for k > n.
BigInt stirling_cycle(unsigned n, unsigned k);

/// Stirling subset number {n k} (second kind): partitions of n elements into
/// k non-empty blocks.  Returns 0 for k > n.
BigInt stirling_subset(unsigned n, unsigned k);

/// Bernoulli number B_n with the B_1 = -1/2 convention.
Rational bernoulli_number(unsigned n);

/// Bernoulli polynomial B_n(z); B_n(0) = B_n.
RationalPolynomial bernoulli_poly(unsigned n);

/// Ascending factorial x(x+1)...(x+k-1); empty product = 1.
Rational pochhammer(const Rational& x, unsigned k);

/// Binomial coefficient with general upper argument:
/// z(z-1)...(z-k+1)/k!; k = 0 gives 1.
Rational binomial_general(const Rational& z, unsigned k);

/// Falling-factorial polynomial z(z-1)...(z-k+1)/k! in z (the polynomial whose
/// evaluation is binomial_general).
RationalPolynomial binomial_poly(unsigned k);

}  // namespace mgamma

#endif  // MGAMMA_COMBINATORICS_HPP
