#ifndef MGAMMA_MULTIGAMMA_HPP
#define MGAMMA_MULTIGAMMA_HPP

namespace mgamma {

struct RnConstant {
  unsigned n = 1;
  double value = 0.0;
};

/// Multiple zeta zeta_n(s, z) = sum_{k>=0} C(k+n-1, n-1) (k+z)^{-s}, reduced
/// to a Stirling-polynomial combination of Hurwitz values.  Poles at
/// s in {1, ..., n}.
double multiple_zeta(unsigned n, double s, double z);

/// zeta'(-k) at z = 1, cached after first use.
double zeta_prime_at_neg(unsigned k);

/// R_n = (1/(n-1)!) sum_k zeta'(-k) [n k+1].
RnConstant r_n(unsigned n);

/// log Gamma_n(z) for n >= 1, z > 0.  Gamma_1 is the Euler gamma function,
/// Gamma_{n+1}(z+1) = Gamma_{n+1}(z)/Gamma_n(z), Gamma_n(1) = 1.
double log_multiple_gamma(unsigned n, double z);

/// log G(z) with G = 1/Gamma_2 (Barnes function), z > 0.
double log_barnes_g(double z);

/// zeta'(-n, z) - zeta'(-n) expressed through log Gamma_1..Gamma_{n+1}(z).
double hurwitz_deriv_from_gammas(unsigned n, double z);

/// log A where A is the Glaisher-Kinkelin constant: 1/12 - zeta'(-1).
double glaisher_log();

}  // namespace mgamma

#endif  // MGAMMA_MULTIGAMMA_HPP
