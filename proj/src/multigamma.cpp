#include "mgamma/multigamma.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "mgamma/combinatorics.hpp"
#include "mgamma/hurwitz.hpp"
#include "mgamma/stirling_poly.hpp"

namespace mgamma {

double zeta_prime_at_neg(unsigned k) {
  static std::mutex mu;
  static std::vector<double> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= k) cache.push_back(zeta_sderiv_neg(static_cast<unsigned>(cache.size()), 1.0));
  return cache[k];
}

double multiple_zeta(unsigned n, double s, double z) {
  if (n < 1) throw std::domain_error("multiple_zeta: requires n >= 1");
  if (z <= 0.0) throw std::domain_error("multiple_zeta: requires z > 0");
  for (unsigned j = 0; j < n; ++j)
    if (s - j == 1.0) throw std::domain_error("multiple_zeta: pole at s = " + std::to_string(j + 1));
  double acc = 0.0;
  for (unsigned j = 0; j < n; ++j)
    acc += p_poly(j, n).eval_double(z) * hurwitz_zeta(s - j, z);
  return acc / factorial(n - 1).get_d();
}

RnConstant r_n(unsigned n) {
  if (n < 1) throw std::domain_error("r_n: requires n >= 1");
  double acc = 0.0;
  for (unsigned k = 0; k < n; ++k)
    acc += zeta_prime_at_neg(k) * stirling_cycle(n, k + 1).get_d();
  return {n, acc / factorial(n - 1).get_d()};
}

double log_multiple_gamma(unsigned n, double z) {
  if (n < 1) throw std::domain_error("log_multiple_gamma: requires n >= 1");
  if (z <= 0.0) throw std::domain_error("log_multiple_gamma: requires z > 0");
  // The prefactor is -1/(n-1)! for every n; this is what the defining
  // recurrence Gamma_{n+1}(z+1) = Gamma_{n+1}(z)/Gamma_n(z) forces (checked
  // exactly at integer z, where Gamma_n is a product of factorial powers).
  double acc = 0.0;
  for (unsigned k = 0; k < n; ++k)
    acc += p_poly(k, n).eval_double(z) * (zeta_prime_at_neg(k) - zeta_sderiv_neg(k, z));
  return -acc / factorial(n - 1).get_d();
}

double log_barnes_g(double z) {
  if (z <= 0.0) throw std::domain_error("log_barnes_g: requires z > 0");
  return -log_multiple_gamma(2, z);
}

double hurwitz_deriv_from_gammas(unsigned n, double z) {
  if (z <= 0.0) throw std::domain_error("hurwitz_deriv_from_gammas: requires z > 0");
  // zeta'(-n, z) - zeta'(-n) = sum_k (-1)^{n+k} k! Q_{k,n}(z) log Gamma_{k+1}(z);
  // the (-1)^k weight pairs with the -1/(n-1)! convention above so that the
  // two maps invert each other through the discrete orthogonality of P and Q.
  double acc = 0.0;
  for (unsigned k = 0; k <= n; ++k) {
    const double t =
        factorial(k).get_d() * q_poly(k, n).eval_double(z) * log_multiple_gamma(k + 1, z);
    acc += ((n + k) % 2 == 0) ? t : -t;
  }
  return acc;
}

double glaisher_log() { return 1.0 / 12.0 - zeta_prime_at_neg(1); }

}  // namespace mgamma
