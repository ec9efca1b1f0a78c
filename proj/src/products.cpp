#include "mgamma/products.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mgamma/combinatorics.hpp"
#include "mgamma/hurwitz.hpp"
#include "mgamma/multigamma.hpp"

namespace mgamma {

namespace {

constexpr double kPi = std::numbers::pi;

double log_gamma(double z) { return log_multiple_gamma(1, z); }

/// 2|x| as an integer if x is a half-integer (or integer), else 0.
long vanishing_factor_index(double x) {
  const double t = 2.0 * std::abs(x);
  const double r = std::round(t);
  if (r >= 1.0 && std::abs(t - r) < 1e-12) return static_cast<long>(r);
  return 0;
}

}  // namespace

double melzak_product(double x) {
  if (x <= -0.5) throw std::domain_error("melzak_product: requires x > -1/2");
  const double lg = -x + log_gamma(x + 0.5) - log_gamma(0.5) +
                    2.0 * (log_barnes_g(x + 0.5) - log_barnes_g(x + 1.0) - log_barnes_g(0.5));
  return std::exp(lg);
}

double melzak_squared_product(double x, unsigned start_index) {
  const long vk = vanishing_factor_index(x);
  if (vk != 0 && vk >= static_cast<long>(start_index))
    throw std::domain_error(
        "melzak_squared_product: factor at k = " + std::to_string(vk) +
        " vanishes; exclude it with start_index > " + std::to_string(vk));
  if (std::abs(x) >= 1.0)
    throw std::domain_error("melzak_squared_product: requires |x| < 1");

  // log of the full (k >= 1) closed form, with cos(pi x) handled separately
  // so the x = 1/2 limit against the k = 1 factor can be taken analytically.
  // The triple-gamma ratio enters to the power -8 under the recurrence
  // normalization Gamma_{n+1}(z+1) = Gamma_{n+1}(z)/Gamma_n(z) (exponent
  // pinned against the polylog route and the product itself).
  const double expo = 2.0 * x * x + 3.5 * hurwitz_zeta(3.0, 1.0) / (kPi * kPi);
  const double lg = expo + 4.0 * (log_barnes_g(1.0 + x) + log_barnes_g(1.0 - x)) -
                    8.0 * (log_multiple_gamma(3, 1.5 - x) + log_multiple_gamma(3, 1.5 + x) -
                           log_multiple_gamma(3, 1.0 - x) - log_multiple_gamma(3, 1.0 + x));

  double prefactor = std::cos(kPi * x) / kPi;
  double divisor = 1.0;
  for (unsigned k = 1; k < start_index; ++k) {
    // remove the k-th factor (1 - 4x^2/k^2)^{-k^2 (-1)^k}
    const double base = 1.0 - 4.0 * x * x / (static_cast<double>(k) * k);
    const double e = (k % 2 == 0) ? -static_cast<double>(k) * k : static_cast<double>(k) * k;
    if (k == 1 && std::abs(base) < 1e-12) {
      // cos(pi x)/(pi (1 - 4x^2)) -> 1/4 as x -> 1/2
      prefactor = 0.25;
      continue;
    }
    divisor *= std::pow(base, e);
  }
  return prefactor * std::exp(lg) / divisor;
}

std::complex<double> polylog_unit_circle(unsigned k, double theta) {
  if (k != 2 && k != 3) throw std::domain_error("polylog_unit_circle: requires k in {2, 3}");
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;

  const double zk = hurwitz_zeta(static_cast<double>(k), 1.0);
  if (t < 1e-9 || 2.0 * kPi - t < 1e-9) return {zk, 0.0};
  if (std::abs(t - kPi) < 1e-9) return {(std::pow(2.0, 1.0 - static_cast<double>(k)) - 1.0) * zk, 0.0};

  const std::complex<double> z = std::polar(1.0, t);
  const auto f = [k](unsigned long n) {
    return std::pow(static_cast<double>(n), -static_cast<double>(k));
  };

  constexpr unsigned long kHead = 128;
  std::complex<double> acc{0.0, 0.0};
  std::complex<double> zn{1.0, 0.0};
  for (unsigned long n = 1; n < kHead; ++n) {
    zn *= z;
    acc += zn * f(n);
  }

  // tail sum_{n>=M} z^n f(n) by iterated summation by parts:
  //   T_t = z^M D^t f(M)/(1-z) - (z/(1-z)) T_{t+1},  D f(n) = f(n) - f(n+1)
  constexpr unsigned kLevels = 4;
  const std::complex<double> one_minus_z = 1.0 - z;
  const std::complex<double> ratio = -z / one_minus_z;
  const std::complex<double> zM = std::pow(z, static_cast<double>(kHead));
  const auto delta = [&](unsigned t, unsigned long n) {
    double s = 0.0;
    for (unsigned i = 0; i <= t; ++i) {
      const double b = binomial(t, i).get_d() * f(n + i);
      s += (i % 2 == 0) ? b : -b;
    }
    return s;
  };
  std::complex<double> lead{0.0, 0.0};
  std::complex<double> rt{1.0, 0.0};
  for (unsigned t = 0; t < kLevels; ++t) {
    lead += rt * zM * delta(t, kHead) / one_minus_z;
    rt *= ratio;
  }
  std::complex<double> rest{0.0, 0.0};
  std::complex<double> zpow = zM;
  for (unsigned long n = kHead; n < kHead + 4096; ++n) {
    const double d = delta(kLevels, n);
    rest += zpow * d;
    zpow *= z;
    if (std::abs(d) < 1e-19) break;
  }
  return acc + lead + rt * rest;
}

double corollary_product(double x) {
  if (x <= 0.0 || x > 0.5)
    throw std::domain_error("corollary_product: requires 0 < x <= 1/2");
  const std::complex<double> i{0.0, 1.0};
  const double theta = 2.0 * kPi * x;
  const std::complex<double> li2 = polylog_unit_circle(2, theta) - polylog_unit_circle(2, theta + kPi);
  const std::complex<double> li3 = polylog_unit_circle(3, theta) - polylog_unit_circle(3, theta + kPi);

  const std::complex<double> expo = 2.0 * x * x * (1.0 + kPi * i) +
                                    3.5 * hurwitz_zeta(3.0, 1.0) / (kPi * kPi) +
                                    (4.0 * i * x / kPi) * li2 - (2.0 / (kPi * kPi)) * li3;
  if (std::abs(std::imag(expo)) > 1e-9)
    throw std::runtime_error("corollary_product: imaginary part failed to cancel");

  const double tan_part = (0.5 - x < 1e-12)
                              ? kPi / 4.0  // lim tan(pi x)^{-4x^2} / (1 - 4x^2)
                              : std::pow(std::tan(kPi * x), -4.0 * x * x);
  return tan_part * std::exp(std::real(expo));
}

std::complex<double> barnes_reflection(double z) {
  if (z <= 0.0 || z >= 1.0) throw std::domain_error("barnes_reflection: requires 0 < z < 1");
  const std::complex<double> i{0.0, 1.0};
  const std::complex<double> li2 = polylog_unit_circle(2, 2.0 * kPi * z);
  const double b2 = bernoulli_poly(2).eval_double(z);
  return z * std::log(kPi / std::sin(kPi * z)) - (kPi * i / 2.0) * b2 +
         (i / (2.0 * kPi)) * li2;
}

double gamma3_reflection(double z) {
  if (z <= 0.0 || z >= 1.0) throw std::domain_error("gamma3_reflection: requires 0 < z < 1");
  const std::complex<double> i{0.0, 1.0};
  const double zeta3 = hurwitz_zeta(3.0, 1.0);
  const std::complex<double> li2 = polylog_unit_circle(2, 2.0 * kPi * z);
  const std::complex<double> li3 = polylog_unit_circle(3, 2.0 * kPi * z);
  const double b2 = bernoulli_poly(2).eval_double(z);
  const double b3 = bernoulli_poly(3).eval_double(z);

  const std::complex<double> rhs = z * z * std::log(kPi / std::sin(kPi * z)) -
                                   kPi * i * z * b2 + (kPi * i / 3.0) * b3 +
                                   (i * z / kPi) * li2 - li3 / (2.0 * kPi * kPi) +
                                   zeta3 / (2.0 * kPi * kPi);
  const double lhs = 2.0 * (log_multiple_gamma(3, 1.0 + z) + log_multiple_gamma(3, 1.0 - z)) +
                     log_barnes_g(1.0 + z) + log_barnes_g(1.0 - z);
  return std::abs(lhs - std::real(rhs)) + std::abs(std::imag(rhs));
}

double catalan_constant() {
  // pair terms: p(j) = 1/(4j+1)^2 - 1/(4j+3)^2, then Euler-Maclaurin tail
  constexpr unsigned long J = 4096;
  double sum = 0.0;
  for (unsigned long j = J; j-- > 0;) {
    const double a = 4.0 * j + 1.0;
    const double b = 4.0 * j + 3.0;
    sum += 1.0 / (a * a) - 1.0 / (b * b);
  }
  const double a = 4.0 * J + 1.0;
  const double b = 4.0 * J + 3.0;
  double tail = 0.25 * (1.0 / a - 1.0 / b);                      // integral
  tail += 0.5 * (1.0 / (a * a) - 1.0 / (b * b));                 // half endpoint
  tail -= (1.0 / 12.0) * (-8.0 / (a * a * a) + 8.0 / (b * b * b));  // B_2 f'(J)
  tail += (1.0 / 720.0) * (-1536.0 / std::pow(a, 5) + 1536.0 / std::pow(b, 5));
  return sum + tail;
}

double product_closed_form(const ProductSpec& spec) {
  const double x = spec.x.to_double();
  if (spec.kind == ProductKind::melzak_linear) {
    if (spec.start_index != 1)
      throw std::domain_error("product_closed_form: melzak start index must be 1");
    return melzak_product(x);
  }
  return melzak_squared_product(x, spec.start_index);
}

}  // namespace mgamma
