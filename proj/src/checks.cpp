#include "mgamma/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "mgamma/combinatorics.hpp"
#include "mgamma/hurwitz.hpp"
#include "mgamma/multigamma.hpp"
#include "mgamma/oracle.hpp"
#include "mgamma/parser.hpp"
#include "mgamma/products.hpp"
#include "mgamma/series.hpp"
#include "mgamma/stirling_poly.hpp"

namespace mgamma::checks {

namespace {

constexpr double kPi = std::numbers::pi;

class Probe {
 public:
  void expect(double residual, double tol) {
    const bool ok = residual <= tol;
    pass_ = pass_ && ok;
    const double ratio = tol > 0.0 ? residual / tol
                                   : (residual > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    if (ratio >= worst_ratio_) {
      worst_ratio_ = ratio;
      residual_ = residual;
      tol_ = tol;
    }
  }
  void expect_exact(bool ok) { expect(ok ? 0.0 : 1.0, 0.0); }

  bool pass() const { return pass_; }
  double residual() const { return residual_; }
  double tolerance() const { return tol_; }

 private:
  bool pass_ = true;
  double worst_ratio_ = -1.0;
  double residual_ = 0.0;
  double tol_ = 0.0;
};

struct Check {
  const char* suite;
  const char* name;
  std::function<void(Probe&)> fn;
};

double lgamma_ref(double z) { return std::lgamma(z); }

/// d/ds multiple_zeta(n, s, z) at s = 0 via Richardson central differences.
double fd_multiple_zeta_sderiv(unsigned n, double z) {
  const auto d = [&](double h) {
    return (multiple_zeta(n, h, z) - multiple_zeta(n, -h, z)) / (2.0 * h);
  };
  const double d0 = d(1.0 / 64), d1 = d(1.0 / 128), d2 = d(1.0 / 256);
  const double r0 = (4.0 * d1 - d0) / 3.0, r1 = (4.0 * d2 - d1) / 3.0;
  return (16.0 * r1 - r0) / 15.0;
}

/// Coefficients of x^k in prod_{i=1}^{n-1} (i + x - z), as polynomials in z.
std::vector<RationalPolynomial> generator_coefficients(unsigned n) {
  std::vector<RationalPolynomial> c{RationalPolynomial::constant(Rational(1))};
  for (unsigned i = 1; i + 1 <= n; ++i) {
    const RationalPolynomial lin{Rational(static_cast<long>(i)), Rational(-1)};  // i - z
    std::vector<RationalPolynomial> next(c.size() + 1);
    for (size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k] * lin;
      next[k + 1] += c[k];
    }
    c = std::move(next);
  }
  return c;
}

/// [y^{n-1}] of log^k(1-y) (1-y)^{z-1}, with coefficients polynomial in z;
/// times (-1)^k (n-1)!/k! this is the derivative representation of P_{k,n}.
RationalPolynomial p1_series_coefficient(unsigned k, unsigned n) {
  const unsigned ord = n;  // keep y^0..y^{n-1}
  // log(1-y) = -sum_{t>=1} y^t/t
  std::vector<Rational> log_series(ord, Rational(0));
  for (unsigned t = 1; t < ord; ++t) log_series[t] = Rational(-1, static_cast<long>(t));
  // log^k(1-y)
  std::vector<Rational> pow_series(ord, Rational(0));
  pow_series[0] = Rational(1);
  for (unsigned rep = 0; rep < k; ++rep) {
    std::vector<Rational> next(ord, Rational(0));
    for (unsigned a = 0; a < ord; ++a)
      for (unsigned b = 0; a + b < ord; ++b) next[a + b] += pow_series[a] * log_series[b];
    pow_series = std::move(next);
  }
  // (1-y)^{z-1} = sum_j C(z-1, j) (-y)^j
  const RationalPolynomial zm1{Rational(-1), Rational(1)};
  std::vector<RationalPolynomial> bin(ord);
  for (unsigned j = 0; j < ord; ++j) {
    RationalPolynomial c = binomial_poly(j).compose(zm1);
    bin[j] = (j % 2 == 0) ? c : Rational(-1) * c;
  }
  RationalPolynomial out;
  for (unsigned a = 0; a + 1 < ord + 1 && a <= n - 1; ++a)
    out += pow_series[a] * bin[n - 1 - a];
  return out;
}

double d2_expression() {
  const double g = stieltjes(0), g1 = stieltjes(1);
  const double l2 = std::log(2.0), lp = std::log(kPi);
  return kPi * kPi / 12 + lp * lp - 3 * l2 * l2 - g * g - 2 * g1;
}

double d3_expression() {
  const double l2 = std::log(2.0);
  return 3.0 * dilcher_sum(2).value() * l2 + 2.0 * zeta_kth_deriv_at0(3, 1.0) +
         9.0 * std::log(2.0 * kPi) * l2 * l2 + std::pow(std::log(4.0), 3);
}

void check_parser_fuzz(Probe& p) {
  std::mt19937 rng(0xC0FFEE);
  const std::string alphabet = "sumk=().infloge^*+-/0123456789 melzahrtx,";
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 64);
  unsigned parsed = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string s;
    const int L = len(rng);
    for (int j = 0; j < L; ++j) s += alphabet[pick(rng)];
    try {
      parse_series(s);
      ++parsed;
    } catch (const ParseError&) {
    }
    try {
      parse_product(s);
      ++parsed;
    } catch (const ParseError&) {
    }
  }
  // every input either parsed or raised ParseError; reaching here means no
  // crash and no unexpected exception type
  p.expect_exact(parsed <= 20000);
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> v;
    auto add = [&v](const char* suite, const char* name, std::function<void(Probe&)> fn) {
      v.push_back({suite, name, std::move(fn)});
    };

    // ----- identities -----
    add("identities", "stirling-examples-and-row-sums", [](Probe& p) {
      p.expect_exact(stirling_cycle(0, 0) == 1);
      p.expect_exact(stirling_cycle(3, 1) == 2);
      p.expect_exact(stirling_cycle(5, 5) == 1);
      p.expect_exact(stirling_cycle(4, 6) == 0);
      p.expect_exact(stirling_subset(0, 0) == 1);
      p.expect_exact(stirling_subset(4, 2) == 7);
      p.expect_exact(stirling_subset(7, 7) == 1);
      for (unsigned n = 0; n <= 12; ++n) {
        BigInt row(0);
        for (unsigned k = 0; k <= n; ++k) row += stirling_cycle(n, k);
        p.expect_exact(row == factorial(n));
      }
    });
    add("identities", "stirling-discrete-orthogonality", [](Probe& p) {
      for (unsigned m = 0; m <= 10; ++m)
        for (unsigned n = 0; n <= 10; ++n) {
          BigInt acc(0);
          for (unsigned j = 0; j <= n; ++j) {
            const BigInt t = stirling_cycle(j, m) * stirling_subset(n, j);
            acc += ((m + j) % 2 == 0) ? t : -t;
          }
          p.expect_exact(acc == (m == n ? 1 : 0));
        }
    });
    add("identities", "bernoulli-numbers-and-polys", [](Probe& p) {
      p.expect_exact(bernoulli_number(0) == Rational(1));
      p.expect_exact(bernoulli_number(2) == Rational(1, 6));
      p.expect_exact(bernoulli_number(5) == Rational(0));
      p.expect_exact(bernoulli_poly(2).eval(Rational(0)) == Rational(1, 6));
      p.expect_exact(bernoulli_poly(3).eval(Rational(1, 2)) == Rational(0));
      for (unsigned n = 0; n <= 12; ++n) {
        if (n == 1) continue;
        p.expect_exact(bernoulli_poly(n).eval(Rational(0)) == bernoulli_number(n));
        p.expect_exact(bernoulli_poly(n).eval(Rational(1)) == bernoulli_number(n));
      }
    });
    add("identities", "pochhammer-and-binomial", [](Probe& p) {
      p.expect_exact(pochhammer(Rational(7, 3), 0) == Rational(1));
      p.expect_exact(pochhammer(Rational(-2), 4) == Rational(0));
      p.expect_exact(pochhammer(Rational(1), 5) == Rational(120));
      for (const Rational& x : {Rational(2, 3), Rational(-7, 2), Rational(5)})
        for (unsigned k = 0; k <= 8; ++k)
          for (unsigned m = 0; m <= 8; ++m)
            p.expect_exact(pochhammer(x, k) * pochhammer(x + Rational(static_cast<long>(k)), m) ==
                           pochhammer(x, k + m));
      p.expect_exact(binomial_general(Rational(9, 7), 0) == Rational(1));
      p.expect_exact(binomial_general(Rational(1, 2), 2) == Rational(-1, 8));
      p.expect_exact(binomial_general(Rational(5), 2) == Rational(10));
    });
    add("identities", "p-poly-at-one-and-generator", [](Probe& p) {
      for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 0; k < n; ++k)
          p.expect_exact(p_poly(k, n).eval(Rational(1)) == Rational(stirling_cycle(n - 1, k)));
      p.expect_exact(p_poly(0, 1) == RationalPolynomial::constant(Rational(1)));
      for (unsigned n = 1; n <= 8; ++n) {
        const auto gen = generator_coefficients(n);
        for (unsigned k = 0; k < n; ++k) p.expect_exact(gen[k] == p_poly(k, n));
      }
    });
    add("identities", "p-poly-equals-alt-form", [](Probe& p) {
      for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 0; k < n; ++k) p.expect_exact(p_poly(k, n) == p_poly_alt(k, n));
    });
    add("identities", "p-poly-derivative-form", [](Probe& p) {
      for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k = 0; k < n; ++k) {
          RationalPolynomial expect = p1_series_coefficient(k, n);
          Rational scale(factorial(n - 1), factorial(k));
          if (k % 2 == 1) scale = -scale;
          p.expect_exact(scale * expect == p_poly(k, n));
        }
    });
    add("identities", "q-poly-at-zero", [](Probe& p) {
      for (unsigned n = 0; n <= 10; ++n)
        for (unsigned k = 0; k <= n; ++k)
          p.expect_exact(q_poly(k, n).eval(Rational(0)) ==
                         Rational(stirling_subset(n + 1, k + 1)));
    });
    add("identities", "q-poly-integer-sequences", [](Probe& p) {
      const long seq1[] = {1, 16, 170, 1520, 12411, 96096};
      for (unsigned n = 3; n <= 8; ++n) {
        const Rational v = Rational::pow(Rational(2), static_cast<long>(n) - 3) *
                           q_poly(3, n).eval(Rational(1, 2));
        p.expect_exact(v == Rational(seq1[n - 3]));
      }
      for (unsigned n = 3; n <= 10; ++n) {
        const Rational v = Rational(48) * Rational::pow(Rational(2), static_cast<long>(n) - 3) *
                           q_poly(3, n).eval(Rational(1, 2));
        const Rational rhs = Rational::pow(Rational(7), n) - Rational(3) * Rational::pow(Rational(5), n) +
                             Rational::pow(Rational(3), n + 1) - Rational(1);
        p.expect_exact(v == rhs);
      }
      const long seq2[] = {12, 60, 210, 630, 1736, 4536, 11430};
      const RationalPolynomial one_minus{Rational(1), Rational(-1)};
      for (unsigned n = 4; n <= 10; ++n) {
        const RationalPolynomial composed = q_poly(2, n).compose(one_minus);
        p.expect_exact(Rational(2) * composed.coeff(2) == Rational(seq2[n - 4]));
        p.expect_exact(Rational(2) * composed.coeff(2) ==
                       Rational(2) * Rational(binomial(n, n - 2)) *
                           Rational(stirling_subset(n - 2, 2)));
      }
    });
    add("identities", "stirling-poly-orthogonality-exact", [](Probe& p) {
      for (unsigned n = 1; n <= 8; ++n)
        for (unsigned k = 0; k < n; ++k) {
          const RationalPolynomial expect =
              (k == n - 1) ? RationalPolynomial::constant(Rational(1)) : RationalPolynomial{};
          p.expect_exact(orthogonality_poly(k, n) == expect);
        }
      p.expect_exact(orthogonality_sum(1, 4, Rational(7, 3)) == Rational(0));
      p.expect_exact(orthogonality_sum(0, 1, Rational(123, 7)) == Rational(1));
    });
    add("identities", "hurwitz-shift-identity", [](Probe& p) {
      // relative to the shifted head-sum magnitude, the quantity binary64
      // rounding actually acts on for s < 0
      for (double s : {-3.5, -1.0, 0.5, 2.0})
        for (double z : {0.3, 1.0, 7.0}) {
          const double lhs = hurwitz_zeta(s, z) - hurwitz_zeta(s, z + 1.0);
          const double rhs = std::pow(z, -s);
          const double head = std::pow(z + 25.0, std::max(1.0 - s, 1.0)) / std::max(1.0 - s, 1.0);
          const double scale = 1.0 + std::abs(hurwitz_zeta(s, z)) + std::abs(rhs) + head;
          p.expect(std::abs(lhs - rhs) / scale, 1e-13);
        }
    });
    add("identities", "hurwitz-known-values", [](Probe& p) {
      p.expect(std::abs(hurwitz_zeta(2, 1) - kPi * kPi / 6), 1e-12);
      p.expect(std::abs(hurwitz_zeta(2, 0.5) - kPi * kPi / 2), 1e-12);
      for (double z : {0.4, 1.0, 9.2}) p.expect(std::abs(hurwitz_zeta(0, z) - (0.5 - z)), 1e-12);
    });
    add("identities", "prop1-matches-classical-asymptotics", [](Probe& p) {
      const auto e0 = prop1_expansion(0, 3);
      p.expect_exact(e0.coeff(Rational(1), 1) == Rational(1));
      p.expect_exact(e0.coeff(Rational(0), 1) == Rational(-1, 2));
      p.expect_exact(e0.coeff(Rational(1), 0) == Rational(-1));
      p.expect_exact(e0.coeff(Rational(0), 0) == Rational(0));
      const auto e1 = prop1_expansion(1, 3);
      p.expect_exact(e1.coeff(Rational(2), 1) == Rational(1, 2));
      p.expect_exact(e1.coeff(Rational(1), 1) == Rational(-1, 2));
      p.expect_exact(e1.coeff(Rational(0), 1) == Rational(1, 12));
      p.expect_exact(e1.coeff(Rational(2), 0) == Rational(-1, 4));
      p.expect_exact(e1.coeff(Rational(1), 0) == Rational(0));
      p.expect_exact(e1.coeff(Rational(0), 0) == Rational(1, 12));
    });
    add("identities", "prop1-truncation-monotone", [](Probe& p) {
      const double truth = zeta_sderiv_neg(1, 20.0);
      double prev = std::numeric_limits<double>::infinity();
      for (unsigned r = 1; r <= 4; ++r) {
        const double err = std::abs(prop1_expansion(1, r).evaluate(20.0) - truth);
        p.expect_exact(err <= prev + 1e-18);
        prev = err;
      }
    });
    add("identities", "sderiv-matches-fd-oracle", [](Probe& p) {
      for (unsigned lambda = 0; lambda <= 4; ++lambda)
        for (double z : {0.5, 1.0, 2.0, 10.0})
          p.expect(std::abs(zeta_sderiv_neg(lambda, z) -
                            oracle::finite_difference_sderiv(lambda, z, 1)),
                   1e-8);
    });
    add("identities", "sderiv-shift-identity", [](Probe& p) {
      // zeta'(0, z+1) - zeta'(0, z) = log z
      p.expect(std::abs(zeta_sderiv_neg(0, 4.0) - zeta_sderiv_neg(0, 3.0) - std::log(3.0)), 1e-12);
      p.expect(std::abs(zeta_sderiv_neg(0, 1.0) + 0.5 * std::log(2.0 * kPi)), 1e-10);
      p.expect(std::abs(zeta_sderiv_neg(1, 1.0) - (1.0 / 12.0 - glaisher_log())), 1e-12);
    });
    add("identities", "kth-deriv-at-zero", [](Probe& p) {
      for (double z : {0.5, 1.0, 5.0})
        p.expect(std::abs(zeta_kth_deriv_at0(1, z) - zeta_sderiv_neg(0, z)), 1e-10);
      // zeta^{(k)}(0, 1/2) as a combination of zeta^{(j)}(0) and powers of log 2
      for (unsigned k : {2u, 3u}) {
        double rhs = -0.5 * std::pow(std::log(2.0), k);
        for (unsigned j = 1; j < k; ++j)
          rhs += binomial(k, j).get_d() * zeta_kth_deriv_at0(k - j, 1.0) *
                 std::pow(std::log(2.0), j);
        p.expect(std::abs(zeta_kth_deriv_at0(k, 0.5) - rhs), 1e-7);
      }
      p.expect(std::abs(zeta_kth_deriv_at0(1, 2.0) - zeta_kth_deriv_at0(1, 1.0)), 1e-10);
    });
    add("identities", "kth-deriv-asymptotic-numeric", [](Probe& p) {
      // remainder is O(1/N); for k = 1 the next term is exactly (1/12)/N
      p.expect(std::abs(kth_deriv_asymptotic(1).evaluate(200.0) - zeta_kth_deriv_at0(1, 200.0)),
               5e-4);
      p.expect(std::abs(kth_deriv_asymptotic(2).evaluate(100.0) - zeta_kth_deriv_at0(2, 100.0)),
               1e-2);
      p.expect(std::abs(kth_deriv_asymptotic(2).evaluate(1000.0) - zeta_kth_deriv_at0(2, 1000.0)),
               2e-3);
      for (unsigned k = 1; k <= 3; ++k) {
        auto combo = kth_deriv_asymptotic(k).substitute_shifted(Rational(1), -3, "N").scaled(
            Rational(2));
        combo += kth_deriv_asymptotic(k).substitute_shifted(Rational(1, 2), -3, "N").scaled(
            Rational(-1));
        combo += kth_deriv_asymptotic(k).substitute_shifted(Rational(3, 2), -3, "N").scaled(
            Rational(-1));
        p.expect_exact(combo.divergent_part().empty());
      }
    });
    add("identities", "stieltjes-constants", [](Probe& p) {
      p.expect(std::abs(stieltjes(0) - 0.57721566490153286), 1e-10);
      const double s = 1.01;
      const double laurent = 1.0 / (s - 1.0) + stieltjes(0) - stieltjes(1) * (s - 1.0) +
                             0.5 * stieltjes(2) * (s - 1.0) * (s - 1.0);
      p.expect(std::abs(laurent - hurwitz_zeta(s, 1.0)), 1e-6);
      p.expect(std::abs(dilcher_sum(2).value() - d2_expression()), 1e-7);
    });
    add("identities", "gdef-recurrence", [](Probe& p) {
      for (unsigned n = 1; n <= 3; ++n)
        for (double z : {0.5, 1.3, 2.0, 5.0})
          p.expect(std::abs(log_multiple_gamma(n + 1, z + 1.0) - log_multiple_gamma(n + 1, z) +
                            log_multiple_gamma(n, z)),
                   1e-9);
      for (unsigned n = 1; n <= 4; ++n) p.expect(std::abs(log_multiple_gamma(n, 1.0)), 1e-12);
    });
    add("identities", "loggamma-against-stirling-reference", [](Probe& p) {
      for (double z : {0.5, 1.0, 1.7, 3.3, 7.9, 12.5, 20.0})
        p.expect(std::abs(log_multiple_gamma(1, z) - lgamma_ref(z)), 1e-10);
      p.expect(std::abs(log_multiple_gamma(1, 4.0) - std::log(6.0)), 1e-10);
    });
    add("identities", "barnes-identities", [](Probe& p) {
      double z = 2.7;
      p.expect(std::abs(log_barnes_g(z + 1.0) - log_barnes_g(z) - lgamma_ref(z)), 1e-9);
      p.expect(std::abs(log_barnes_g(1.0)), 1e-12);
      z = 1.3;
      p.expect(std::abs(zeta_sderiv_neg(1, z) -
                        (-log_barnes_g(z + 1.0) + z * lgamma_ref(z) + zeta_prime_at_neg(1))),
               1e-9);
      p.expect(std::abs(3.0 * zeta_prime_at_neg(1) -
                        (-std::log(2.0) / 12.0 + 0.5 * std::log(kPi) + 2.0 * log_barnes_g(0.5))),
               1e-9);
      // Bendersky: 1^1 2^2 ... n^n = n!^n / G(n+1)
      for (unsigned n = 2; n <= 5; ++n) {
        double lhs = 0.0;
        for (unsigned j = 1; j <= n; ++j) lhs += j * std::log(static_cast<double>(j));
        p.expect(std::abs(lhs - (n * lgamma_ref(n + 1.0) - log_barnes_g(n + 1.0))), 1e-9);
      }
    });
    add("identities", "triple-gamma-display", [](Probe& p) {
      const double z = 1.8;
      const double rhs = 2.0 * log_multiple_gamma(3, z) + (3.0 - 2.0 * z) * log_barnes_g(z) +
                         (1.0 - z) * (1.0 - z) * lgamma_ref(z);
      p.expect(std::abs(hurwitz_deriv_from_gammas(2, z) - rhs), 1e-9);
      p.expect(std::abs(hurwitz_deriv_from_gammas(2, z) -
                        (zeta_sderiv_neg(2, z) - zeta_prime_at_neg(2))),
               1e-9);
      p.expect(std::abs(hurwitz_deriv_from_gammas(0, 3.0) - lgamma_ref(3.0)), 1e-10);
    });
    add("identities", "prop2-prop3-roundtrip", [](Probe& p) {
      for (unsigned n = 1; n <= 3; ++n)
        for (double z : {0.7, 1.8}) {
          double acc = 0.0;
          for (unsigned k = 0; k < n; ++k)
            acc += p_poly(k, n).eval_double(z) * hurwitz_deriv_from_gammas(k, z);
          acc /= factorial(n - 1).get_d();
          p.expect(std::abs(acc - log_multiple_gamma(n, z)), 1e-9);
        }
    });
    add("identities", "vardi-form", [](Probe& p) {
      for (double z : {1.5, 2.5}) {
        const double d = fd_multiple_zeta_sderiv(2, z);
        const double vardi = -d - (-r_n(2).value + z * r_n(1).value);
        p.expect(std::abs(vardi - log_barnes_g(z)), 1e-6);
      }
    });
    add("identities", "multiple-zeta-reductions", [](Probe& p) {
      p.expect(std::abs(multiple_zeta(1, 2.5, 1.3) - hurwitz_zeta(2.5, 1.3)), 1e-13);
      p.expect(std::abs(multiple_zeta(2, 5.0, 1.0) - hurwitz_zeta(4.0, 1.0)), 1e-12);
      double brute = 0.0;
      for (long k = 400000; k >= 0; --k)
        brute += (k + 2.0) * (k + 1.0) / 2.0 * std::pow(k + 1.5, -6.0);
      p.expect(std::abs(multiple_zeta(3, 6.0, 1.5) - brute), 1e-10);
      p.expect(std::abs(r_n(1).value - zeta_prime_at_neg(0)), 1e-10);
      p.expect(std::abs(r_n(2).value - (zeta_prime_at_neg(0) + zeta_prime_at_neg(1))), 1e-10);
      // partial sums of the differentiated reductions reproduce R_n
      for (unsigned n = 1; n <= 4; ++n) {
        double acc = 0.0;
        for (unsigned k = 1; k <= n; ++k) {
          double lim = (k == 1) ? zeta_prime_at_neg(0) : 0.0;
          for (unsigned j = 1; j <= k; ++j)
            lim += stirling_cycle(k - 1, j).get_d() / factorial(k - 1).get_d() *
                   zeta_prime_at_neg(j);
          acc += lim;
        }
        p.expect(std::abs(acc - r_n(n).value), 1e-8);
      }
    });
    add("identities", "glaisher-constant", [](Probe& p) {
      p.expect(std::abs(glaisher_log() - 0.2487544770), 1e-8);
      p.expect(std::abs(12.0 * (glaisher_log() + zeta_prime_at_neg(1)) - 1.0), 1e-12);
    });
    add("identities", "phi-regularized-log-k", [](Probe& p) {
      const auto r = phi_regularized(0, Rational(0));
      p.expect_exact(!r.convergent);
      p.expect_exact(r.divergent_profile.coeff(Rational(1), 1) == Rational(1));
      p.expect_exact(r.divergent_profile.coeff(Rational(1), 0) == Rational(-1));
      p.expect_exact(r.divergent_profile.coeff(Rational(0), 1) == Rational(1, 2));
      p.expect_exact(r.divergent_profile.size() == 3);
      p.expect(std::abs(r.constant_term.value() - 0.5 * std::log(2.0 * kPi)), 1e-12);
    });
    add("identities", "phi-profile-is-composed-expansion", [](Probe& p) {
      // profile of Phi(p, z) must equal the exact composition of the
      // m=1 expansions with z -> N+z+1, term by term
      const Rational z(1, 3);
      const unsigned pw = 2;
      const auto r = phi_regularized(pw, z);
      AsymptoticExpansion manual("N");
      for (unsigned j = 0; j <= pw; ++j) {
        const Rational w = Rational(binomial(pw, j)) * Rational::pow(-z, pw - j);
        const auto e = zeta_sderiv_expansion(1, j, (j + 8) / 2)
                           .substitute_shifted(z + Rational(1), -5, "N");
        manual += e.scaled(w);  // -(-1)^1 w = +w
      }
      for (const auto& t : manual.divergent_part().terms())
        p.expect_exact(r.divergent_profile.coeff(t.power, t.logpower) == t.coeff);
      p.expect_exact(r.divergent_profile.size() == manual.divergent_part().size());
    });
    add("identities", "dilcher-cancellation-exact", [](Probe& p) {
      for (unsigned k = 1; k <= 3; ++k) {
        const auto r = evaluate_series(dilcher_spec(k));
        p.expect_exact(r.convergent);
        p.expect_exact(r.divergent_profile.empty());
      }
    });
    add("identities", "series-linearity", [](Probe& p) {
      SeriesSpec tel;
      tel.terms = {{Rational(1), 0, Rational(0), 1},
                   {Rational(1), 0, Rational(2), 1},
                   {Rational(-2), 0, Rational(1), 1}};
      const double vt = evaluate_series(tel).constant_term.value();
      const double vd = evaluate_series(dilcher_spec(1)).constant_term.value();
      SeriesSpec lin = dilcher_spec(1);
      for (auto& t : lin.terms) t.coeff *= Rational(3);
      for (auto t : tel.terms) {
        t.coeff *= Rational(2);
        lin.terms.push_back(t);
      }
      p.expect(std::abs(evaluate_series(lin).constant_term.value() - (3 * vd + 2 * vt)), 1e-12);
      p.expect(std::abs(vt - std::log(0.5)), 1e-10);
    });
    add("identities", "dilcher-sum-vs-series-engine", [](Probe& p) {
      for (unsigned k : {1u, 2u})
        p.expect(std::abs(dilcher_sum(k).value() -
                          evaluate_series(dilcher_spec(k)).constant_term.value()),
                 1e-7);
    });
    add("identities", "melzak2-evenness", [](Probe& p) {
      for (double x : {0.1, 0.3, 0.45})
        p.expect(std::abs(melzak_squared_product(x) - melzak_squared_product(-x)), 1e-10);
    });
    add("identities", "polylog-identities", [](Probe& p) {
      const auto li2i = polylog_unit_circle(2, kPi / 2);
      const auto li2mi = polylog_unit_circle(2, 3 * kPi / 2);
      p.expect(std::abs(std::real(li2i - li2mi)), 1e-9);
      p.expect(std::abs(std::imag(li2i - li2mi) - 2.0 * catalan_constant()), 1e-9);
      const auto li3diff = polylog_unit_circle(3, 0.0) - polylog_unit_circle(3, kPi);
      p.expect(std::abs(std::real(li3diff) - 7.0 * hurwitz_zeta(3, 1) / 4.0), 1e-10);
      p.expect(std::abs(std::real(polylog_unit_circle(2, 0.0)) - kPi * kPi / 6.0), 1e-10);
    });
    add("identities", "reflection-formulas", [](Probe& p) {
      for (double z : {0.3, 0.5}) {
        const auto refl = barnes_reflection(z);
        p.expect(std::abs(std::imag(refl)), 1e-9);
        p.expect(std::abs(std::real(refl) - (log_barnes_g(1.0 + z) - log_barnes_g(1.0 - z))),
                 1e-8);
      }
      p.expect(gamma3_reflection(0.25), 1e-7);
      p.expect(gamma3_reflection(0.5), 1e-7);
      p.expect(gamma3_reflection(0.01), 1e-7);
    });
    add("identities", "catalan-constant", [](Probe& p) {
      p.expect(std::abs(catalan_constant() - 0.9159655941772190), 1e-10);
      const auto diff = polylog_unit_circle(2, kPi / 2) - polylog_unit_circle(2, 3 * kPi / 2);
      p.expect(std::abs(2.0 * catalan_constant() - std::imag(diff)), 1e-9);
    });
    add("identities", "parser-round-trip", [](Probe& p) {
      const char* corpus[] = {
          "sum(k=1..inf, log(k+1/2) - 2*log(k) + log(k-1/2))",
          "sum(k=1..inf, log(k))",
          "sum(k=1..inf, log(k) + log(k+2) - 2*log(k+1))",
          "sum(k=1..inf, 3*log(k+1))",
          "sum(k=2..inf, k^2*log(k-1/3))",
          "sum(k=1..inf, 1/2*k^1*log^2(k+3))",
          "sum(k=1..inf, log^3(k+1/2))",
          "sum(k=1..inf, -2*log(k+1/7) + 2*log(k))",
          "sum(k=5..inf, log(k-3/4))",
          "sum(k=1..inf, 7/3*log^4(k))",
          "sum(k=1..inf, log(k+1/2)+log(k+1/2))",
          "sum(k=1..inf, k^3*log(k) - k^3*log(k+1))",
          "sum(k=1..inf, 0*log(k) + log(k+1))",
          "sum( k = 1 .. inf , log ( k + 1/2 ) )",
          "sum(k=1..inf, 10/4*log(k+2/6))",
          "sum(k=3..inf, log^2(k-2))",
          "sum(k=1..inf, 2*log(k) - log(k+1) - log(k-1/2))",
          "sum(k=1..inf, k^4*log(k+4))",
          "sum(k=1..inf, -1*log(k))",
          "sum(k=1..inf, 5*k^2*log^2(k+9/8))",
      };
      for (const char* text : corpus) {
        const auto a = parse_series(text);
        const auto b = parse_series(unparse(a));
        p.expect_exact(a == b);
      }
      const char* products[] = {"melzak(x=1)", "melzak(x=-1/4)", "melzak2(x=1/4)",
                                "melzak2(x=1/2, start=2)", "melzak2(x=0)"};
      for (const char* text : products) {
        const auto a = parse_product(text);
        const auto b = parse_product(unparse(a));
        p.expect_exact(a.kind == b.kind && a.x == b.x && a.start_index == b.start_index);
      }
      // normalization merges syntactic duplicates
      p.expect_exact(parse_series("sum(k=1..inf, log(k+1/2)+log(k+1/2))") ==
                     parse_series("sum(k=1..inf, 2*log(k+1/2))"));
    });
    add("identities", "parser-fuzz-total", check_parser_fuzz);

    // ----- oracle -----
    add("oracle", "melzak-base-case", [](Probe& p) {
      const double closed = melzak_product(1.0);
      p.expect(std::abs(closed - kPi / (2.0 * std::numbers::e)), 1e-9);
      const auto rep = oracle::partial_product_extrapolated(
          ProductSpec{ProductKind::melzak_linear, Rational(1), 1}, 1024, 3);
      p.expect(std::abs(closed - rep.extrapolated), 1e-6);
    });
    add("oracle", "melzak-particular-cases", [](Probe& p) {
      const double logA = glaisher_log();
      const double f1 = std::exp(6.0 * logA - 1.0 - 0.5 * std::log(kPi) - std::log(2.0) / 6.0);
      p.expect(std::abs(melzak_product(0.5) - f1), 1e-8);
      p.expect(std::abs(melzak_product(2.0) - 3.0 * kPi * kPi / (16.0 * std::numbers::e * std::numbers::e)),
               1e-8);
      const double f3 = std::exp(3.0 * logA - catalan_constant() / kPi + 0.5 * std::log(kPi) +
                                 std::log(2.0) / 6.0 - lgamma_ref(0.25));
      p.expect(std::abs(melzak_product(-0.25) - f3), 1e-8);
      for (const Rational& x : {Rational(1, 2), Rational(2), Rational(-1, 4)}) {
        const auto rep = oracle::partial_product_extrapolated(
            ProductSpec{ProductKind::melzak_linear, x, 1}, 1024, 3);
        p.expect(std::abs(melzak_product(x.to_double()) - rep.extrapolated), 1e-6);
      }
    });
    add("oracle", "melzak-oracle-grid", [](Probe& p) {
      for (const Rational& x :
           {Rational(1, 10), Rational(1, 4), Rational(9, 20), Rational(1), Rational(2)}) {
        const auto rep = oracle::partial_product_extrapolated(
            ProductSpec{ProductKind::melzak_linear, x, 1}, 1024, 3);
        p.expect(std::abs(melzak_product(x.to_double()) - rep.extrapolated), 1e-6);
      }
    });
    add("oracle", "melzak-parity-shift", [](Probe& p) {
      // truncating at 2N+1 instead of 2N multiplies the partial product by a
      // factor (1+2x/(2N+1))^{2N+1} -> e^{2x}
      const double x = 0.3;
      std::vector<double> ratios;
      for (unsigned long N : {1024ul, 2048ul, 4096ul, 8192ul}) {
        const double extra = (2.0 * N + 1.0) * std::log1p(2.0 * x / (2.0 * N + 1.0));
        ratios.push_back(std::exp(extra));
      }
      for (size_t m = 1; m < ratios.size(); ++m) {
        const double f = std::pow(2.0, static_cast<double>(m));
        for (size_t i = 0; i + m < ratios.size(); ++i)
          ratios[i] = (f * ratios[i + 1] - ratios[i]) / (f - 1.0);
      }
      p.expect(std::abs(ratios[0] - std::exp(2.0 * x)), 1e-6);
    });
    add("oracle", "melzak-squared-cases", [](Probe& p) {
      const double zeta3 = hurwitz_zeta(3, 1);
      const double f4 = std::exp(0.125 - 2.0 * catalan_constant() / kPi + 3.5 * zeta3 / (kPi * kPi));
      p.expect(std::abs(melzak_squared_product(0.25) - f4), 1e-7);
      const double f5 = kPi / 4.0 * std::exp(0.5 + 7.0 * zeta3 / (kPi * kPi));
      p.expect(std::abs(melzak_squared_product(0.5, 2) - f5), 1e-7);
      p.expect(std::abs(melzak_squared_product(0.0) - 1.0), 1e-9);
      auto rep = oracle::partial_product_extrapolated(
          ProductSpec{ProductKind::melzak_squared, Rational(1, 4), 1}, 1024, 3);
      p.expect(std::abs(melzak_squared_product(0.25) - rep.extrapolated), 1e-5);
      rep = oracle::partial_product_extrapolated(
          ProductSpec{ProductKind::melzak_squared, Rational(1, 2), 2}, 1024, 3);
      p.expect(std::abs(melzak_squared_product(0.5, 2) - rep.extrapolated), 1e-5);
    });
    add("oracle", "corollary-vs-squared-closed-form", [](Probe& p) {
      for (double x : {0.1, 0.25, 0.3, 0.45})
        p.expect(std::abs(corollary_product(x) - melzak_squared_product(x)), 1e-7);
    });
    add("oracle", "dilcher-sums-vs-oracle", [](Probe& p) {
      const auto d1 = oracle::partial_sum_extrapolated(dilcher_spec(1), 512, 3);
      p.expect(std::abs(dilcher_sum(1).value() - std::log(2.0 / kPi)), 1e-9);
      p.expect(std::abs(d1.extrapolated - std::log(2.0 / kPi)), 1e-7);
      p.expect(d1.estimated_error, 1e-7);
      const auto d2 = oracle::partial_sum_extrapolated(dilcher_spec(2), 1024, 4);
      p.expect(std::abs(dilcher_sum(2).value() - d2.extrapolated), 1e-6);
      p.expect(std::abs(dilcher_sum(2).value() - d2_expression()), 1e-7);
      const auto d3 = oracle::partial_sum_extrapolated(dilcher_spec(3), 1024, 4);
      p.expect(std::abs(dilcher_sum(3).value() - d3.extrapolated), 1e-5);
      p.expect(std::abs(dilcher_sum(3).value() - d3_expression()), 1e-6);
    });
    add("oracle", "control-sums", [](Probe& p) {
      const auto ctrl = oracle::sum_sequence_extrapolated(
          [](unsigned long k) { return 1.0 / (static_cast<double>(k) * k); }, 4096, 4);
      p.expect(std::abs(ctrl.extrapolated - kPi * kPi / 6.0), 1e-10);
      SeriesSpec tel;
      tel.terms = {{Rational(1), 0, Rational(0), 1},
                   {Rational(1), 0, Rational(2), 1},
                   {Rational(-2), 0, Rational(1), 1}};
      const auto rep = oracle::partial_sum_extrapolated(tel, 512, 3);
      p.expect(std::abs(rep.extrapolated - std::log(0.5)), 1e-10);
      p.expect(rep.estimated_error, 1e-10);
      // estimated error shrinks with levels
      double prev = std::numeric_limits<double>::infinity();
      for (unsigned levels = 1; levels <= 4; ++levels) {
        const auto r = oracle::sum_sequence_extrapolated(
            [](unsigned long k) { return 1.0 / (static_cast<double>(k) * k); }, 256, levels);
        p.expect_exact(r.estimated_error <= prev + 1e-18);
        prev = r.estimated_error;
      }
    });
    add("oracle", "fd-sderiv-examples", [](Probe& p) {
      p.expect(std::abs(oracle::finite_difference_sderiv(0, 1.0, 1) + 0.5 * std::log(2.0 * kPi)),
               1e-9);
      p.expect(std::abs(oracle::finite_difference_sderiv(1, 1.0, 1) -
                        (1.0 / 12.0 - glaisher_log())),
               1e-9);
      p.expect(std::abs(oracle::finite_difference_sderiv(0, 2.0, 1) -
                        oracle::finite_difference_sderiv(0, 1.0, 1)),
               1e-10);
    });
    add("oracle", "prop1-numeric-vs-fd", [](Probe& p) {
      for (unsigned lambda : {0u, 1u})
        p.expect(std::abs(prop1_expansion(lambda, 3).evaluate(50.0) -
                          oracle::finite_difference_sderiv(lambda, 50.0, 1)),
                 1e-9);
      p.expect(std::abs(prop1_expansion(2, 2).evaluate(50.0) -
                        oracle::finite_difference_sderiv(2, 50.0, 1)),
               1e-9);
    });
    add("oracle", "zeta-power-series", [](Probe& p) {
      // the closed-form routine throws if it disagrees with the direct sum
      for (double z : {0.3, 0.5, -0.4}) p.expect_exact(std::isfinite(zeta_power_series(z, 1)));
      for (double z : {1.0 / 3.0, -0.25}) p.expect_exact(std::isfinite(zeta_power_series(z, 3)));
      p.expect(std::abs(zeta_power_series(0.0, 1)), 1e-15);
    });
    add("oracle", "series-end-to-end", [](Probe& p) {
      const auto spec = parse_series("sum(k=1..inf, log(k+1/2) - 2*log(k) + log(k-1/2))");
      const auto reg = evaluate_series(spec);
      p.expect_exact(reg.convergent);
      p.expect(std::abs(reg.constant_term.value() - std::log(2.0 / kPi)), 1e-7);
      const auto div = evaluate_series(parse_series("sum(k=1..inf, log(k))"));
      p.expect_exact(!div.convergent);
      p.expect_exact(div.divergent_profile.coeff(Rational(1), 1) == Rational(1));
    });

    // ----- acceptance -----
    add("acceptance", "criterion-01-melzak-base-case", [](Probe& p) {
      const auto t0 = std::chrono::steady_clock::now();
      const double closed = melzak_product(1.0);
      const auto rep = oracle::partial_product_extrapolated(
          ProductSpec{ProductKind::melzak_linear, Rational(1), 1}, 1024, 3);
      const auto t1 = std::chrono::steady_clock::now();
      p.expect(std::abs(closed - kPi / (2.0 * std::numbers::e)), 1e-9);
      p.expect(std::abs(closed - rep.extrapolated), 1e-6);
      // report 0 while inside the runtime budget so output stays deterministic
      const double seconds = std::chrono::duration<double>(t1 - t0).count();
      p.expect(seconds <= 1.0 ? 0.0 : seconds, 1.0);
    });
    add("acceptance", "criterion-02-melzak-particular-cases", [](Probe& p) {
      const double logA = glaisher_log();
      struct Case {
        Rational x;
        double printed;
      };
      const Case cases[] = {
          {Rational(1, 2), std::exp(6.0 * logA - 1.0 - 0.5 * std::log(kPi) - std::log(2.0) / 6.0)},
          {Rational(2), 3.0 * kPi * kPi / (16.0 * std::numbers::e * std::numbers::e)},
          {Rational(-1, 4), std::exp(3.0 * logA - catalan_constant() / kPi + 0.5 * std::log(kPi) +
                                     std::log(2.0) / 6.0 - lgamma_ref(0.25))},
      };
      for (const auto& c : cases) {
        const double closed = melzak_product(c.x.to_double());
        p.expect(std::abs(closed - c.printed), 1e-6);
        const auto rep = oracle::partial_product_extrapolated(
            ProductSpec{ProductKind::melzak_linear, c.x, 1}, 1024, 3);
        p.expect(std::abs(closed - rep.extrapolated), 1e-6);
      }
    });
    add("acceptance", "criterion-03-squared-product-cases", [](Probe& p) {
      auto rep = oracle::partial_product_extrapolated(
          ProductSpec{ProductKind::melzak_squared, Rational(1, 4), 1}, 1024, 3);
      p.expect(std::abs(melzak_squared_product(0.25) - rep.extrapolated), 1e-5);
      rep = oracle::partial_product_extrapolated(
          ProductSpec{ProductKind::melzak_squared, Rational(1, 2), 2}, 1024, 3);
      p.expect(std::abs(melzak_squared_product(0.5, 2) - rep.extrapolated), 1e-5);
      for (double x : {0.1, 0.25, 0.3, 0.45})
        p.expect(std::abs(corollary_product(x) - melzak_squared_product(x)), 1e-7);
    });
    add("acceptance", "criterion-04-dilcher-sums", [](Probe& p) {
      p.expect(std::abs(dilcher_sum(1).value() - std::log(2.0 / kPi)), 1e-9);
      p.expect(std::abs(dilcher_sum(2).value() - d2_expression()), 1e-7);
      const auto d2 = oracle::partial_sum_extrapolated(dilcher_spec(2), 1024, 4);
      p.expect(std::abs(dilcher_sum(2).value() - d2.extrapolated), 1e-6);
      p.expect(std::abs(dilcher_sum(3).value() - d3_expression()), 1e-6);
    });
    add("acceptance", "criterion-05-exact-combinatorics", [](Probe& p) {
      for (unsigned n = 1; n <= 8; ++n)
        for (unsigned k = 0; k < n; ++k) {
          const RationalPolynomial expect =
              (k == n - 1) ? RationalPolynomial::constant(Rational(1)) : RationalPolynomial{};
          p.expect_exact(orthogonality_poly(k, n) == expect);
        }
      for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 0; k < n; ++k)
          p.expect_exact(p_poly(k, n).eval(Rational(1)) == Rational(stirling_cycle(n - 1, k)));
      for (unsigned n = 0; n <= 10; ++n)
        for (unsigned k = 0; k <= n; ++k)
          p.expect_exact(q_poly(k, n).eval(Rational(0)) ==
                         Rational(stirling_subset(n + 1, k + 1)));
      const long seq1[] = {1, 16, 170, 1520, 12411, 96096};
      for (unsigned n = 3; n <= 8; ++n)
        p.expect_exact(Rational::pow(Rational(2), static_cast<long>(n) - 3) *
                           q_poly(3, n).eval(Rational(1, 2)) ==
                       Rational(seq1[n - 3]));
      const long seq2[] = {12, 60, 210, 630, 1736, 4536, 11430};
      const RationalPolynomial one_minus{Rational(1), Rational(-1)};
      for (unsigned n = 4; n <= 10; ++n)
        p.expect_exact(Rational(2) * q_poly(2, n).compose(one_minus).coeff(2) ==
                       Rational(seq2[n - 4]));
    });
    add("acceptance", "criterion-06-multiple-gamma-structure", [](Probe& p) {
      for (unsigned n = 1; n <= 3; ++n)
        for (double z : {0.5, 1.3, 2.0, 5.0})
          p.expect(std::abs(log_multiple_gamma(n + 1, z + 1.0) - log_multiple_gamma(n + 1, z) +
                            log_multiple_gamma(n, z)),
                   1e-9);
      const double z = 1.8;
      const double rhs = 2.0 * log_multiple_gamma(3, z) + (3.0 - 2.0 * z) * log_barnes_g(z) +
                         (1.0 - z) * (1.0 - z) * lgamma_ref(z);
      p.expect(std::abs(hurwitz_deriv_from_gammas(2, z) - rhs), 1e-9);
      for (unsigned n = 1; n <= 3; ++n)
        for (double zz : {0.7, 1.8}) {
          double acc = 0.0;
          for (unsigned k = 0; k < n; ++k)
            acc += p_poly(k, n).eval_double(zz) * hurwitz_deriv_from_gammas(k, zz);
          acc /= factorial(n - 1).get_d();
          p.expect(std::abs(acc - log_multiple_gamma(n, zz)), 1e-9);
        }
    });
    add("acceptance", "criterion-07-asymptotic-expansion", [](Probe& p) {
      const auto e0 = prop1_expansion(0, 3);
      p.expect_exact(e0.coeff(Rational(1), 1) == Rational(1));
      p.expect_exact(e0.coeff(Rational(0), 1) == Rational(-1, 2));
      p.expect_exact(e0.coeff(Rational(1), 0) == Rational(-1));
      const auto e1 = prop1_expansion(1, 3);
      p.expect_exact(e1.coeff(Rational(2), 1) == Rational(1, 2));
      p.expect_exact(e1.coeff(Rational(1), 1) == Rational(-1, 2));
      p.expect_exact(e1.coeff(Rational(0), 1) == Rational(1, 12));
      p.expect_exact(e1.coeff(Rational(2), 0) == Rational(-1, 4));
      p.expect_exact(e1.coeff(Rational(0), 0) == Rational(1, 12));
      for (unsigned lambda : {0u, 1u})
        p.expect(std::abs(prop1_expansion(lambda, 3).evaluate(50.0) -
                          oracle::finite_difference_sderiv(lambda, 50.0, 1)),
                 1e-9);
    });
    add("acceptance", "criterion-08-zeta-power-series", [](Probe& p) {
      // zeta_power_series throws if closed form and direct sum drift past
      // 1e-10; assert the tighter 1e-9 here explicitly
      for (double z : {0.3, 0.5, -0.4}) {
        double direct = 0.0, zp = -z;
        for (unsigned k = 2; k <= 4096; ++k) {
          zp *= -z;
          const double t = zp * hurwitz_zeta(k, 1.0) / (k + 1.0);
          direct += t;
          if (std::abs(t) < 1e-17) break;
        }
        p.expect(std::abs(zeta_power_series(z, 1) - direct), 1e-9);
      }
      for (double z : {1.0 / 3.0, -0.25}) {
        double direct = 0.0, zp = -z;
        for (unsigned k = 2; k <= 4096; ++k) {
          zp *= -z;
          const double t = zp * hurwitz_zeta(k, 1.0) / (k + 2.0);
          direct += t;
          if (std::abs(t) < 1e-17) break;
        }
        p.expect(std::abs(zeta_power_series(z, 3) - direct), 1e-9);
      }
    });
    add("acceptance", "criterion-09-reflection-and-polylog", [](Probe& p) {
      for (double z : {0.25, 0.5}) {
        const auto refl = barnes_reflection(z);
        p.expect(std::abs(std::real(refl) - (log_barnes_g(1.0 + z) - log_barnes_g(1.0 - z))),
                 1e-7);
        p.expect(gamma3_reflection(z), 1e-7);
      }
      const auto li2diff = polylog_unit_circle(2, kPi / 2) - polylog_unit_circle(2, 3 * kPi / 2);
      p.expect(std::abs(li2diff - std::complex<double>(0.0, 2.0 * catalan_constant())), 1e-9);
      const auto li3diff = polylog_unit_circle(3, 0.0) - polylog_unit_circle(3, kPi);
      p.expect(std::abs(li3diff - std::complex<double>(7.0 * hurwitz_zeta(3, 1) / 4.0, 0.0)),
               1e-9);
    });
    add("acceptance", "criterion-10-parser", [](Probe& p) {
      const char* corpus[] = {
          "sum(k=1..inf, log(k+1/2) - 2*log(k) + log(k-1/2))",
          "sum(k=1..inf, log(k))",
          "sum(k=2..inf, k^2*log(k-1/3))",
          "sum(k=1..inf, 1/2*k^1*log^2(k+3))",
          "sum(k=1..inf, 7/3*log^4(k))",
      };
      for (const char* text : corpus) {
        const auto a = parse_series(text);
        p.expect_exact(a == parse_series(unparse(a)));
      }
      check_parser_fuzz(p);
      const auto spec = parse_series("sum(k=1..inf, log(k+1/2) - 2*log(k) + log(k-1/2))");
      p.expect(std::abs(evaluate_series(spec).constant_term.value() - std::log(2.0 / kPi)), 1e-7);
    });
    return v;
  }();
  return checks;
}

}  // namespace

std::vector<std::string> available_suites() { return {"identities", "oracle", "acceptance", "all"}; }

std::vector<CheckResult> run_suite(const std::string& suite) {
  if (suite != "identities" && suite != "oracle" && suite != "acceptance" && suite != "all")
    throw std::invalid_argument("unknown suite '" + suite + "'");
  std::vector<CheckResult> results;
  for (const auto& c : registry()) {
    if (suite != "all" && suite != c.suite) continue;
    CheckResult r;
    r.suite = c.suite;
    r.name = c.name;
    try {
      Probe probe;
      c.fn(probe);
      r.pass = probe.pass();
      r.residual = probe.residual();
      r.tolerance = probe.tolerance();
    } catch (const std::exception&) {
      r.pass = false;
      r.residual = std::numeric_limits<double>::infinity();
      r.tolerance = 0.0;
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace mgamma::checks
