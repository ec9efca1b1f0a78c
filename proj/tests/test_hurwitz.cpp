#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mgamma/hurwitz.hpp"
#include "mgamma/multigamma.hpp"
#include "mgamma/oracle.hpp"

using namespace mgamma;

namespace {
constexpr double kPi = std::numbers::pi;
const double kLog2Pi = std::log(2.0 * kPi);
}  // namespace

TEST_CASE("hurwitz zeta known values") {
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - kPi * kPi / 6.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(2.0, 0.5) - kPi * kPi / 2.0) < 1e-12);
  for (double z : {0.4, 1.0, 3.7, 9.2})
    CHECK(std::abs(hurwitz_zeta(0.0, z) - (0.5 - z)) < 1e-12);
  // zeta(-1) = -1/12, zeta(-2) = 0 via the Bernoulli values
  CHECK(std::abs(hurwitz_zeta(-1.0, 1.0) + 1.0 / 12.0) < 1e-15);
  CHECK(std::abs(hurwitz_zeta(-2.0, 1.0)) < 1e-15);
  // the terminating form must agree with the general evaluator nearby
  CHECK(std::abs(hurwitz_zeta(-2.0, 1.5) - hurwitz_zeta(-2.0 + 1e-9, 1.5)) < 1e-7);
}

TEST_CASE("hurwitz zeta domain errors") {
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, -3.0), std::domain_error);
}

TEST_CASE("hurwitz zeta shift identity") {
  // the comparison scale includes the magnitude of the shifted head sum,
  // which is what binary64 cancellation acts on for s < 0
  for (double s : {-3.5, -1.0, 0.5, 2.0, 17.0})
    for (double z : {0.3, 1.0, 7.0}) {
      const double lhs = hurwitz_zeta(s, z) - hurwitz_zeta(s, z + 1.0);
      const double rhs = std::pow(z, -s);
      const double head = std::pow(z + 25.0, std::max(1.0 - s, 1.0)) / std::max(1.0 - s, 1.0);
      const double scale = 1.0 + std::abs(hurwitz_zeta(s, z)) + std::abs(rhs) + head;
      CHECK(std::abs(lhs - rhs) / scale < 1e-13);
    }
}

TEST_CASE("prop1 expansion reproduces the classical asymptotics exactly") {
  const auto e0 = prop1_expansion(0, 3);
  CHECK(e0.coeff(Rational(1), 1) == Rational(1));
  CHECK(e0.coeff(Rational(0), 1) == Rational(-1, 2));
  CHECK(e0.coeff(Rational(1), 0) == Rational(-1));
  CHECK(e0.coeff(Rational(0), 0) == Rational(0));

  const auto e1 = prop1_expansion(1, 3);
  CHECK(e1.coeff(Rational(2), 1) == Rational(1, 2));
  CHECK(e1.coeff(Rational(1), 1) == Rational(-1, 2));
  CHECK(e1.coeff(Rational(0), 1) == Rational(1, 12));
  CHECK(e1.coeff(Rational(2), 0) == Rational(-1, 4));
  CHECK(e1.coeff(Rational(1), 0) == Rational(0));
  CHECK(e1.coeff(Rational(0), 0) == Rational(1, 12));
  CHECK_THROWS_AS(prop1_expansion(1, 0), std::domain_error);
}

TEST_CASE("prop1 expansion validated against the finite-difference oracle") {
  // at r = 2 the first omitted term is B_6/6! * 4 * 50^-3 = 1.06e-9, so the
  // residual sits just above 1e-9 by the expansion's own remainder
  CHECK(std::abs(prop1_expansion(2, 2).evaluate(50.0) -
                 oracle::finite_difference_sderiv(2, 50.0, 1)) < 2e-9);
  CHECK(std::abs(prop1_expansion(2, 4).evaluate(50.0) -
                 oracle::finite_difference_sderiv(2, 50.0, 1)) < 1e-9);
  CHECK(std::abs(prop1_expansion(0, 3).evaluate(50.0) -
                 oracle::finite_difference_sderiv(0, 50.0, 1)) < 1e-9);
}

TEST_CASE("prop1 truncation error shrinks with r") {
  const double truth = zeta_sderiv_neg(1, 20.0);
  double prev = 1e300;
  for (unsigned r = 1; r <= 4; ++r) {
    const double err = std::abs(prop1_expansion(1, r).evaluate(20.0) - truth);
    CHECK(err <= prev + 1e-18);
    prev = err;
  }
}

TEST_CASE("expansion engine at m = 0 gives the Bernoulli polynomial values") {
  // zeta(-lambda, z) = -B_{lambda+1}(z)/(lambda+1): the m = 0 expansion is a
  // terminating series and must evaluate exactly
  for (unsigned lambda = 0; lambda <= 4; ++lambda) {
    const auto e = zeta_sderiv_expansion(0, lambda, 6);
    for (double z : {31.0, 44.5})
      CHECK(std::abs(e.evaluate(z) - hurwitz_zeta(-static_cast<double>(lambda), z)) <
            1e-9 * (1.0 + std::abs(e.evaluate(z))));
  }
}

TEST_CASE("zeta sderiv at negative integers") {
  CHECK(std::abs(zeta_sderiv_neg(0, 1.0) + 0.5 * kLog2Pi) < 1e-10);
  // zeta'(-1) = 1/12 - log A
  CHECK(std::abs(zeta_sderiv_neg(1, 1.0) - (1.0 / 12.0 - glaisher_log())) < 1e-10);
  // shift identity: zeta'(0, z+1) - zeta'(0, z) = log z
  CHECK(std::abs(zeta_sderiv_neg(0, 4.0) - zeta_sderiv_neg(0, 3.0) - std::log(3.0)) < 1e-12);
  CHECK_THROWS_AS(zeta_sderiv_neg(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(zeta_sderiv_neg(2, -1.0), std::domain_error);
}

TEST_CASE("zeta sderiv agrees with the finite-difference oracle") {
  for (unsigned lambda = 0; lambda <= 4; ++lambda)
    for (double z : {0.5, 1.0, 2.0, 10.0})
      CHECK(std::abs(zeta_sderiv_neg(lambda, z) -
                     oracle::finite_difference_sderiv(lambda, z, 1)) < 1e-8);
}

TEST_CASE("k-th derivative at s = 0") {
  for (double z : {0.5, 1.0, 5.0})
    CHECK(std::abs(zeta_kth_deriv_at0(1, z) - zeta_sderiv_neg(0, z)) < 1e-10);
  // combination identity at q = 1/2
  for (unsigned k : {2u, 3u}) {
    double rhs = -0.5 * std::pow(std::log(2.0), k);
    for (unsigned j = 1; j < k; ++j)
      rhs += binomial(k, j).get_d() * zeta_kth_deriv_at0(k - j, 1.0) * std::pow(std::log(2.0), j);
    CHECK(std::abs(zeta_kth_deriv_at0(k, 0.5) - rhs) < 1e-7);
  }
  CHECK(std::abs(zeta_kth_deriv_at0(1, 2.0) - zeta_kth_deriv_at0(1, 1.0)) < 1e-10);
  CHECK(zeta_kth_deriv_at0(0, 0.7) == hurwitz_zeta(0.0, 0.7));
  CHECK_THROWS_AS(zeta_kth_deriv_at0(5, 1.0), std::domain_error);
  CHECK_THROWS_AS(zeta_kth_deriv_at0(2, 0.0), std::domain_error);
  // reference: zeta''(0) and zeta'''(0) against the finite-difference oracle
  CHECK(std::abs(zeta_kth_deriv_at0(2, 1.0) - oracle::finite_difference_sderiv(0, 1.0, 2)) < 1e-8);
}

TEST_CASE("k-th derivative asymptotic expansion") {
  // remainder is O(1/N); for k = 1 the next term is exactly (1/12)/N
  CHECK(std::abs(kth_deriv_asymptotic(1).evaluate(200.0) - zeta_kth_deriv_at0(1, 200.0)) < 5e-4);
  CHECK(std::abs(kth_deriv_asymptotic(1).evaluate(2000.0) - zeta_kth_deriv_at0(1, 2000.0)) < 5e-5);
  CHECK(std::abs(kth_deriv_asymptotic(2).evaluate(100.0) - zeta_kth_deriv_at0(2, 100.0)) < 1e-2);
  CHECK(std::abs(kth_deriv_asymptotic(2).evaluate(1000.0) - zeta_kth_deriv_at0(2, 1000.0)) < 2e-3);
  CHECK_THROWS_AS(kth_deriv_asymptotic(0), std::domain_error);
  // the three-point combination cancels every growing term exactly
  for (unsigned k = 1; k <= 3; ++k) {
    auto combo =
        kth_deriv_asymptotic(k).substitute_shifted(Rational(1), -3, "N").scaled(Rational(2));
    combo +=
        kth_deriv_asymptotic(k).substitute_shifted(Rational(1, 2), -3, "N").scaled(Rational(-1));
    combo +=
        kth_deriv_asymptotic(k).substitute_shifted(Rational(3, 2), -3, "N").scaled(Rational(-1));
    CHECK(combo.divergent_part().empty());
  }
}

TEST_CASE("stieltjes constants") {
  CHECK(std::abs(stieltjes(0) - 0.57721566490153286) < 1e-10);
  CHECK(std::abs(stieltjes(1) + 0.072815845483676725) < 1e-9);
  CHECK(std::abs(stieltjes(2) + 0.0096903631928723184) < 1e-9);
  CHECK_THROWS_AS(stieltjes(3), std::domain_error);
  // Laurent reconstruction near the pole
  const double s = 1.01;
  const double laurent = 1.0 / (s - 1.0) + stieltjes(0) - stieltjes(1) * (s - 1.0) +
                         0.5 * stieltjes(2) * (s - 1.0) * (s - 1.0);
  CHECK(std::abs(laurent - hurwitz_zeta(s, 1.0)) < 1e-6);
}

TEST_CASE("asymptotic expansion printing") {
  CHECK(prop1_expansion(0, 1).str() ==
        "z log z - z - (1/2) log z + (1/12) z^-1 + O(z^-3)");
}
