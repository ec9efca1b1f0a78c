#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mgamma/hurwitz.hpp"
#include "mgamma/multigamma.hpp"
#include "mgamma/products.hpp"

using namespace mgamma;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
}  // namespace

TEST_CASE("melzak product closed form") {
  CHECK(std::abs(melzak_product(1.0) - kPi / (2.0 * kE)) < 1e-9);
  const double logA = glaisher_log();
  const double f1 = std::exp(6.0 * logA - 1.0 - 0.5 * std::log(kPi) - std::log(2.0) / 6.0);
  CHECK(std::abs(melzak_product(0.5) - f1) < 1e-8);
  CHECK(std::abs(melzak_product(2.0) - 3.0 * kPi * kPi / (16.0 * kE * kE)) < 1e-8);
  const double f3 = std::exp(3.0 * logA - catalan_constant() / kPi + 0.5 * std::log(kPi) +
                             std::log(2.0) / 6.0 - std::lgamma(0.25));
  CHECK(std::abs(melzak_product(-0.25) - f3) < 1e-8);
  CHECK_THROWS_AS(melzak_product(-0.5), std::domain_error);
  CHECK_THROWS_AS(melzak_product(-2.0), std::domain_error);
}

TEST_CASE("melzak product matches its truncated-product oracle") {
  // direct partial products, log domain, truncated at even 2N
  const auto truncated = [](double x, unsigned long twoN) {
    double ls = 0.0;
    for (unsigned long k = 1; k <= twoN; ++k) {
      const double s = (k % 2 == 0) ? -1.0 : 1.0;  // -(-1)^k
      ls += s * static_cast<double>(k) * std::log1p(2.0 * x / static_cast<double>(k));
    }
    return std::exp(ls);
  };
  for (double x : {0.1, 0.25, 0.45, 1.0, 2.0}) {
    // Richardson on the log partial products
    std::vector<double> logs;
    for (unsigned long n : {2048ul, 4096ul, 8192ul, 16384ul})
      logs.push_back(std::log(truncated(x, n)));
    for (size_t m = 1; m < logs.size(); ++m) {
      const double f = std::pow(2.0, static_cast<double>(m));
      for (size_t i = 0; i + m < logs.size(); ++i)
        logs[i] = (f * logs[i + 1] - logs[i]) / (f - 1.0);
    }
    CHECK(std::abs(melzak_product(x) - std::exp(logs[0])) < 1e-6);
  }
}

TEST_CASE("squared melzak product closed form") {
  const double zeta3 = hurwitz_zeta(3.0, 1.0);
  const double f4 =
      std::exp(0.125 - 2.0 * catalan_constant() / kPi + 3.5 * zeta3 / (kPi * kPi));
  CHECK(std::abs(melzak_squared_product(0.25) - f4) < 1e-7);
  const double f5 = kPi / 4.0 * std::exp(0.5 + 7.0 * zeta3 / (kPi * kPi));
  CHECK(std::abs(melzak_squared_product(0.5, 2) - f5) < 1e-7);
  CHECK(std::abs(melzak_squared_product(0.0) - 1.0) < 1e-9);
  // even in x
  for (double x : {0.1, 0.3, 0.45})
    CHECK(std::abs(melzak_squared_product(x) - melzak_squared_product(-x)) < 1e-10);
  // vanishing factor must be excluded explicitly
  CHECK_THROWS_AS(melzak_squared_product(0.5), std::domain_error);
  CHECK_THROWS_AS(melzak_squared_product(-0.5), std::domain_error);
  CHECK_THROWS_AS(melzak_squared_product(1.2), std::domain_error);
}

TEST_CASE("polylog on the unit circle") {
  const auto li2_1 = polylog_unit_circle(2, 0.0);
  CHECK(std::abs(li2_1 - std::complex<double>(kPi * kPi / 6.0, 0.0)) < 1e-10);
  const auto li2diff = polylog_unit_circle(2, kPi / 2) - polylog_unit_circle(2, 3 * kPi / 2);
  CHECK(std::abs(li2diff - std::complex<double>(0.0, 2.0 * catalan_constant())) < 1e-9);
  const auto li3diff = polylog_unit_circle(3, 0.0) - polylog_unit_circle(3, kPi);
  CHECK(std::abs(li3diff - std::complex<double>(7.0 * hurwitz_zeta(3.0, 1.0) / 4.0, 0.0)) <
        1e-10);
  // Li_3(i) - Li_3(-i) = i pi^3/16
  const auto li3i = polylog_unit_circle(3, kPi / 2) - polylog_unit_circle(3, 3 * kPi / 2);
  CHECK(std::abs(li3i - std::complex<double>(0.0, kPi * kPi * kPi / 16.0)) < 1e-10);
  // generic angle against the closed Fourier forms of the real/imag parts
  const double th = 1.0;
  const auto li2 = polylog_unit_circle(2, th);
  CHECK(std::abs(std::real(li2) - (kPi * kPi / 6.0 - kPi * th / 2.0 + th * th / 4.0)) < 1e-10);
  const auto li3 = polylog_unit_circle(3, th);
  CHECK(std::abs(std::imag(li3) -
                 (kPi * kPi * th / 6.0 - kPi * th * th / 4.0 + th * th * th / 12.0)) < 1e-10);
  CHECK_THROWS_AS(polylog_unit_circle(4, 1.0), std::domain_error);
  CHECK_THROWS_AS(polylog_unit_circle(1, 1.0), std::domain_error);
}

TEST_CASE("polylog route of the squared product") {
  for (double x : {0.1, 0.25, 0.3, 0.45})
    CHECK(std::abs(corollary_product(x) - melzak_squared_product(x)) < 1e-7);
  // x = 1/2 limit equals the start = 2 product
  CHECK(std::abs(corollary_product(0.5) - melzak_squared_product(0.5, 2)) < 1e-7);
  CHECK_THROWS_AS(corollary_product(0.0), std::domain_error);
  CHECK_THROWS_AS(corollary_product(0.7), std::domain_error);
}

TEST_CASE("barnes reflection formula") {
  for (double z : {0.3, 0.5, 0.25}) {
    const auto refl = barnes_reflection(z);
    CHECK(std::abs(std::imag(refl)) < 1e-9);
    CHECK(std::abs(std::real(refl) - (log_barnes_g(1.0 + z) - log_barnes_g(1.0 - z))) < 1e-8);
  }
  // z -> 0: log(G(1)/G(1)) = 0
  CHECK(std::abs(barnes_reflection(1e-6)) < 1e-5);
  CHECK_THROWS_AS(barnes_reflection(0.0), std::domain_error);
  CHECK_THROWS_AS(barnes_reflection(1.0), std::domain_error);
}

TEST_CASE("triple gamma reflection residuals") {
  CHECK(gamma3_reflection(0.25) < 1e-7);
  CHECK(gamma3_reflection(0.5) < 1e-7);
  CHECK(gamma3_reflection(0.01) < 1e-7);
  CHECK_THROWS_AS(gamma3_reflection(1.5), std::domain_error);
}

TEST_CASE("catalan constant") {
  CHECK(std::abs(catalan_constant() - 0.91596559417721901505) < 1e-12);
  const auto diff = polylog_unit_circle(2, kPi / 2) - polylog_unit_circle(2, 3 * kPi / 2);
  CHECK(std::abs(2.0 * catalan_constant() - std::imag(diff)) < 1e-9);
}

TEST_CASE("product spec closed-form dispatch") {
  CHECK(product_closed_form({ProductKind::melzak_linear, Rational(1), 1}) ==
        melzak_product(1.0));
  CHECK(product_closed_form({ProductKind::melzak_squared, Rational(1, 2), 2}) ==
        melzak_squared_product(0.5, 2));
  CHECK_THROWS_AS(product_closed_form({ProductKind::melzak_linear, Rational(1), 2}),
                  std::domain_error);
}
