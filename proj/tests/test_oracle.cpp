#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mgamma/hurwitz.hpp"
#include "mgamma/multigamma.hpp"
#include "mgamma/oracle.hpp"
#include "mgamma/products.hpp"
#include "mgamma/series.hpp"

using namespace mgamma;

namespace {
constexpr double kPi = std::numbers::pi;

SeriesSpec telescoping() {
  SeriesSpec tel;
  tel.terms = {{Rational(1), 0, Rational(0), 1},
               {Rational(1), 0, Rational(2), 1},
               {Rational(-2), 0, Rational(1), 1}};
  return tel;
}
}  // namespace

TEST_CASE("serial and parallel kernels agree") {
  const auto f = [](unsigned long k) {
    const double kd = static_cast<double>(k);
    return std::log1p(1.0 / (kd * kd)) * ((k % 2 == 0) ? 1.0 : -1.0);
  };
  const double serial = oracle::sum_terms_serial(f, 1, 300000);
  const double parallel = oracle::sum_terms_parallel(f, 1, 300000);
  CHECK(std::abs(serial - parallel) < 1e-14);

#ifdef _OPENMP
  // deterministic for any thread count: the chunk layout is fixed
  const int saved = omp_get_max_threads();
  double values[3];
  int idx = 0;
  for (int threads : {1, 2, 7}) {
    omp_set_num_threads(threads);
    values[idx++] = oracle::sum_terms_parallel(f, 1, 300000);
  }
  omp_set_num_threads(saved);
  CHECK(values[0] == values[1]);
  CHECK(values[1] == values[2]);
#endif
}

TEST_CASE("control sums reach their classical values") {
  const auto rep = oracle::sum_sequence_extrapolated(
      [](unsigned long k) { return 1.0 / (static_cast<double>(k) * k); }, 4096, 4);
  CHECK(std::abs(rep.extrapolated - kPi * kPi / 6.0) < 1e-10);
  CHECK(rep.raw_value_at_N < rep.extrapolated);  // partial sums increase to the limit

  // estimated error shrinks as levels increase
  double prev = 1e300;
  for (unsigned levels = 1; levels <= 4; ++levels) {
    const auto r = oracle::sum_sequence_extrapolated(
        [](unsigned long k) { return 1.0 / (static_cast<double>(k) * k); }, 256, levels);
    CHECK(r.estimated_error <= prev + 1e-18);
    prev = r.estimated_error;
  }
}

TEST_CASE("series oracle on convergent specs") {
  const auto tel = oracle::partial_sum_extrapolated(telescoping(), 512, 3);
  CHECK(std::abs(tel.extrapolated - std::log(0.5)) < 1e-10);
  CHECK(tel.estimated_error < 1e-10);

  const auto d1 = oracle::partial_sum_extrapolated(dilcher_spec(1), 512, 3);
  CHECK(std::abs(d1.extrapolated - std::log(2.0 / kPi)) < 1e-7);
  CHECK(d1.estimated_error < 1e-7);
}

TEST_CASE("series oracle refuses divergent specs") {
  SeriesSpec divergent;
  divergent.terms = {{Rational(1), 0, Rational(0), 1}};
  CHECK_THROWS_AS(oracle::partial_sum_extrapolated(divergent, 512, 3), std::domain_error);
}

TEST_CASE("series oracle validates its preconditions") {
  CHECK_THROWS_AS(oracle::partial_sum_extrapolated(telescoping(), 32, 3), std::domain_error);
  CHECK_THROWS_AS(oracle::partial_sum_extrapolated(telescoping(), 512, 6), std::domain_error);
}

TEST_CASE("diverging partial sums raise overflow") {
  CHECK_THROWS_AS(oracle::sum_sequence_extrapolated(
                      [](unsigned long k) { return std::exp(static_cast<double>(k)); }, 1024, 2),
                  std::overflow_error);
}

TEST_CASE("product oracle approaches the closed forms") {
  const auto m1 = oracle::partial_product_extrapolated(
      {ProductKind::melzak_linear, Rational(1), 1}, 1024, 3);
  CHECK(std::abs(m1.extrapolated - kPi / (2.0 * std::numbers::e)) < 1e-6);
  CHECK(m1.estimated_error < 1e-5);

  const auto m2 = oracle::partial_product_extrapolated(
      {ProductKind::melzak_squared, Rational(1, 4), 1}, 1024, 3);
  CHECK(std::abs(m2.extrapolated - melzak_squared_product(0.25)) < 1e-5);

  const auto m3 = oracle::partial_product_extrapolated(
      {ProductKind::melzak_squared, Rational(1, 2), 2}, 1024, 3);
  CHECK(std::abs(m3.extrapolated - melzak_squared_product(0.5, 2)) < 1e-5);
}

TEST_CASE("product oracle rejects vanishing factors") {
  CHECK_THROWS_AS(oracle::partial_product_extrapolated(
                      {ProductKind::melzak_squared, Rational(1, 2), 1}, 512, 2),
                  std::domain_error);
}

TEST_CASE("finite difference derivative oracle") {
  CHECK(std::abs(oracle::finite_difference_sderiv(0, 1.0, 1) + 0.5 * std::log(2.0 * kPi)) < 1e-9);
  CHECK(std::abs(oracle::finite_difference_sderiv(1, 1.0, 1) - (1.0 / 12.0 - glaisher_log())) <
        1e-9);
  CHECK(std::abs(oracle::finite_difference_sderiv(0, 2.0, 1) -
                 oracle::finite_difference_sderiv(0, 1.0, 1)) < 1e-10);
  // order 2 against the analytic evaluator
  CHECK(std::abs(oracle::finite_difference_sderiv(0, 1.0, 2) - zeta_kth_deriv_at0(2, 1.0)) <
        1e-8);
  CHECK(std::abs(oracle::finite_difference_sderiv(0, 1.0, 3) - zeta_kth_deriv_at0(3, 1.0)) <
        1e-6);
  CHECK_THROWS_AS(oracle::finite_difference_sderiv(0, 0.0, 1), std::domain_error);
  CHECK_THROWS_AS(oracle::finite_difference_sderiv(0, 1.0, 5), std::domain_error);
}
