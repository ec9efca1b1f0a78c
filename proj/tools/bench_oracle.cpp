// Compares the serial and OpenMP partial-sum kernels on the brute-force
// oracle workloads and reports timings plus the accumulated difference.

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mgamma/oracle.hpp"
#include "mgamma/series.hpp"

namespace {

double time_of(const char* name, double& result, const std::function<double()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  result = fn();
  const auto t1 = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  std::printf("%-28s %10.2f ms  -> %.15g\n", name, ms, result);
  return ms;
}

}  // namespace

int main() {
  using namespace mgamma;

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled (serial build)\n");
#endif

  const SeriesSpec d2 = dilcher_spec(2);
  const auto summand = [&d2](unsigned long k) { return d2.summand(k); };
  const unsigned long N = 1ul << 24;

  std::printf("\nsum of %lu Dilcher D_2 summands\n", N);
  double serial = 0.0, parallel = 0.0;
  const double t_serial =
      time_of("serial reference", serial, [&] { return oracle::sum_terms_serial(summand, 1, N); });
  const double t_parallel = time_of("chunked parallel kernel", parallel,
                                    [&] { return oracle::sum_terms_parallel(summand, 1, N); });
  std::printf("difference: %.3e   speedup: %.2fx\n", std::abs(serial - parallel),
              t_serial / t_parallel);

  std::printf("\nMelzak product logs, 2N = %lu\n", N);
  const auto log_factor = [](unsigned long k) {
    const double kd = static_cast<double>(k);
    return (k % 2 == 0 ? -1.0 : 1.0) * kd * std::log1p(2.0 / kd);
  };
  const double tp_serial =
      time_of("serial reference", serial, [&] { return oracle::sum_terms_serial(log_factor, 1, N); });
  const double tp_parallel = time_of("chunked parallel kernel", parallel,
                                     [&] { return oracle::sum_terms_parallel(log_factor, 1, N); });
  std::printf("difference: %.3e   speedup: %.2fx\n", std::abs(serial - parallel),
              tp_serial / tp_parallel);
  return 0;
}
