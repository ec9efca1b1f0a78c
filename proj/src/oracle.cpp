#include "mgamma/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mgamma/hurwitz.hpp"

namespace mgamma::oracle {

namespace {

constexpr unsigned long kChunk = 8192;

struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

/// Richardson triangle for a sequence sampled at N, 2N, 4N, ..., assuming an
/// error expansion in integer powers of 1/N.  Pass m eliminates the 1/N^m
/// term; last_diff receives the change produced by the final pass.
double richardson(std::vector<double> v, double* last_diff) {
  if (v.size() <= 1) {
    if (last_diff != nullptr) *last_diff = 0.0;
    return v.empty() ? 0.0 : v[0];
  }
  double previous_front = v[0];
  for (size_t m = 1; m < v.size(); ++m) {
    const double f = std::pow(2.0, static_cast<double>(m));
    for (size_t i = 0; i + m < v.size(); ++i) v[i] = (f * v[i + 1] - v[i]) / (f - 1.0);
    if (m + 1 == v.size()) {
      if (last_diff != nullptr) *last_diff = std::abs(v[0] - previous_front);
    } else {
      previous_front = v[0];
    }
  }
  return v[0];
}

}  // namespace

double sum_terms_serial(const TermFn& f, unsigned long lo, unsigned long hi) {
  KahanSum acc;
  for (unsigned long k = lo; k <= hi; ++k) acc.add(f(k));
  return acc.sum;
}

double sum_terms_parallel(const TermFn& f, unsigned long lo, unsigned long hi) {
  if (hi < lo) return 0.0;
  const unsigned long n = hi - lo + 1;
  const unsigned long chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
    const unsigned long a = lo + static_cast<unsigned long>(c) * kChunk;
    const unsigned long b = std::min(hi, a + kChunk - 1);
    KahanSum acc;
    for (unsigned long k = a; k <= b; ++k) acc.add(f(k));
    partial[static_cast<size_t>(c)] = acc.sum;
  }
  KahanSum total;
  for (double p : partial) total.add(p);
  return total.sum;
}

ExtrapolationReport sum_sequence_extrapolated(const TermFn& f, unsigned long N, unsigned levels,
                                              unsigned long start) {
  std::vector<double> values;
  values.reserve(levels + 1);
  double acc = sum_terms_parallel(f, start, N);
  values.push_back(acc);
  unsigned long upper = N;
  for (unsigned l = 1; l <= levels; ++l) {
    acc += sum_terms_parallel(f, upper + 1, 2 * upper);
    upper *= 2;
    values.push_back(acc);
  }
  for (double v : values)
    if (!std::isfinite(v)) throw std::overflow_error("oracle: partial sums overflow");

  ExtrapolationReport rep;
  rep.raw_value_at_N = values.front();
  rep.N = N;
  rep.levels = levels;
  rep.extrapolated = richardson(values, &rep.estimated_error);
  return rep;
}

ExtrapolationReport partial_sum_extrapolated(const SeriesSpec& spec, unsigned long N,
                                             unsigned levels) {
  if (N < 64) throw std::domain_error("oracle: requires N >= 64");
  if (levels > 5) throw std::domain_error("oracle: requires levels <= 5");
  const auto reg = evaluate_series(spec);
  if (!reg.convergent)
    throw std::domain_error("oracle: refusing to extrapolate a divergent series (profile: " +
                            reg.divergent_profile.str() + ")");
  return sum_sequence_extrapolated([&spec](unsigned long k) { return spec.summand(k); }, N,
                                   levels, spec.start_index);
}

ExtrapolationReport partial_product_extrapolated(const ProductSpec& spec, unsigned long N,
                                                 unsigned levels) {
  if (N < 64) throw std::domain_error("oracle: requires N >= 64");
  if (levels > 5) throw std::domain_error("oracle: requires levels <= 5");
  const double x = spec.x.to_double();
  const bool squared = spec.kind == ProductKind::melzak_squared;
  const auto log_factor = [x, squared](unsigned long k) {
    const double kd = static_cast<double>(k);
    const double base = squared ? 1.0 - 4.0 * x * x / (kd * kd) : 1.0 + 2.0 * x / kd;
    if (base <= 0.0) throw std::domain_error("oracle: zero or negative product factor");
    const double expo = squared ? kd * kd : kd;
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // -(-1)^k
    return sign * expo * std::log(base);
  };

  // truncate at even indices 2N, 4N, ...
  auto rep = sum_sequence_extrapolated(log_factor, 2 * N, levels, spec.start_index);
  rep.N = N;
  const double log_err = rep.estimated_error;
  rep.raw_value_at_N = std::exp(rep.raw_value_at_N);
  rep.extrapolated = std::exp(rep.extrapolated);
  rep.estimated_error = rep.extrapolated * log_err;
  return rep;
}

double finite_difference_sderiv(unsigned lambda, double z, unsigned order) {
  if (z <= 0.0) throw std::domain_error("finite_difference_sderiv: requires z > 0");
  if (order < 1 || order > 4)
    throw std::domain_error("finite_difference_sderiv: requires order in 1..4");
  const double s0 = -static_cast<double>(lambda);
  const auto stencil = [&](double h) {
    const auto f = [&](double t) { return hurwitz_zeta(s0 + t, z); };
    switch (order) {
      case 1: return (f(h) - f(-h)) / (2.0 * h);
      case 2: return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
      case 3: return (f(2.0 * h) - 2.0 * f(h) + 2.0 * f(-h) - f(-2.0 * h)) / (2.0 * h * h * h);
      default:
        return (f(2.0 * h) - 4.0 * f(h) + 6.0 * f(0.0) - 4.0 * f(-h) + f(-2.0 * h)) /
               (h * h * h * h);
    }
  };
  // Steps h0, h0/2, h0/4, h0/8 with Richardson ratio 4 per level (the error
  // expansion is in h^2).  The zeta samples near s = -lambda carry an absolute
  // error ~eps * (z+24)^{lambda+1} from the shifted head sum, which the
  // stencil divides by h; larger lambda therefore needs a coarser base step
  // (the function is smooth there, the pole at s = 1 being far away).
  const double h0 = std::ldexp(1.0, static_cast<int>(std::min(lambda, 4u)) - 6);
  std::vector<double> d{stencil(h0), stencil(h0 / 2), stencil(h0 / 4), stencil(h0 / 8)};
  for (size_t m = 1; m < d.size(); ++m) {
    const double f = std::pow(4.0, static_cast<double>(m));
    for (size_t i = 0; i + m < d.size(); ++i) d[i] = (f * d[i + 1] - d[i]) / (f - 1.0);
  }
  return d[0];
}

}  // namespace mgamma::oracle
