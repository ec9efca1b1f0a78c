#include "mgamma/hurwitz.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mgamma/combinatorics.hpp"

namespace mgamma {

namespace {

constexpr double kShiftThreshold = 24.0;  // apply the tail only at z+M >= this
constexpr unsigned kBernoulliPairs = 12;

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

double bernoulli_over_fact(unsigned j) {
  // B_{2j} / (2j)!
  static const std::vector<double> cache = [] {
    std::vector<double> v;
    for (unsigned t = 1; t <= 16; ++t)
      v.push_back((bernoulli_number(2 * t) / Rational(factorial(2 * t))).to_double());
    return v;
  }();
  return cache.at(j - 1);
}

}  // namespace

void ZetaPoint::validate() const {
  if (z <= 0.0) throw std::domain_error("hurwitz_zeta: requires z > 0");
  if (s == 1.0) throw std::domain_error("hurwitz_zeta: pole at s = 1");
}

double hurwitz_zeta(double s, double z) {
  ZetaPoint{s, z}.validate();
  // at non-positive integer s the tail terminates analytically:
  // zeta(-n, z) = -B_{n+1}(z)/(n+1), free of the head/tail cancellation
  if (s <= 0.0 && s == std::floor(s) && s >= -64.0) {
    const unsigned n = static_cast<unsigned>(-s);
    return -bernoulli_poly(n + 1).eval_double(z) / (n + 1.0);
  }
  const unsigned shift = z >= kShiftThreshold
                             ? 0
                             : static_cast<unsigned>(std::ceil(kShiftThreshold - z));
  KahanSum head;
  for (unsigned k = 0; k < shift; ++k) head.add(std::pow(k + z, -s));

  const double Z = z + shift;
  const double lZ = std::log(Z);
  KahanSum tail;
  tail.add(std::exp((1.0 - s) * lZ) / (s - 1.0));
  tail.add(0.5 * std::exp(-s * lZ));
  // sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * Z^{1-s-2j}
  double poch = s;
  for (unsigned j = 1; j <= kBernoulliPairs; ++j) {
    const double term = bernoulli_over_fact(j) * poch * std::exp((1.0 - s - 2.0 * j) * lZ);
    tail.add(term);
    if (std::abs(term) < 1e-18 * (std::abs(tail.sum) + 1e-300)) break;
    poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
  }
  return head.sum + tail.sum;
}

AsymptoticExpansion zeta_sderiv_expansion(unsigned m, unsigned lambda, unsigned r) {
  AsymptoticExpansion exp("z");
  const Rational lam1(static_cast<long>(lambda) + 1);

  // d^m/ds^m [ z^{1-s} / (s-1) ] at s = -lambda
  for (unsigned i = 0; i <= m; ++i) {
    Rational c = Rational(binomial(m, i)) * Rational(factorial(m - i));
    c /= Rational::pow(lam1, static_cast<long>(m - i + 1));
    if (i % 2 == 0) c = -c;
    exp.add_term(lam1, i, c);
  }

  // d^m/ds^m [ z^{-s} / 2 ]
  {
    Rational c(1, 2);
    if (m % 2 == 1) c = -c;
    exp.add_term(Rational(static_cast<long>(lambda)), m, c);
  }

  // d^m/ds^m [ B_{2j}/(2j)! * (s)_{2j-1} * z^{1-s-2j} ], with
  // (s)_n = sum_t [n t] s^t, so the i-th derivative at s = -lambda is
  // sum_t [n t] t!/(t-i)! (-lambda)^{t-i}.
  const Rational neg_lam(-static_cast<long>(lambda));
  for (unsigned j = 1; j <= r; ++j) {
    const unsigned n = 2 * j - 1;
    const Rational bj = bernoulli_number(2 * j) / Rational(factorial(2 * j));
    for (unsigned i = 0; i <= m; ++i) {
      Rational pd(0);
      for (unsigned t = i; t <= n; ++t) {
        const Rational fall(factorial(t), factorial(t - i));
        pd += Rational(stirling_cycle(n, t)) * fall * Rational::pow(neg_lam, t - i);
      }
      Rational c = bj * Rational(binomial(m, i)) * pd;
      if ((m - i) % 2 == 1) c = -c;
      exp.add_term(Rational(static_cast<long>(lambda) + 1 - 2 * static_cast<long>(j)), m - i, c);
    }
  }

  exp.set_remainder_order(Rational(static_cast<long>(lambda) - 1 - 2 * static_cast<long>(r)));
  return exp;
}

AsymptoticExpansion prop1_expansion(unsigned lambda, unsigned r) {
  if (r < 1) throw std::domain_error("prop1_expansion: requires r >= 1");
  return zeta_sderiv_expansion(1, lambda, r);
}

AsymptoticExpansion kth_deriv_asymptotic(unsigned k) {
  if (k < 1) throw std::domain_error("kth_deriv_asymptotic: requires k >= 1");
  auto exp = zeta_sderiv_expansion(k, 0, 0);
  exp.set_remainder_order(Rational(-1));
  return exp;
}

double zeta_sderiv_analytic(unsigned m, unsigned lambda, double z) {
  if (z <= 0.0) throw std::domain_error("zeta_sderiv_analytic: requires z > 0");

  double shift_target = kShiftThreshold;
  for (int attempt = 0;; ++attempt) {
    const unsigned shift =
        z >= shift_target ? 0 : static_cast<unsigned>(std::ceil(shift_target - z));
    const double Z = z + shift;
    const double lZ = std::log(Z);

    KahanSum acc;
    // sum_{k<shift} d^m/ds^m (k+z)^{-s} |_{s=-lambda} = (-1)^m log^m(k+z) (k+z)^lambda
    for (unsigned k = 0; k < shift; ++k) {
      const double x = k + z;
      double t = std::pow(x, static_cast<double>(lambda)) *
                 std::pow(std::log(x), static_cast<double>(m));
      if (m % 2 == 1) t = -t;
      acc.add(t);
    }

    // leading tail pieces
    const double Zl1 = std::pow(Z, lambda + 1.0);
    for (unsigned i = 0; i <= m; ++i) {
      double c = binomial(m, i).get_d() * factorial(m - i).get_d() /
                 std::pow(lambda + 1.0, static_cast<double>(m - i + 1));
      if (i % 2 == 0) c = -c;
      acc.add(c * Zl1 * std::pow(lZ, static_cast<double>(i)));
    }
    {
      double c = 0.5 * std::pow(Z, static_cast<double>(lambda)) *
                 std::pow(lZ, static_cast<double>(m));
      if (m % 2 == 1) c = -c;
      acc.add(c);
    }

    // Bernoulli tail, truncated at the smallest term.
    const double scale = std::abs(acc.sum) + Zl1 * (lZ + 1.0) + 1.0;
    const double tol = 1e-16 * scale;
    // derivative table d[i] = d^i/ds^i (s)_{len} at s=-lambda, extended two
    // factors per j step
    std::vector<double> d(m + 1, 0.0);
    d[0] = 1.0;
    unsigned len = 0;
    bool converged = false;
    double prev_mag = HUGE_VAL;
    for (unsigned j = 1; j <= 14; ++j) {
      while (len < 2 * j - 1) {
        const double g = -static_cast<double>(lambda) + len;
        for (unsigned i = m + 1; i-- > 0;)
          d[i] = d[i] * g + (i > 0 ? i * d[i - 1] : 0.0);
        ++len;
      }
      const double zpow = std::pow(Z, static_cast<double>(lambda) + 1.0 - 2.0 * j);
      double term = 0.0;
      for (unsigned i = 0; i <= m; ++i) {
        double c = binomial(m, i).get_d() * d[i] * std::pow(lZ, static_cast<double>(m - i));
        if ((m - i) % 2 == 1) c = -c;
        term += c;
      }
      term *= bernoulli_over_fact(j) * zpow;
      const double mag = std::abs(term);
      if (mag > prev_mag && mag > tol) break;  // series bottomed out too early
      acc.add(term);
      prev_mag = mag;
      if (mag <= tol) {
        converged = true;
        break;
      }
    }
    if (converged || attempt >= 6) return acc.sum;
    shift_target *= 1.6;
  }
}

double zeta_sderiv_neg(unsigned lambda, double z) {
  if (z <= 0.0) throw std::domain_error("zeta_sderiv_neg: requires z > 0");
  return zeta_sderiv_analytic(1, lambda, z);
}

double zeta_kth_deriv_at0(unsigned k, double z) {
  if (z <= 0.0) throw std::domain_error("zeta_kth_deriv_at0: requires z > 0");
  if (k == 0) return hurwitz_zeta(0.0, z);
  if (k > 4) throw std::domain_error("zeta_kth_deriv_at0: unsupported k > 4");
  return zeta_sderiv_analytic(k, 0, z);
}

double stieltjes(unsigned k) {
  if (k > 2) throw std::domain_error("stieltjes: unsupported k > 2");
  // gamma_k = sum_{j<=n} log^k j / j - log^{k+1} n/(k+1) - f(n)/2
  //           - sum_m B_{2m}/(2m)! f^{(2m-1)}(n) + O(f^{(2M+1)}(n))
  const unsigned n = 1u << 16;
  const double ln = std::log(static_cast<double>(n));

  KahanSum sum;
  for (unsigned j = 1; j <= n; ++j) {
    const double x = static_cast<double>(j);
    sum.add(std::pow(std::log(x), static_cast<double>(k)) / x);
  }
  double gamma = sum.sum - std::pow(ln, k + 1.0) / (k + 1.0);
  gamma -= 0.5 * std::pow(ln, static_cast<double>(k)) / n;

  // symbolic derivatives of f(x) = log^k x / x over the basis log^b x / x^a
  struct Basis {
    unsigned a;
    unsigned b;
    double c;
  };
  std::vector<Basis> f{{1, k, 1.0}};
  auto differentiate = [](const std::vector<Basis>& g) {
    std::vector<Basis> out;
    for (const auto& t : g) {
      if (t.b > 0) out.push_back({t.a + 1, t.b - 1, t.c * t.b});
      out.push_back({t.a + 1, t.b, -t.c * static_cast<double>(t.a)});
    }
    return out;
  };
  auto eval = [&](const std::vector<Basis>& g) {
    double acc = 0.0;
    for (const auto& t : g)
      acc += t.c * std::pow(ln, static_cast<double>(t.b)) /
             std::pow(static_cast<double>(n), static_cast<double>(t.a));
    return acc;
  };
  unsigned order = 0;
  for (unsigned mterm = 1; mterm <= 4; ++mterm) {
    while (order < 2 * mterm - 1) {
      f = differentiate(f);
      ++order;
    }
    gamma -= bernoulli_over_fact(mterm) * eval(f);
  }
  return gamma;
}

}  // namespace mgamma
