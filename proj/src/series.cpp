#include "mgamma/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "mgamma/combinatorics.hpp"
#include "mgamma/hurwitz.hpp"
#include "mgamma/multigamma.hpp"
#include "mgamma/stirling_poly.hpp"

namespace mgamma {

namespace {

constexpr long kProfileFloor = -5;  // keep N-powers down to N^-5
constexpr unsigned kMaxLogPower = 4;

Rational neg_pow(const Rational& z, unsigned e) { return Rational::pow(-z, static_cast<long>(e)); }

}  // namespace

void SeriesSpec::normalize() {
  for (auto& t : terms)
    if (t.coeff.is_zero()) t = SeriesTerm{Rational(0), 0, Rational(0), 0};
  std::sort(terms.begin(), terms.end(), [](const SeriesTerm& a, const SeriesTerm& b) {
    return std::tuple(a.logpower, a.power, a.shift) < std::tuple(b.logpower, b.power, b.shift);
  });
  std::vector<SeriesTerm> merged;
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().logpower == t.logpower &&
        merged.back().power == t.power && merged.back().shift == t.shift) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const SeriesTerm& t) { return t.coeff.is_zero(); }),
               merged.end());
  terms = std::move(merged);
}

void SeriesSpec::validate() const {
  if (start_index < 1) throw std::domain_error("series: start index must be >= 1");
  for (const auto& t : terms) {
    if (t.shift <= Rational(-1))
      throw std::domain_error("series: shift " + t.shift.str() + " <= -1 leaves log(k+shift) undefined");
    if (t.logpower > kMaxLogPower)
      throw std::domain_error("series: unsupported log power > 4");
    if (t.power > 20) throw std::domain_error("series: unsupported power k^p with p > 20");
  }
}

double SeriesSpec::summand(unsigned long k) const {
  double acc = 0.0;
  for (const auto& t : terms) {
    double v = t.coeff.to_double();
    if (t.power > 0) v *= std::pow(static_cast<double>(k), static_cast<double>(t.power));
    if (t.logpower > 0)
      v *= std::pow(std::log(static_cast<double>(k) + t.shift.to_double()),
                    static_cast<double>(t.logpower));
    acc += v;
  }
  return acc;
}

bool operator==(const SeriesSpec& a, const SeriesSpec& b) {
  if (a.start_index != b.start_index || a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i) {
    const auto& x = a.terms[i];
    const auto& y = b.terms[i];
    if (x.coeff != y.coeff || x.power != y.power || x.shift != y.shift ||
        x.logpower != y.logpower)
      return false;
  }
  return true;
}

RegularizedResult evaluate_series(const SeriesSpec& spec_in) {
  SeriesSpec spec = spec_in;
  spec.normalize();
  spec.validate();

  ClosedForm cf;
  AsymptoticExpansion profile("N");
  profile.set_remainder_order(Rational(kProfileFloor - 1));

  for (const auto& term : spec.terms) {
    const Rational q = term.shift + Rational(1);
    const unsigned m = term.logpower;
    const Rational msign((m % 2 == 0) ? 1 : -1);
    // k^p = ((k+shift) - shift)^p, then
    // sum_{k=1}^{N} (k+shift)^j log^m(k+shift) =
    //   (-1)^m [ zeta^{(m)}(-j, q) - zeta^{(m)}(-j, N+q) ]
    for (unsigned j = 0; j <= term.power; ++j) {
      const Rational w = term.coeff * Rational(binomial(term.power, j)) *
                         neg_pow(term.shift, term.power - j);
      if (w.is_zero()) continue;
      if (m == 0) {
        // zeta(-j, q) = -B_{j+1}(q)/(j+1), an exact rational
        const Rational v = -bernoulli_poly(j + 1).eval(q) / Rational(static_cast<long>(j) + 1);
        cf.add_rational(w * v);
      } else {
        cf.add(w * msign, ZetaDerivAtom{m, j, q});
      }
      const unsigned r = (j + 7 + 1) / 2;  // expansion complete down to N^-6
      const auto in_n = zeta_sderiv_expansion(m, j, r).substitute_shifted(q, kProfileFloor, "N");
      profile += in_n.scaled(-w * msign);
    }
  }

  // indices below start_index, subtracted as explicit log monomials
  for (const auto& term : spec.terms) {
    for (unsigned long k = 1; k < spec.start_index; ++k) {
      Monomial m;
      m.weight = -term.coeff * Rational::pow(Rational(static_cast<long>(k)),
                                             static_cast<long>(term.power));
      if (term.logpower > 0)
        m.factors.push_back({LogAtom{Rational(static_cast<long>(k)) + term.shift}, term.logpower});
      cf.add_monomial(std::move(m));
    }
  }

  RegularizedResult out;
  cf.add_rational(profile.constant_part());
  out.divergent_profile = profile.divergent_part();
  out.convergent = out.divergent_profile.empty();
  cf.simplify();
  out.constant_term = convert_zeta_derivs_to_gammas(cf);
  return out;
}

RegularizedResult phi_regularized(unsigned p, const Rational& z) {
  if (z <= Rational(-1)) throw std::domain_error("phi_regularized: requires z > -1");
  SeriesSpec spec;
  spec.terms.push_back({Rational(1), p, z, 1});
  return evaluate_series(spec);
}

ClosedForm convert_zeta_derivs_to_gammas(const ClosedForm& cf) {
  ClosedForm out;
  for (const auto& mono : cf.monomials()) {
    const ZetaDerivAtom* atom = nullptr;
    if (mono.factors.size() == 1 && mono.factors[0].second == 1)
      atom = std::get_if<ZetaDerivAtom>(&mono.factors[0].first);
    if (atom == nullptr || atom->order != 1 || atom->q == Rational(1)) {
      out.add_monomial(mono);
      continue;
    }
    // zeta'(-j, q) = zeta'(-j) + sum_k (-1)^{j+k} k! Q_{k,j}(q) log Gamma_{k+1}(q)
    const unsigned j = atom->lambda;
    const Rational q = atom->q;
    out.add(mono.weight, ZetaDerivAtom{1, j, Rational(1)});
    for (unsigned k = 0; k <= j; ++k) {
      Rational c = Rational(factorial(k)) * q_poly(k, j).eval(q);
      if ((j + k) % 2 == 1) c = -c;
      out.add(mono.weight * c, LogGammaAtom{k + 1, q});
    }
  }
  out.simplify();
  return out;
}

SeriesSpec dilcher_spec(unsigned k) {
  if (k < 1 || k > kMaxLogPower) throw std::domain_error("dilcher_spec: requires 1 <= k <= 4");
  SeriesSpec spec;
  spec.terms.push_back({Rational(1), 0, Rational(1, 2), k});
  spec.terms.push_back({Rational(-2), 0, Rational(0), k});
  spec.terms.push_back({Rational(1), 0, Rational(-1, 2), k});
  return spec;
}

ClosedForm dilcher_sum(unsigned k) {
  if (k < 1 || k > kMaxLogPower) throw std::domain_error("dilcher_sum: requires 1 <= k <= 4");
  // D_k = 2(-1)^k [ -log^k 2 - zeta^{(k)}(0) + sum_{j=1}^{k-1} C(k,j) zeta^{(k-j)}(0) log^j 2 ]
  const Rational two_signed((k % 2 == 0) ? 2 : -2);
  ClosedForm cf;
  cf.add(-two_signed, LogAtom{Rational(2)}, k);
  cf.add(-two_signed, ZetaDerivAtom{k, 0, Rational(1)});
  for (unsigned j = 1; j < k; ++j) {
    Monomial m;
    m.weight = two_signed * Rational(binomial(k, j));
    m.factors.push_back({ZetaDerivAtom{k - j, 0, Rational(1)}, 1});
    m.factors.push_back({LogAtom{Rational(2)}, j});
    cf.add_monomial(std::move(m));
  }
  cf.simplify();
  return cf;
}

double zeta_power_series(double z, unsigned r) {
  if (std::abs(z) >= 1.0) throw std::domain_error("zeta_power_series: requires |z| < 1");
  if (r != 1 && r != 3) throw std::domain_error("zeta_power_series: unsupported r (use 1 or 3)");
  if (z == 0.0) return 0.0;

  // r = 1: sum (-z)^k zeta(k)/(k+1), the Barnes-function identity
  // r = 3: sum (-z)^k zeta(k)/(k+2), the triple-gamma identity
  const double denom_offset = (r == 1) ? 1.0 : 2.0;
  double direct = 0.0;
  double zp = -z;  // (-z)^k
  for (unsigned k = 2; k <= 4096; ++k) {
    zp *= -z;
    const double t = zp * hurwitz_zeta(static_cast<double>(k), 1.0) / (k + denom_offset);
    direct += t;
    if (std::abs(t) < 1e-17 * (std::abs(direct) + 1.0)) break;
  }

  const double gamma = stieltjes(0);
  const double log2pi = std::log(2.0 * std::numbers::pi);
  double closed;
  if (r == 1) {
    closed = log_barnes_g(z + 1.0) / z + 0.5 * z * (gamma + 1.0) - 0.5 * log2pi + 0.5;
  } else {
    closed = 2.0 * log_multiple_gamma(3, z + 1.0) / (z * z) + log_barnes_g(z + 1.0) / (z * z) +
             (6.0 * z * z + 3.0 * z - 1.0) / (12.0 * z) + gamma * z / 3.0 - 0.5 * log2pi -
             2.0 * zeta_prime_at_neg(1) / z;
  }
  if (std::abs(closed - direct) > 1e-10)
    throw std::runtime_error("zeta_power_series: closed form and direct sum disagree by " +
                             std::to_string(std::abs(closed - direct)));
  return closed;
}

}  // namespace mgamma
