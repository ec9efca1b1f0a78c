#include "mgamma/asymptotic.hpp"

#include <cmath>
#include <stdexcept>

#include "mgamma/combinatorics.hpp"

namespace mgamma {

void AsymptoticExpansion::add_term(const Rational& power, unsigned logpower,
                                   const Rational& coeff) {
  if (coeff.is_zero()) return;
  const Key key{power, logpower};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational AsymptoticExpansion::coeff(const Rational& power, unsigned logpower) const {
  auto it = terms_.find({power, logpower});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<AsymptoticTerm> AsymptoticExpansion::terms() const {
  std::vector<AsymptoticTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({key.first, key.second, c});
  return out;
}

AsymptoticExpansion& AsymptoticExpansion::operator+=(const AsymptoticExpansion& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  if (o.remainder_order_ > remainder_order_) remainder_order_ = o.remainder_order_;
  return *this;
}

AsymptoticExpansion AsymptoticExpansion::scaled(const Rational& c) const {
  AsymptoticExpansion out(variable_);
  out.remainder_order_ = remainder_order_;
  if (c.is_zero()) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, c * v);
  return out;
}

double AsymptoticExpansion::evaluate(double x) const {
  if (x <= 0.0) throw std::domain_error("AsymptoticExpansion: requires x > 0");
  const double lx = std::log(x);
  double acc = 0.0;
  for (const auto& [key, c] : terms_) {
    const double p = key.first.to_double();
    acc += c.to_double() * std::pow(x, p) * std::pow(lx, static_cast<double>(key.second));
  }
  return acc;
}

AsymptoticExpansion AsymptoticExpansion::substitute_shifted(
    const Rational& q, long min_power, const std::string& new_variable) const {
  AsymptoticExpansion out(new_variable);
  out.remainder_order_ = Rational(min_power - 1);

  for (const auto& [key, c] : terms_) {
    const Rational& pow_r = key.first;
    const unsigned logpow = key.second;
    if (!pow_r.is_integer())
      throw std::logic_error("substitute_shifted: non-integer power");
    const long a = static_cast<long>(pow_r.numerator().get_si());

    // (N+q)^a as a map N-power -> coefficient, truncated at min_power.
    std::map<long, Rational> powers;
    if (q.is_zero()) {
      powers[a] = c;
    } else {
      for (long i = 0;; ++i) {
        const long p = a - i;
        if (p < min_power) break;
        const Rational bc = binomial_general(Rational(a), static_cast<unsigned>(i));
        if (bc.is_zero()) break;  // a >= 0 exhausts after a+1 terms
        powers[p] = c * bc * Rational::pow(q, i);
      }
    }

    if (logpow == 0) {
      for (const auto& [p, w] : powers) out.add_term(Rational(p), 0, w);
      continue;
    }

    // log^b(N+q) = (log N + L)^b with L = log(1 + q/N) = sum_t (-1)^{t+1} q^t / (t N^t).
    // Powers of L as maps N-power -> coefficient.
    const long depth = -min_power + static_cast<long>(std::abs(a)) + 1;
    std::map<long, Rational> L;
    for (long t = 1; t <= depth; ++t) {
      const Rational coef = Rational::pow(q, t) / Rational(t);
      L[-t] = (t % 2 == 1) ? coef : -coef;
    }
    std::vector<std::map<long, Rational>> Lpow(logpow + 1);
    Lpow[0][0] = Rational(1);
    for (unsigned u = 1; u <= logpow; ++u) {
      for (const auto& [p1, c1] : Lpow[u - 1])
        for (const auto& [p2, c2] : L) {
          if (p1 + p2 < min_power - std::abs(a)) continue;
          Lpow[u][p1 + p2] += c1 * c2;
        }
    }
    for (unsigned u = 0; u <= logpow; ++u) {
      const Rational binc(binomial(logpow, u));
      for (const auto& [pa, wa] : powers)
        for (const auto& [pl, wl] : Lpow[u]) {
          const long p = pa + pl;
          if (p < min_power) continue;
          out.add_term(Rational(p), logpow - u, binc * wa * wl);
        }
    }
  }
  return out;
}

AsymptoticExpansion AsymptoticExpansion::divergent_part() const {
  AsymptoticExpansion out(variable_);
  out.remainder_order_ = remainder_order_;
  for (const auto& [key, c] : terms_)
    if (key.first > Rational(0) || (key.first == Rational(0) && key.second > 0))
      out.terms_.emplace(key, c);
  return out;
}

Rational AsymptoticExpansion::constant_part() const { return coeff(Rational(0), 0); }

AsymptoticExpansion AsymptoticExpansion::without_vanishing_and_constant() const {
  return divergent_part();
}

std::string AsymptoticExpansion::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    const bool neg = c.is_negative();
    const Rational a = c.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string factors;
    if (key.first != Rational(0)) {
      factors = variable_;
      if (key.first != Rational(1)) factors += "^" + key.first.str();
    }
    if (key.second > 0) {
      if (!factors.empty()) factors += " ";
      factors += "log";
      if (key.second > 1) factors += "^" + std::to_string(key.second);
      factors += " " + variable_;
    }
    if (a == Rational(1) && !factors.empty()) {
      out += factors;
    } else {
      out += a.is_integer() ? a.str() : "(" + a.str() + ")";
      if (!factors.empty()) out += " " + factors;
    }
  }
  out += " + O(" + variable_ + "^" + remainder_order_.str() + ")";
  return out;
}

}  // namespace mgamma
