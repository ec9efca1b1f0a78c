#include "mgamma/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "mgamma/hurwitz.hpp"
#include "mgamma/multigamma.hpp"
#include "mgamma/products.hpp"

namespace mgamma {

namespace {

// (kind, a, b, q-string) used for canonical ordering and equality of factors
std::tuple<int, unsigned, unsigned, std::string> primitive_key(const Primitive& p) {
  if (const auto* z = std::get_if<ZetaDerivAtom>(&p)) return {0, z->order, z->lambda, z->q.str()};
  if (const auto* g = std::get_if<LogGammaAtom>(&p)) return {1, g->n, 0, g->q.str()};
  if (const auto* l = std::get_if<LogAtom>(&p)) return {2, 0, 0, l->q.str()};
  return {3, static_cast<unsigned>(std::get<NamedConstant>(p)), 0, ""};
}

void canonicalize(Monomial& m) {
  std::sort(m.factors.begin(), m.factors.end(), [](const auto& a, const auto& b) {
    return primitive_key(a.first) < primitive_key(b.first);
  });
  std::vector<std::pair<Primitive, unsigned>> merged;
  for (auto& f : m.factors) {
    if (!merged.empty() && primitive_key(merged.back().first) == primitive_key(f.first))
      merged.back().second += f.second;
    else
      merged.push_back(f);
  }
  m.factors = std::move(merged);
}

bool same_factors(const Monomial& a, const Monomial& b) {
  if (a.factors.size() != b.factors.size()) return false;
  for (size_t i = 0; i < a.factors.size(); ++i) {
    if (a.factors[i].second != b.factors[i].second) return false;
    if (primitive_key(a.factors[i].first) != primitive_key(b.factors[i].first)) return false;
  }
  return true;
}

std::string superscript(unsigned order) {
  if (order == 1) return "'";
  if (order == 2) return "''";
  if (order == 3) return "'''";
  return "^(" + std::to_string(order) + ")";
}

}  // namespace

double evaluate_primitive(const Primitive& p) {
  if (const auto* z = std::get_if<ZetaDerivAtom>(&p))
    return zeta_sderiv_analytic(z->order, z->lambda, z->q.to_double());
  if (const auto* g = std::get_if<LogGammaAtom>(&p))
    return log_multiple_gamma(g->n, g->q.to_double());
  if (const auto* l = std::get_if<LogAtom>(&p)) return std::log(l->q.to_double());
  switch (std::get<NamedConstant>(p)) {
    case NamedConstant::euler_gamma: return stieltjes(0);
    case NamedConstant::stieltjes_gamma1: return stieltjes(1);
    case NamedConstant::log_two_pi: return std::log(2.0 * std::numbers::pi);
    case NamedConstant::zeta_three: return hurwitz_zeta(3.0, 1.0);
    case NamedConstant::catalan: return catalan_constant();
    case NamedConstant::log_glaisher: return glaisher_log();
  }
  return 0.0;
}

std::string primitive_str(const Primitive& p) {
  if (const auto* z = std::get_if<ZetaDerivAtom>(&p)) {
    std::string arg = "-" + std::to_string(z->lambda);
    if (z->lambda == 0) arg = "0";
    if (z->q == Rational(1)) return "zeta" + superscript(z->order) + "(" + arg + ")";
    return "zeta" + superscript(z->order) + "(" + arg + ", " + z->q.str() + ")";
  }
  if (const auto* g = std::get_if<LogGammaAtom>(&p)) {
    if (g->n == 1) return "logGamma(" + g->q.str() + ")";
    if (g->n == 2) return "logGamma_2(" + g->q.str() + ")";
    return "logGamma_" + std::to_string(g->n) + "(" + g->q.str() + ")";
  }
  if (const auto* l = std::get_if<LogAtom>(&p)) return "log(" + l->q.str() + ")";
  switch (std::get<NamedConstant>(p)) {
    case NamedConstant::euler_gamma: return "gamma";
    case NamedConstant::stieltjes_gamma1: return "gamma_1";
    case NamedConstant::log_two_pi: return "log(2*pi)";
    case NamedConstant::zeta_three: return "zeta(3)";
    case NamedConstant::catalan: return "Catalan";
    case NamedConstant::log_glaisher: return "log(A)";
  }
  return "?";
}

void ClosedForm::add_rational(const Rational& r) {
  if (r.is_zero()) return;
  terms_.push_back({r, {}});
}

void ClosedForm::add(const Rational& weight, const Primitive& p, unsigned exponent) {
  if (weight.is_zero()) return;
  terms_.push_back({weight, {{p, exponent}}});
}

void ClosedForm::add_monomial(Monomial m) {
  if (m.weight.is_zero()) return;
  terms_.push_back(std::move(m));
}

void ClosedForm::add_scaled(const ClosedForm& other, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const auto& m : other.terms_) {
    Monomial copy = m;
    copy.weight *= scale;
    terms_.push_back(std::move(copy));
  }
}

void ClosedForm::simplify() {
  std::vector<Monomial> work = std::move(terms_);
  terms_.clear();

  // factor-level rewrites; may split a monomial in two (zeta'(-1) case)
  std::vector<Monomial> rewritten;
  while (!work.empty()) {
    Monomial m = std::move(work.back());
    work.pop_back();
    bool vanished = false;
    bool split = false;
    for (size_t i = 0; i < m.factors.size() && !vanished && !split; ++i) {
      auto& [p, e] = m.factors[i];
      if (const auto* l = std::get_if<LogAtom>(&p)) {
        if (l->q == Rational(1)) vanished = true;
        continue;
      }
      if (const auto* g = std::get_if<LogGammaAtom>(&p)) {
        if (g->q == Rational(1)) {
          vanished = true;
        } else if (g->n == 1 && g->q.is_integer() && g->q > Rational(0)) {
          const unsigned long qi = g->q.numerator().get_ui();
          if (qi <= 2) {
            vanished = true;  // logGamma(1) = logGamma(2) = 0
          } else {
            p = LogAtom{Rational(factorial(static_cast<unsigned>(qi - 1)))};
          }
        }
        continue;
      }
      if (const auto* z = std::get_if<ZetaDerivAtom>(&p)) {
        if (z->order == 1 && z->q == Rational(1)) {
          if (z->lambda == 0) {
            // zeta'(0) = -log(2 pi)/2
            m.weight *= Rational::pow(Rational(-1, 2), static_cast<long>(e));
            p = NamedConstant::log_two_pi;
          } else if (z->lambda == 1 && e == 1) {
            // zeta'(-1) = 1/12 - log A
            Monomial a = m;
            a.factors.erase(a.factors.begin() + static_cast<long>(i));
            a.weight *= Rational(1, 12);
            Monomial b = m;
            b.factors[i].first = NamedConstant::log_glaisher;
            b.weight = -b.weight;
            work.push_back(std::move(a));
            work.push_back(std::move(b));
            split = true;
          }
        }
        continue;
      }
    }
    if (!vanished && !split) rewritten.push_back(std::move(m));
  }

  for (auto& m : rewritten) canonicalize(m);
  // merge equal factor products
  std::sort(rewritten.begin(), rewritten.end(), [](const Monomial& a, const Monomial& b) {
    if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
    for (size_t i = 0; i < a.factors.size(); ++i) {
      const auto ka = primitive_key(a.factors[i].first);
      const auto kb = primitive_key(b.factors[i].first);
      if (ka != kb) return ka < kb;
      if (a.factors[i].second != b.factors[i].second)
        return a.factors[i].second < b.factors[i].second;
    }
    return false;
  });
  for (auto& m : rewritten) {
    if (!terms_.empty() && same_factors(terms_.back(), m))
      terms_.back().weight += m.weight;
    else
      terms_.push_back(std::move(m));
  }
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Monomial& m) { return m.weight.is_zero(); }),
               terms_.end());
}

double ClosedForm::value() const {
  double acc = 0.0;
  for (const auto& m : terms_) {
    double t = m.weight.to_double();
    for (const auto& [p, e] : m.factors)
      t *= std::pow(evaluate_primitive(p), static_cast<double>(e));
    acc += t;
  }
  return acc;
}

std::string ClosedForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : terms_) {
    const bool neg = m.weight.is_negative();
    const Rational a = m.weight.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string factors;
    for (const auto& [p, e] : m.factors) {
      if (!factors.empty()) factors += "*";
      factors += primitive_str(p);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += a.str();
    } else if (a == Rational(1)) {
      out += factors;
    } else {
      out += (a.is_integer() ? a.str() : "(" + a.str() + ")") + "*" + factors;
    }
  }
  return out;
}

}  // namespace mgamma
