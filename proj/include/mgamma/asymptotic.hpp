#ifndef MGAMMA_ASYMPTOTIC_HPP
#define MGAMMA_ASYMPTOTIC_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mgamma/rational.hpp"

namespace mgamma {

struct AsymptoticTerm {
  Rational power;
  unsigned logpower = 0;
  Rational coeff;
};

/// Formal sum of terms c * x^a * log^b x with exact rational c, rational a and
/// natural b, plus a remainder order: the expansion is accurate up to
/// O(x^remainder_order) as x -> infinity.  Terms are kept sorted by descending
/// power, then descending logpower; zero coefficients are dropped.
class AsymptoticExpansion {
 public:
  explicit AsymptoticExpansion(std::string variable = "z")
      : variable_(std::move(variable)), remainder_order_(0) {}

  const std::string& variable() const { return variable_; }
  const Rational& remainder_order() const { return remainder_order_; }
  void set_remainder_order(const Rational& r) { remainder_order_ = r; }

  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Rational& power, unsigned logpower, const Rational& coeff);
  Rational coeff(const Rational& power, unsigned logpower) const;

  std::vector<AsymptoticTerm> terms() const;

  AsymptoticExpansion& operator+=(const AsymptoticExpansion& o);
  AsymptoticExpansion scaled(const Rational& c) const;

  double evaluate(double x) const;

  /// Substitute x = N + q and re-expand around N -> infinity, keeping terms
  /// with N-power >= min_power.  All powers must be integers.
  AsymptoticExpansion substitute_shifted(const Rational& q, long min_power,
                                         const std::string& new_variable = "N") const;

  /// Terms that do not vanish as x -> infinity: power > 0, or power == 0 with
  /// logpower > 0.
  AsymptoticExpansion divergent_part() const;
  /// Coefficient of x^0 log^0 x.
  Rational constant_part() const;
  /// Everything with power < 0 removed, constant removed: used for profiles.
  AsymptoticExpansion without_vanishing_and_constant() const;

  std::string str() const;

 private:
  using Key = std::pair<Rational, unsigned>;  // (power, logpower)
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.first != b.first) return a.first > b.first;
      return a.second > b.second;
    }
  };
  std::string variable_;
  Rational remainder_order_;
  std::map<Key, Rational, KeyLess> terms_;
};

}  // namespace mgamma

#endif  // MGAMMA_ASYMPTOTIC_HPP
