#ifndef MGAMMA_RATIONAL_HPP
#define MGAMMA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mgamma {

using BigInt = mpz_class;

/// Arbitrary-precision rational, kept canonical: gcd(num, den) = 1, den > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) { canonical(); }
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) { canonical(); }

  const BigInt numerator() const { return BigInt(v_.get_num()); }
  const BigInt denominator() const { return BigInt(v_.get_den()); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_negative() const { return sgn(v_) < 0; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// base^exp with integer exponent; exp < 0 requires base != 0.
  static Rational pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base.is_zero()) {
      if (exp < 0) throw std::domain_error("Rational: 0 to a negative power");
      return Rational(0);
    }
    BigInt num, den;
    const auto e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_pow_ui(num.get_mpz_t(), mpz_class(base.v_.get_num()).get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), mpz_class(base.v_.get_den()).get_mpz_t(), e);
    return exp > 0 ? Rational(num, den) : Rational(den, num);
  }

  Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  void canonical() {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  mpq_class v_;
};

inline BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace mgamma

#endif  // MGAMMA_RATIONAL_HPP
