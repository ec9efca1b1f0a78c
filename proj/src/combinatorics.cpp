#include "mgamma/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace mgamma {

namespace {

// Row-by-row memoized triangle for either Stirling recurrence.  Guarded by a
// mutex so concurrent first use is safe.
class StirlingTable {
 public:
  // cycle = true: [n k] = (n-1)[n-1 k] + [n-1 k-1]
  // cycle = false: {n k} = k{n-1 k} + {n-1 k-1}
  explicit StirlingTable(bool cycle) : cycle_(cycle) { rows_.push_back({BigInt(1)}); }

  BigInt get(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    std::lock_guard<std::mutex> lock(mu_);
    while (rows_.size() <= n) {
      const auto& prev = rows_.back();
      const unsigned m = static_cast<unsigned>(rows_.size());
      std::vector<BigInt> row(m + 1);
      row[0] = BigInt(0);
      for (unsigned j = 1; j <= m; ++j) {
        const BigInt upper = (j < prev.size()) ? prev[j] : BigInt(0);
        const BigInt mult = cycle_ ? BigInt(m - 1) : BigInt(j);
        row[j] = mult * upper + prev[j - 1];
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  bool cycle_;
  std::mutex mu_;
  std::vector<std::vector<BigInt>> rows_;
};

}  // namespace

BigInt stirling_cycle(unsigned n, unsigned k) {
  static StirlingTable table(true);
  return table.get(n, k);
}

BigInt stirling_subset(unsigned n, unsigned k) {
  static StirlingTable table(false);
  return table.get(n, k);
}

Rational bernoulli_number(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  if (n >= 3 && n % 2 == 1) return Rational(0);
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
  while (cache.size() <= n) {
    const unsigned m = static_cast<unsigned>(cache.size());
    Rational acc(0);
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
    cache.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
  return cache[n];
}

RationalPolynomial bernoulli_poly(unsigned n) {
  // B_n(z) = sum_k C(n, k) B_{n-k} z^k
  std::vector<Rational> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k) coeffs[k] = Rational(binomial(n, k)) * bernoulli_number(n - k);
  return RationalPolynomial(std::move(coeffs));
}

Rational pochhammer(const Rational& x, unsigned k) {
  Rational acc(1);
  Rational term = x;
  for (unsigned i = 0; i < k; ++i) {
    acc *= term;
    term += Rational(1);
  }
  return acc;
}

Rational binomial_general(const Rational& z, unsigned k) {
  Rational acc(1);
  Rational term = z;
  for (unsigned i = 0; i < k; ++i) {
    acc *= term;
    term -= Rational(1);
  }
  return acc / Rational(factorial(k));
}

RationalPolynomial binomial_poly(unsigned k) {
  RationalPolynomial p = RationalPolynomial::constant(Rational(1));
  for (unsigned i = 0; i < k; ++i)
    p = p * RationalPolynomial{Rational(-static_cast<long>(i)), Rational(1)};
  return Rational(BigInt(1), factorial(k)) * p;
}

}  // namespace mgamma
