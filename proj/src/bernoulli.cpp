#include "charnum/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace charnum {

namespace {

// Computes B_0..B_n via the defining recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, B_0 = 1.
std::vector<Rational> bernoulli_table(int n) {
  std::vector<Rational> b;
  b.reserve(n + 1);
  b.push_back(Rational(1));
  for (int m = 1; m <= n; ++m) {
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
    b.push_back(-acc / Rational(binomial(m + 1, m)));
  }
  return b;
}

}  // namespace

Rational bernoulli(int n) {
  if (n <= 0 || n % 2 != 0)
    throw std::invalid_argument("bernoulli index must be a positive even integer");
  static std::mutex mu;
  static std::vector<Rational> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(cache.size()) <= n) cache = bernoulli_table(n + 8);
  return cache[n];
}

}  // namespace charnum
