#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace csm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Bad input: malformed partition, label outside the box, wrong plan shape.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical invariant failed at runtime (non-integral Bott sum,
// engines disagreeing, non-unipotent matrix). Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// num/den; the two-argument cpp_rational constructor in Boost 1.74 rejects
// negative denominators, so the sign is moved to the numerator first.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvariantViolation("division by zero");
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

inline Integer to_integer(const Rational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1)
    throw InvariantViolation(std::string(what) + ": expected an integer, got " + q.str());
  return boost::multiprecision::numerator(q);
}

// Binomial coefficient with the combinatorial convention: zero whenever
// k < 0, n < 0 or k > n.
inline Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Fraction-free (Bareiss) determinant.
inline Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (m[p][p] == 0) {
      std::size_t swap = p + 1;
      while (swap < n && m[swap][p] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[p], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
      }
    }
    prev = m[p][p];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace csm
