#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace cycleforge {

// Exact scalars. Rational is kept in lowest terms with a positive
// denominator (zero is 0/1); str() renders "p" or "p/q" in that form.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument " + std::to_string(n));
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is a binomial coefficient after every step
  }
  return r;
}

// (a)_k = a(a-1)...(a-k+1) over the integers; (a)_0 = 1.
inline Integer falling_factorial_int(const Integer& a, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= a - i;
  return r;
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline Integer to_integer(const Rational& r) {
  if (!is_integral(r))
    throw std::logic_error("expected an integral value, got " + r.str());
  return numerator(r);
}

// Parses an optionally signed base-10 integer or "p/q". Any representation
// is accepted and normalized; "2/4" yields 1/2.
inline Rational parse_rational(const std::string& text) {
  const auto bad = [&] { throw std::invalid_argument("bad rational literal '" + text + "'"); };
  if (text.empty()) bad();
  std::size_t i = text[0] == '-' ? 1 : 0;
  std::size_t slash = std::string::npos;
  if (i == text.size()) bad();
  for (; i < text.size(); ++i) {
    if (text[i] == '/' && slash == std::string::npos && i + 1 < text.size()) {
      slash = i;
    } else if (text[i] < '0' || text[i] > '9') {
      bad();
    }
  }
  if (slash != std::string::npos) {
    Integer den(text.substr(slash + 1));
    if (den == 0) bad();
    return Rational(Integer(text.substr(0, slash)), den);
  }
  return Rational(Integer(text));
}

}  // namespace cycleforge
