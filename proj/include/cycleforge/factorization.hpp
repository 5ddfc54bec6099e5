#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace cycleforge {

enum class ProbRoute { Closed, BoccaraSum, Series, Brute };

inline const char* route_name(ProbRoute r) {
  switch (r) {
    case ProbRoute::Closed: return "closed";
    case ProbRoute::BoccaraSum: return "boccara";
    case ProbRoute::Series: return "series";
    case ProbRoute::Brute: return "brute";
  }
  return "?";
}

// Probability that k marked points share a cycle of a product of two
// uniform n-cycles, with the route that computed it.
struct ProbabilityResult {
  int n;
  int k;
  Rational value;
  ProbRoute route;
};

inline ProbabilityResult make_probability(int n, int k, Rational value, ProbRoute route) {
  if (value < 0 || value > 1)
    throw std::logic_error("probability out of [0,1]: " + value.str() + " at n = " + std::to_string(n));
  return {n, k, std::move(value), route};
}

namespace detail {

// prod_i (x^{lambda_i} - (x-1)^{lambda_i}) as integer coefficients,
// ascending. Each factor has degree lambda_i - 1, so the product has
// degree n - l(lambda).
inline std::vector<Integer> boccara_integrand(const Partition& lambda) {
  std::vector<Integer> acc{1};
  for (int part : lambda.parts()) {
    std::vector<Integer> factor(static_cast<std::size_t>(part));
    for (int j = 0; j < part; ++j) {
      // x^part - (x-1)^part: coefficient of x^j is -C(part, j)(-1)^{part-j}.
      const Integer b = binomial(part, j);
      factor[static_cast<std::size_t>(j)] = (part - j) % 2 == 0 ? Integer(-b) : b;
    }
    std::vector<Integer> next(acc.size() + factor.size() - 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += acc[i] * factor[j];
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace detail

/*
 * Number of ordered pairs of n-cycles whose product is a fixed permutation
 * of cycle type lambda:
 *
 *   (n-1)! * integral over [0,1] of prod_i (x^{lambda_i} - (x-1)^{lambda_i}).
 *
 * The value is a count, so the arithmetic must land on a nonnegative
 * integer; anything else is a hard failure. It vanishes exactly when
 * n - l(lambda) is odd (a product of two n-cycles is even).
 */
inline Integer boccara_count(const Partition& lambda) {
  const int n = lambda.n();
  if (n < 1) throw std::invalid_argument("boccara_count: empty partition");
  const std::vector<Integer> integrand = detail::boccara_integrand(lambda);
  Rational integral;
  for (std::size_t i = 0; i < integrand.size(); ++i)
    integral += Rational(integrand[i], Integer(i + 1));
  const Rational count = Rational(factorial(n - 1)) * integral;
  if (!is_integral(count) || count < 0)
    throw std::logic_error("boccara_count" + lambda.to_string() + ": expected a nonnegative integer, got " + count.str());
  return numerator(count);
}

// Probability that k fixed marked points lie in one cycle of a permutation
// of type lambda: sum_i (lambda_i)_k / (n)_k.
inline Rational same_cycle_prob_given_type(const Partition& lambda, int k) {
  const int n = lambda.n();
  if (k > n) throw std::invalid_argument("same_cycle_prob_given_type: k = " + std::to_string(k) +
                                         " exceeds n = " + std::to_string(n));
  if (k < 2) throw std::invalid_argument("same_cycle_prob_given_type: k must be >= 2");
  Integer num = 0;
  for (int part : lambda.parts()) num += falling_factorial_int(part, k);
  return Rational(num, falling_factorial_int(n, k));
}

// The partition-sum route:
//   pi = (1/(n-1)!^2) sum over lambda of |K_lambda| b_lambda q_lambda^{(k)},
// where b_lambda is the pair count above and q_lambda^{(k)} the same-cycle
// probability. Exact for every k >= 2.
inline ProbabilityResult pi_sum(int n, int k) {
  if (n < 2 || k < 2 || k > n) throw std::invalid_argument("pi_sum: need 2 <= k <= n");
  Rational total;
  for (const Partition& lambda : partitions_of(n)) {
    const Integer b = boccara_count(lambda);
    if (b == 0) continue;
    total += Rational(class_size(lambda) * b) * same_cycle_prob_given_type(lambda, k);
  }
  const Integer pairs = factorial(n - 1) * factorial(n - 1);
  return make_probability(n, k, total / Rational(pairs), ProbRoute::BoccaraSum);
}

// Closed forms, k = 2 and k = 3 only.
inline ProbabilityResult pi_closed(int n, int k) {
  if (k == 2) {
    if (n < 2) throw std::invalid_argument("pi_closed: k = 2 needs n >= 2");
    Rational v(1, 2);
    if (n % 2 == 0) v -= Rational(2, Integer(n - 1) * (n + 2));
    return make_probability(n, k, v, ProbRoute::Closed);
  }
  if (k == 3) {
    if (n < 3) throw std::invalid_argument("pi_closed: k = 3 needs n >= 3");
    Rational v(1, 3);
    if (n % 2 == 0) v -= Rational(3, Integer(n - 1) * (n + 2));
    else v += Rational(1, Integer(n - 2) * (n + 3));
    return make_probability(n, k, v, ProbRoute::Closed);
  }
  throw std::invalid_argument("pi_closed: no closed form for k = " + std::to_string(k) +
                              "; closed forms exist for k = 2 and k = 3 only");
}

/*
 * Coefficient of t^n in
 *
 *   F(t) = (1/t^2) log(1 - t^2) + 3/2 + (-1/2 + t)/(1 - t)^2,
 *
 * assembled termwise from the three pieces: the log piece puts -2/(m+2)
 * at every even degree m, the rational piece puts (m-1)/2 at m >= 1 and
 * -1/2 at m = 0, the constant sits at m = 0. The contract tying it to the
 * pair probabilities is F[n] = (n-1) pi_n for n >= 2.
 */
inline Rational f_series_coeff(int n) {
  if (n < 0) throw std::invalid_argument("f_series_coeff: negative degree");
  Rational v;
  if (n % 2 == 0) v -= Rational(2, n + 2);
  if (n == 0) v += Rational(3, 2) - Rational(1, 2);
  else v += Rational(n - 1, 2);
  return v;
}

// pi_n through the generating function; k = 2 only.
inline ProbabilityResult pi_series(int n) {
  if (n < 2) throw std::invalid_argument("pi_series: need n >= 2");
  return make_probability(n, 2, f_series_coeff(n) / Rational(n - 1), ProbRoute::Series);
}

}  // namespace cycleforge
