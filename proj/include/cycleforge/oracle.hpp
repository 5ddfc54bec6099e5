#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"

namespace cycleforge {

/*
 * Brute-force ground truth by exhaustive enumeration over small symmetric
 * groups. Nothing here shares a formula with the modules it checks: every
 * value is a literal count over permutations.
 */
struct OracleConfig {
  int max_n_class = 9;  // single-class enumerations
  int max_n_pairs = 7;  // ordered-pair enumerations, (n-1)!^2 products

  // CYCLEFORGE_MAX_N, when set, overrides both caps.
  static OracleConfig from_env() {
    OracleConfig cfg;
    if (const char* v = std::getenv("CYCLEFORGE_MAX_N")) {
      const int n = std::atoi(v);
      if (n >= 1) {
        cfg.max_n_class = n;
        cfg.max_n_pairs = n;
      }
    }
    return cfg;
  }
};

namespace detail {

inline void require_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw cap_exceeded(std::string(what) + ": n = " + std::to_string(n) +
                       " exceeds the brute-force cap " + std::to_string(cap));
}

// kappa of u*w without building a Permutation (u, w as image tables).
inline int kappa_of_product(const std::vector<int>& u, const std::vector<int>& w) {
  const int n = static_cast<int>(u.size());
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)];
         j = u[static_cast<std::size_t>(w[static_cast<std::size_t>(j - 1)] - 1)])
      seen[static_cast<std::size_t>(j)] = true;
  }
  return cycles;
}

// Whether 1..k share a cycle of u*w.
inline bool prefix_same_cycle_of_product(const std::vector<int>& u, const std::vector<int>& w, int k) {
  int found = 1;
  int j = u[static_cast<std::size_t>(w[0] - 1)];
  while (j != 1) {
    if (j <= k) ++found;
    j = u[static_cast<std::size_t>(w[static_cast<std::size_t>(j) - 1] - 1)];
  }
  return found == k;
}

}  // namespace detail

// sum over w of type lambda of q^{kappa(c_n w)}, computed literally.
inline Polynomial brute_p_lambda(const Partition& lambda,
                                 const OracleConfig& cfg = OracleConfig::from_env()) {
  const int n = lambda.n();
  detail::require_cap(n, cfg.max_n_class, "brute_p_lambda");
  if (n == 0) throw std::invalid_argument("brute_p_lambda: empty partition");
  const Permutation cn = canonical_of_type(Partition({n}));
  std::vector<Integer> counts(static_cast<std::size_t>(n) + 1);
  for (const Permutation& w : enumerate_class(lambda, cfg.max_n_class))
    ++counts[static_cast<std::size_t>(detail::kappa_of_product(cn.images(), w.images()))];
  std::vector<Rational> coeffs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) coeffs[i] = Rational(counts[i]);
  return Polynomial(std::move(coeffs), Indet::q);
}

// Fraction of the ((n-1)!)^2 ordered pairs (u, v) of n-cycles whose product
// uv puts 1..k in a single cycle.
inline Rational brute_pi(int n, int k, const OracleConfig& cfg = OracleConfig::from_env()) {
  detail::require_cap(n, cfg.max_n_pairs, "brute_pi");
  if (n < 2 || k < 2 || k > n) throw std::invalid_argument("brute_pi: need 2 <= k <= n");
  const std::vector<Permutation> cycles = enumerate_class(Partition({n}), cfg.max_n_pairs);
  Integer hits = 0;
  for (const Permutation& u : cycles)
    for (const Permutation& v : cycles)
      if (detail::prefix_same_cycle_of_product(u.images(), v.images(), k)) ++hits;
  return Rational(hits, Integer(cycles.size()) * Integer(cycles.size()));
}

/*
 * P_{lambda,mu}(q) = sum over w of type lambda of q^{kappa(w_mu w)} with
 * w_mu the canonical representative of type mu. The sum is a class
 * function of mu; for n <= 6 that is re-verified literally against every
 * representative in the mu class.
 */
inline Polynomial brute_p_lambda_mu(const Partition& lambda, const Partition& mu,
                                    const OracleConfig& cfg = OracleConfig::from_env()) {
  const int n = lambda.n();
  if (mu.n() != n)
    throw std::invalid_argument("brute_p_lambda_mu: sizes differ, " + lambda.to_string() + " vs " + mu.to_string());
  detail::require_cap(n, cfg.max_n_class, "brute_p_lambda_mu");
  if (n == 0) throw std::invalid_argument("brute_p_lambda_mu: empty partitions");

  const std::vector<Permutation> k_lambda = enumerate_class(lambda, cfg.max_n_class);
  const auto poly_for = [&](const Permutation& wmu) {
    std::vector<Integer> counts(static_cast<std::size_t>(n) + 1);
    for (const Permutation& w : k_lambda)
      ++counts[static_cast<std::size_t>(detail::kappa_of_product(wmu.images(), w.images()))];
    return counts;
  };

  const Permutation canonical = canonical_of_type(mu);
  const std::vector<Integer> counts = poly_for(canonical);
  if (n <= 6) {
    for (const Permutation& wmu : enumerate_class(mu, cfg.max_n_class)) {
      if (poly_for(wmu) != counts)
        throw std::logic_error("brute_p_lambda_mu: representative " + wmu.to_string() +
                               " of type " + mu.to_string() + " disagrees with the canonical one");
    }
  }

  std::vector<Rational> coeffs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) coeffs[i] = Rational(counts[i]);
  return Polynomial(std::move(coeffs), Indet::q);
}

// Fraction of all w in S_n with 1..k in one cycle.
inline Rational brute_same_cycle_uniform(int n, int k,
                                         const OracleConfig& cfg = OracleConfig::from_env()) {
  detail::require_cap(n, cfg.max_n_class, "brute_same_cycle_uniform");
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("brute_same_cycle_uniform: need 1 <= k <= n");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  Integer hits = 0;
  do {
    int found = 1;
    int j = img[0];
    while (j != 1) {
      if (j <= k) ++found;
      j = img[static_cast<std::size_t>(j - 1)];
    }
    if (found == k) ++hits;
  } while (std::next_permutation(img.begin(), img.end()));
  return Rational(hits, factorial(n));
}

// Number of ordered pairs (u, v) of n-cycles with uv equal to the canonical
// permutation of type lambda: u runs over all n-cycles and v = u^{-1} w_0
// must itself be an n-cycle. Cross-checks the integral-based count.
inline Integer brute_boccara_count(const Partition& lambda,
                                   const OracleConfig& cfg = OracleConfig::from_env()) {
  const int n = lambda.n();
  detail::require_cap(n, cfg.max_n_pairs, "brute_boccara_count");
  if (n == 0) throw std::invalid_argument("brute_boccara_count: empty partition");
  const Permutation w0 = canonical_of_type(lambda);
  Integer hits = 0;
  for (const Permutation& u : enumerate_class(Partition({n}), cfg.max_n_pairs)) {
    const Permutation v = compose(inverse(u), w0);
    if (kappa(v) == 1) ++hits;
  }
  return hits;
}

}  // namespace cycleforge
