#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cycle_polynomials.hpp"
#include "factorization.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "root_analysis.hpp"
#include "stirling.hpp"

namespace cycleforge {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failing case, or empty
};

struct VerifyOptions {
  int max_n = 8;  // cap for enumeration-backed sweeps; formula sweeps keep their fixed depths
  std::uint64_t seed = 42424242;
};

inline bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

namespace detail {

// Deterministic across platforms: raw mt19937_64 draws reduced by modulo,
// instead of the implementation-defined std::uniform_int_distribution.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  int below(int bound) { return static_cast<int>(engine() % static_cast<std::uint64_t>(bound)); }
  int in(int lo, int hi) { return lo + below(hi - lo + 1); }
};

inline Polynomial random_poly(Rng& rng, int max_degree, Indet var = Indet::q) {
  const int deg = rng.below(max_degree + 1);
  std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1);
  for (auto& c : coeffs) c = Rational(rng.in(-9, 9));
  if (coeffs.back() == 0) coeffs.back() = 1;
  return Polynomial(std::move(coeffs), var);
}

inline Permutation random_permutation(Rng& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(rng.below(i + 1))]);
  return Permutation(std::move(img));
}

}  // namespace detail

// One seeded (g, n) instance for the theorem4 sweep, drawn from the
// roots-of-unity family with d <= max_d and the zero at 1 of multiplicity
// at most n (so P never vanishes identically).
inline Theorem4Result theorem4_random_case(detail::Rng& rng, bool low_degree, int max_n, int max_d) {
  for (;;) {
    const int n = rng.in(1, max_n);
    const int count = std::min(rng.below(4), n);
    std::vector<int> as(static_cast<std::size_t>(count));
    int d = 0;
    for (int& a : as) {
      a = rng.in(1, 6);
      d += a;
    }
    const int b = rng.below(5);
    d += b;
    if (d > max_d) continue;
    if (low_degree ? d > n - 1 : d < n - 1) continue;
    return theorem4_case(roots_of_unity_product(as, b), n);
  }
}

inline std::vector<Theorem4Result> theorem4_sweep(std::uint64_t seed, int low_count, int high_count,
                                                  int max_n = 12, int max_d = 16) {
  detail::Rng rng(seed);
  std::vector<Theorem4Result> results;
  results.reserve(static_cast<std::size_t>(low_count + high_count));
  for (int i = 0; i < low_count; ++i) results.push_back(theorem4_random_case(rng, true, max_n, max_d));
  for (int i = 0; i < high_count; ++i) results.push_back(theorem4_random_case(rng, false, max_n, max_d));
  return results;
}

namespace detail {

struct CheckRunner {
  std::vector<CheckResult> results;

  // A check body reports its first failure through the string and returns
  // early; an exception is the same thing with a stack attached.
  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, false, ""};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
};

}  // namespace detail

/*
 * Every module's invariant sweep, one CheckResult per named invariant.
 * opts.max_n caps the sweeps that enumerate symmetric groups; the pure
 * formula sweeps keep the depths they are stated at (12, 20, 30), which is
 * why the default --max-n 8 still exercises everything at full depth.
 */
inline std::vector<CheckResult> run_verification(const VerifyOptions& opts = {}) {
  detail::CheckRunner runner;
  const int cap8 = std::min(8, opts.max_n);
  const int cap7 = std::min(7, opts.max_n);
  const int cap6 = std::min(6, opts.max_n);
  OracleConfig oracle_cfg = OracleConfig::from_env();
  oracle_cfg.max_n_class = std::max(oracle_cfg.max_n_class, opts.max_n);
  oracle_cfg.max_n_pairs = std::max(oracle_cfg.max_n_pairs, cap7);

  runner.run("polynomial/ring-laws", [&] {
    detail::Rng rng(opts.seed);
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial a = detail::random_poly(rng, 20), b = detail::random_poly(rng, 20), c = detail::random_poly(rng, 20);
      if (!((a + b) + c == a + (b + c))) return std::string("addition not associative at trial ") + std::to_string(trial);
      if (!((a * b) * c == a * (b * c))) return std::string("multiplication not associative at trial ") + std::to_string(trial);
      if (!(a * (b + c) == a * b + a * c)) return std::string("distributivity fails at trial ") + std::to_string(trial);
    }
    return std::string();
  });

  runner.run("polynomial/shift-operator-composition", [&] {
    detail::Rng rng(opts.seed + 1);
    for (int trial = 0; trial < 12; ++trial) {
      const Polynomial g = detail::random_poly(rng, 8, Indet::t), h = detail::random_poly(rng, 8, Indet::t);
      const Polynomial f = detail::random_poly(rng, 8);
      if (!(apply_shift_operator(g * h, f) == apply_shift_operator(g, apply_shift_operator(h, f))))
        return "composition fails at trial " + std::to_string(trial);
    }
    return std::string();
  });

  runner.run("polynomial/unit-interval-integration", [&] {
    for (int j = 0; j <= 12; ++j)
      if (integrate_unit_interval(Polynomial::monomial(1, j)) != Rational(1, j + 1))
        return "x^" + std::to_string(j) + " does not integrate to 1/(j+1)";
    detail::Rng rng(opts.seed + 2);
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial f = detail::random_poly(rng, 10), g = detail::random_poly(rng, 10);
      const Rational s = Rational(rng.in(-5, 5));
      if (integrate_unit_interval(f + g) != integrate_unit_interval(f) + integrate_unit_interval(g))
        return "integration not additive at trial " + std::to_string(trial);
      if (integrate_unit_interval(f * Polynomial(s)) != s * integrate_unit_interval(f))
        return "integration not homogeneous at trial " + std::to_string(trial);
    }
    return std::string();
  });

  runner.run("partitions/class-sizes-sum-to-n!", [&] {
    for (int n = 1; n <= cap8; ++n) {
      Integer total = 0;
      for (const Partition& lambda : partitions_of(n)) total += class_size(lambda);
      if (total != factorial(n)) return "n = " + std::to_string(n);
    }
    return std::string();
  });

  runner.run("permutations/uv-conjugate-to-vu", [&] {
    detail::Rng rng(opts.seed + 3);
    for (int n = 2; n <= cap8; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        const Permutation u = detail::random_permutation(rng, n), v = detail::random_permutation(rng, n);
        if (!(cycle_type(compose(u, v)) == cycle_type(compose(v, u))))
          return "n = " + std::to_string(n) + ", u = " + u.to_string() + ", v = " + v.to_string();
      }
    return std::string();
  });

  runner.run("permutations/class-enumeration-count", [&] {
    for (int n = 1; n <= cap7; ++n)
      for (const Partition& lambda : partitions_of(n))
        if (Integer(enumerate_class(lambda, oracle_cfg.max_n_class).size()) != class_size(lambda))
          return "lambda = " + lambda.to_string();
    return std::string();
  });

  runner.run("stirling/first-kind-counts-cycles", [&] {
    for (int n = 1; n <= cap7; ++n) {
      std::vector<Integer> counts(static_cast<std::size_t>(n) + 1);
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 1);
      do {
        ++counts[detail::cycle_lengths(img).size()];
      } while (std::next_permutation(img.begin(), img.end()));
      for (int k = 0; k <= n; ++k)
        if (counts[static_cast<std::size_t>(k)] != stirling_first(n, k))
          return "c(" + std::to_string(n) + "," + std::to_string(k) + ")";
    }
    return std::string();
  });

  runner.run("cycle-polynomials/route-agreement", [&] {
    for (int n = 1; n <= 12; ++n)
      for (const Partition& lambda : partitions_of(n)) {
        const Polynomial op = p_lambda(lambda, CycleMethod::Operator).poly;
        if (!(op == p_lambda(lambda, CycleMethod::GPrime).poly)) return "operator vs gprime at " + lambda.to_string();
        if (!(op == p_lambda(lambda, CycleMethod::Hook).poly)) return "operator vs hook at " + lambda.to_string();
        if (lambda.length() == 1 && !(op == p_ncycle(n).poly)) return "operator vs stirling at " + lambda.to_string();
      }
    return std::string();
  });

  runner.run("cycle-polynomials/oracle-agreement", [&] {
    for (int n = 1; n <= cap8; ++n)
      for (const Partition& lambda : partitions_of(n))
        if (!(p_lambda(lambda).poly == brute_p_lambda(lambda, oracle_cfg)))
          return "lambda = " + lambda.to_string();
    return std::string();
  });

  runner.run("cycle-polynomials/mass-at-1", [&] {
    for (int n = 1; n <= 12; ++n)
      for (const Partition& lambda : partitions_of(n))
        if (p_lambda(lambda).poly(Rational(1)) != Rational(class_size(lambda)))
          return "lambda = " + lambda.to_string();
    return std::string();
  });

  runner.run("cycle-polynomials/degree", [&] {
    for (int n = 1; n <= 12; ++n)
      for (const Partition& lambda : partitions_of(n))
        if (p_lambda(lambda).poly.degree() != n - lambda.length() + 1)
          return "lambda = " + lambda.to_string();
    return std::string();
  });

  // P(-q) = (-1)^{n - l + 1} P(q): the class fixes the sign of (1..n)w, so
  // the support lives in the parity class of the degree n - l + 1.
  runner.run("cycle-polynomials/parity-symmetry", [&] {
    for (int n = 1; n <= 12; ++n)
      for (const Partition& lambda : partitions_of(n)) {
        const Polynomial p = p_lambda(lambda).poly;
        for (int k = 0; k <= p.degree(); ++k)
          if ((n - lambda.length() + 1 - k) % 2 != 0 && p.coeff(k) != 0)
            return "lambda = " + lambda.to_string() + ", stray q^" + std::to_string(k);
      }
    return std::string();
  });

  runner.run("cycle-polynomials/hook-characters", [&] {
    for (int n = 1; n <= 12; ++n)
      for (const Partition& lambda : partitions_of(n)) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(n));
        for (int i = 0; i <= n - 1; ++i) {
          const Integer chi = hook_character(lambda, i);
          coeffs[static_cast<std::size_t>(i)] = (i % 2 == 0) ? Rational(chi) : -Rational(chi);
        }
        if (!(Polynomial(std::move(coeffs), Indet::t) == g_poly(lambda)))
          return "g reassembly at " + lambda.to_string();
        if (hook_character(lambda, 0) != 1) return "chi(lambda,0) at " + lambda.to_string();
        const Integer sign = (n - lambda.length()) % 2 == 0 ? 1 : -1;
        if (hook_character(lambda, n - 1) != sign) return "chi(lambda,n-1) at " + lambda.to_string();
      }
    return std::string();
  });

  runner.run("factorization/global-mass", [&] {
    for (int n = 2; n <= 20; ++n) {
      Integer total = 0;
      for (const Partition& lambda : partitions_of(n)) total += class_size(lambda) * boccara_count(lambda);
      if (total != factorial(n - 1) * factorial(n - 1)) return "n = " + std::to_string(n);
    }
    return std::string();
  });

  runner.run("factorization/parity-support", [&] {
    for (int n = 1; n <= 12; ++n)
      for (const Partition& lambda : partitions_of(n)) {
        const bool zero = boccara_count(lambda) == 0;
        const bool odd = (n - lambda.length()) % 2 != 0;
        if (zero != odd) return "lambda = " + lambda.to_string();
      }
    return std::string();
  });

  runner.run("probabilities/k2-route-agreement", [&] {
    for (int n = 2; n <= 30; ++n) {
      const Rational sum = pi_sum(n, 2).value;
      if (sum != pi_closed(n, 2).value) return "sum vs closed at n = " + std::to_string(n);
      if (sum != pi_series(n).value) return "sum vs series at n = " + std::to_string(n);
      if (f_series_coeff(n) != Rational(n - 1) * sum) return "series contract at n = " + std::to_string(n);
    }
    for (int n = 2; n <= cap7; ++n)
      if (pi_sum(n, 2).value != brute_pi(n, 2, oracle_cfg)) return "sum vs brute at n = " + std::to_string(n);
    return std::string();
  });

  runner.run("probabilities/k3-route-agreement", [&] {
    for (int n = 3; n <= 30; ++n)
      if (pi_sum(n, 3).value != pi_closed(n, 3).value) return "sum vs closed at n = " + std::to_string(n);
    for (int n = 3; n <= cap7; ++n)
      if (pi_sum(n, 3).value != brute_pi(n, 3, oracle_cfg)) return "sum vs brute at n = " + std::to_string(n);
    return std::string();
  });

  runner.run("probabilities/k4-sum-vs-brute", [&] {
    for (int n = 4; n <= cap7; ++n)
      if (pi_sum(n, 4).value != brute_pi(n, 4, oracle_cfg)) return "n = " + std::to_string(n);
    return std::string();
  });

  runner.run("probabilities/uniform-permutation-1-over-k", [&] {
    for (int n = 1; n <= cap7; ++n)
      for (int k = 1; k <= n; ++k)
        if (brute_same_cycle_uniform(n, k, oracle_cfg) != Rational(1, k))
          return "n = " + std::to_string(n) + ", k = " + std::to_string(k);
    return std::string();
  });

  runner.run("roots/real-part-zero", [&] {
    for (int n = 1; n <= 12; ++n)
      for (const Partition& lambda : partitions_of(n)) {
        const RootLocationReport report = verify_real_part(p_lambda(lambda).poly, Rational(0));
        if (!report.verdict) return lambda.to_string() + ": " + report.witness;
      }
    return std::string();
  });

  runner.run("roots/coefficient-profile", [&] {
    for (int n = 1; n <= 12; ++n)
      for (const Partition& lambda : partitions_of(n)) {
        const CoeffProfile profile = coeff_profile(r_part(p_lambda(lambda)));
        if (!profile.all()) return "lambda = " + lambda.to_string();
      }
    return std::string();
  });

  runner.run("roots/theorem4-sweep", [&] {
    for (const Theorem4Result& r : theorem4_sweep(opts.seed + 4, 50, 50))
      if (!r.verdict)
        return "g = " + to_display_string(r.g) + ", n = " + std::to_string(r.n) + ": " + r.witness;
    return std::string();
  });

  runner.run("roots/sturm-on-split-polynomials", [&] {
    detail::Rng rng(opts.seed + 5);
    for (int trial = 0; trial < 30; ++trial) {
      const int count = rng.in(1, 8);
      std::vector<int> values(41);
      std::iota(values.begin(), values.end(), -20);
      for (int i = 40; i > 0; --i) std::swap(values[static_cast<std::size_t>(i)], values[static_cast<std::size_t>(rng.below(i + 1))]);
      Polynomial f(Rational(rng.below(2) == 0 ? 3 : -2), Indet::x);
      int nonpositive = 0;
      for (int i = 0; i < count; ++i) {
        const int root = values[static_cast<std::size_t>(i)];
        if (root <= 0) ++nonpositive;
        f = f * Polynomial({Rational(-root), 1}, Indet::x);
      }
      if (sturm_real_root_count(f) != count) return "full-line count at trial " + std::to_string(trial);
      if (sturm_real_root_count(f, Bound::at(Rational(-21)), Bound::at(Rational(0))) != nonpositive)
        return "interval count at trial " + std::to_string(trial);
    }
    return std::string();
  });

  runner.run("oracle/q1-mass-sums-to-n!", [&] {
    for (int n = 1; n <= cap7; ++n) {
      Rational total;
      for (const Partition& lambda : partitions_of(n)) total += brute_p_lambda(lambda, oracle_cfg)(Rational(1));
      if (total != Rational(factorial(n))) return "n = " + std::to_string(n);
    }
    return std::string();
  });

  runner.run("oracle/representative-independence", [&] {
    for (int n = 1; n <= cap6; ++n)
      for (const Partition& lambda : partitions_of(n))
        for (const Partition& mu : partitions_of(n)) {
          // brute_p_lambda_mu re-runs itself over every representative of
          // K_mu at this size and throws on any mismatch.
          const Polynomial p = brute_p_lambda_mu(lambda, mu, oracle_cfg);
          if (mu.length() == 1 && !(p == brute_p_lambda(lambda, oracle_cfg)))
            return "mu = (n) specialization at lambda = " + lambda.to_string();
        }
    return std::string();
  });

  return runner.results;
}

}  // namespace cycleforge
