#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include <cycleforge/cycle_polynomials.hpp>
#include <cycleforge/factorization.hpp>
#include <cycleforge/oracle.hpp>

using namespace cycleforge;

namespace {

Polynomial q_poly(std::initializer_list<Rational> cs) { return Polynomial(cs, Indet::q); }

}  // namespace

TEST_CASE("product statistics on raw image tables") {
  using detail::kappa_of_product;
  using detail::prefix_same_cycle_of_product;

  const std::vector<int> cycle3{2, 3, 1};
  CHECK(kappa_of_product(cycle3, cycle3) == 1);        // (123)(123) = (132)
  CHECK(kappa_of_product(cycle3, {3, 1, 2}) == 3);     // inverse pair
  CHECK(kappa_of_product({2, 1, 3}, {2, 1, 3}) == 3);  // involution squared
  CHECK(kappa_of_product({1}, {1}) == 1);

  CHECK(prefix_same_cycle_of_product(cycle3, cycle3, 2));  // a 3-cycle holds everyone
  CHECK(prefix_same_cycle_of_product(cycle3, {3, 1, 2}, 1));
  CHECK_FALSE(prefix_same_cycle_of_product(cycle3, {3, 1, 2}, 2));
  // (12)(23) = (123): all three points share the cycle.
  CHECK(prefix_same_cycle_of_product({2, 1, 3}, {1, 3, 2}, 3));
}

TEST_CASE("brute-force cycle-count polynomials") {
  CHECK(brute_p_lambda(Partition({1})) == q_poly({0, 1}));
  CHECK(brute_p_lambda(Partition({3})) == q_poly({0, 1, 0, 1}));
  CHECK(brute_p_lambda(Partition({2, 1})) == q_poly({0, 0, 3}));
  CHECK(brute_p_lambda(Partition({2, 2})) == q_poly({0, 1, 0, 2}));

  SECTION("the formula routes agree with brute force everywhere reachable") {
    for (int n = 1; n <= 7; ++n)
      for (const Partition& lam : partitions_of(n))
        CHECK(brute_p_lambda(lam) == p_lambda(lam).poly);
  }

  SECTION("caps stop runaway enumerations") {
    OracleConfig tight;
    tight.max_n_class = 4;
    CHECK_THROWS_AS(brute_p_lambda(Partition({5}), tight), cap_exceeded);
    CHECK_NOTHROW(brute_p_lambda(Partition({4}), tight));
  }
}

TEST_CASE("brute-force pair probabilities") {
  CHECK(brute_pi(2, 2) == 0);
  CHECK(brute_pi(3, 2) == Rational(1, 2));
  CHECK(brute_pi(4, 2) == Rational(7, 18));
  CHECK(brute_pi(4, 3) == Rational(1, 6));
  CHECK(brute_pi(5, 3) == Rational(3, 8));
  CHECK(brute_pi(5, 4) == pi_sum(5, 4).value);
  CHECK(brute_pi(6, 2) == pi_closed(6, 2).value);
  CHECK_THROWS_AS(brute_pi(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(brute_pi(5, 6), std::invalid_argument);

  OracleConfig tight;
  tight.max_n_pairs = 5;
  CHECK_THROWS_AS(brute_pi(6, 2, tight), cap_exceeded);
}

TEST_CASE("two-class product polynomials") {
  // mu = (n) recovers P_lambda.
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lam : partitions_of(n))
      CHECK(brute_p_lambda_mu(lam, Partition({n})) == p_lambda(lam).poly);

  // Mass is the size of the summed-over class, and swapping the classes
  // rescales by exactly the class-size ratio.
  const Partition a({2, 2});
  const Partition b({3, 1});
  const Polynomial cross = brute_p_lambda_mu(a, b);
  CHECK(cross(Rational(1)) == Rational(class_size(a)));
  CHECK(Rational(class_size(b)) * cross == Rational(class_size(a)) * brute_p_lambda_mu(b, a));

  // Summing over the identity class just reads off w_mu itself.
  CHECK(brute_p_lambda_mu(Partition({1, 1, 1, 1}), Partition({2, 2})) ==
        Polynomial::monomial(1, 2, Indet::q));
  CHECK(brute_p_lambda_mu(Partition({1, 1, 1, 1, 1}), Partition({3, 1, 1})) ==
        Polynomial::monomial(1, 3, Indet::q));

  // The frozen two-class counterexample polynomial.
  CHECK(brute_p_lambda_mu(Partition({3, 3, 2}), Partition({3, 3, 2})) ==
        q_poly({0, 0, 660, 0, 424, 0, 35, 0, 1}));
  CHECK_THROWS_AS(brute_p_lambda_mu(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("uniform-permutation baseline") {
  // Against a uniform w, the chance that 1..k share a cycle is exactly 1/k;
  // k = 1 is the vacuous case.
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(brute_same_cycle_uniform(n, k) == Rational(1, k));
  CHECK_THROWS_AS(brute_same_cycle_uniform(4, 5), std::invalid_argument);
}

TEST_CASE("brute-force boccara counts") {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lam : partitions_of(n))
      CHECK(brute_boccara_count(lam) == boccara_count(lam));
}

TEST_CASE("environment variable adjusts the caps") {
  const char* old = std::getenv("CYCLEFORGE_MAX_N");
  const std::string saved = old ? old : "";

  setenv("CYCLEFORGE_MAX_N", "11", 1);
  OracleConfig cfg = OracleConfig::from_env();
  CHECK(cfg.max_n_class == 11);
  CHECK(cfg.max_n_pairs == 11);

  setenv("CYCLEFORGE_MAX_N", "junk", 1);
  cfg = OracleConfig::from_env();
  CHECK(cfg.max_n_class == OracleConfig{}.max_n_class);

  unsetenv("CYCLEFORGE_MAX_N");
  cfg = OracleConfig::from_env();
  CHECK(cfg.max_n_class == OracleConfig{}.max_n_class);
  CHECK(cfg.max_n_pairs == OracleConfig{}.max_n_pairs);

  if (old) setenv("CYCLEFORGE_MAX_N", saved.c_str(), 1);
}
