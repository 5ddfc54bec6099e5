#include <catch2/catch_amalgamated.hpp>

#include <cycleforge/cycle_polynomials.hpp>
#include <cycleforge/root_analysis.hpp>
#include <cycleforge/verify.hpp>

using namespace cycleforge;

namespace {

Polynomial q_poly(std::initializer_list<Rational> cs) { return Polynomial(cs, Indet::q); }

}  // namespace

TEST_CASE("sturm counts distinct real roots") {
  const Polynomial f = q_poly({-2, 0, 1});  // q^2 - 2
  CHECK(sturm_real_root_count(f) == 2);
  CHECK(sturm_real_root_count(f, Bound::at(0), Bound::at(2)) == 1);
  CHECK(sturm_real_root_count(f, Bound::at(-2), Bound::at(0)) == 1);
  CHECK(sturm_real_root_count(f, Bound::at(2), Bound::pos_inf()) == 0);

  CHECK(sturm_real_root_count(q_poly({1, 0, 1})) == 0);      // q^2 + 1
  CHECK(sturm_real_root_count(q_poly({1, -2, 1})) == 1);     // (q-1)^2, distinct count
  CHECK(sturm_real_root_count(q_poly({42})) == 0);

  // (q-1)(q-2)(q-3).
  const Polynomial cubic = q_poly({-1, 1}) * q_poly({-2, 1}) * q_poly({-3, 1});
  CHECK(sturm_real_root_count(cubic) == 3);
  CHECK(sturm_real_root_count(cubic, Bound::at(1), Bound::at(3)) == 2);
  CHECK(sturm_real_root_count(cubic, Bound::neg_inf(), Bound::at(Rational(5, 2))) == 2);

  SECTION("intervals are half-open on the left") {
    const Polynomial lin = q_poly({0, 1});  // root at 0
    CHECK(sturm_real_root_count(lin, Bound::at(0), Bound::at(1)) == 0);
    CHECK(sturm_real_root_count(lin, Bound::at(-1), Bound::at(0)) == 1);
    CHECK(sturm_real_root_count(lin, Bound::at(0), Bound::at(0)) == 0);
  }

  CHECK_THROWS_AS(sturm_real_root_count(Polynomial(Indet::q)), std::invalid_argument);
  CHECK_THROWS_AS(sturm_real_root_count(q_poly({0, 1}), Bound::at(1), Bound::at(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sturm_real_root_count(q_poly({0, 1}), Bound::pos_inf(), Bound::neg_inf()),
                  std::invalid_argument);
}

TEST_CASE("bounds order correctly") {
  CHECK(bound_less(Bound::neg_inf(), Bound::at(-100)));
  CHECK(bound_less(Bound::at(100), Bound::pos_inf()));
  CHECK(bound_less(Bound::at(0), Bound::at(Rational(1, 7))));
  CHECK_FALSE(bound_less(Bound::at(0), Bound::at(0)));
  CHECK_FALSE(bound_less(Bound::pos_inf(), Bound::pos_inf()));
  CHECK(sign_at(q_poly({0, 1}), Bound::neg_inf()) == -1);
  CHECK(sign_at(q_poly({0, 1}), Bound::pos_inf()) == 1);
  CHECK(sign_at(q_poly({0, 0, 1}), Bound::neg_inf()) == 1);
  CHECK(sign_at(q_poly({-4, 0, 1}), Bound::at(2)) == 0);
}

TEST_CASE("verify_real_part certifies pure imaginary spectra") {
  CHECK(verify_real_part(q_poly({0, 1, 0, 1}), Rational(0)).verdict);  // q(q^2+1)
  CHECK(verify_real_part(q_poly({1, 0, 1}), Rational(0)).verdict);
  // 28q^3 + 420q^2 + 672q has two real negative zeros besides q = 0.
  CHECK_FALSE(verify_real_part(q_poly({0, 672, 420, 28}), Rational(0)).verdict);
  // Roots -1 +- i: correct at alpha = -1, wrong at 0.
  const Polynomial shifted = q_poly({2, 2, 1});
  CHECK(verify_real_part(shifted, Rational(-1)).verdict);
  CHECK_FALSE(verify_real_part(shifted, Rational(0)).verdict);
  CHECK_FALSE(verify_real_part(shifted, Rational(0)).witness.empty());

  // Constants carry no zeros at all, so any claim holds vacuously.
  CHECK(verify_real_part(q_poly({3}), Rational(7)).verdict);
  // The zero polynomial vanishes everywhere; no line contains its zeros.
  const RootLocationReport zero_report = verify_real_part(Polynomial(Indet::q), Rational(0));
  CHECK_FALSE(zero_report.verdict);
  CHECK_FALSE(zero_report.witness.empty());

  SECTION("every cycle-count polynomial up to n = 10 passes at alpha = 0") {
    for (int n = 1; n <= 10; ++n)
      for (const Partition& lam : partitions_of(n))
        CHECK(verify_real_part(p_lambda(lam).poly, Rational(0)).verdict);
  }

  SECTION("the two-class product polynomial fails") {
    const Polynomial bad = q_poly({0, 0, 660, 0, 424, 0, 35, 0, 1});
    const RootLocationReport report = verify_real_part(bad, Rational(0));
    CHECK_FALSE(report.verdict);
    CHECK(report.witness.find("zeros") != std::string::npos);
  }
}

TEST_CASE("coefficient profiles") {
  const CoeffProfile good = coeff_profile(Polynomial({1, 2, 1}, Indet::x));
  CHECK(good.log_concave);
  CHECK(good.no_internal_zeros);
  CHECK(good.unimodal);
  CHECK(good.all());

  const CoeffProfile gap = coeff_profile(Polynomial({1, 0, 1}, Indet::x));
  CHECK_FALSE(gap.log_concave);
  CHECK_FALSE(gap.no_internal_zeros);
  CHECK_FALSE(gap.unimodal);
  CHECK_FALSE(gap.all());

  // 1, 1, 2 rises throughout: unimodal but not log-concave.
  const CoeffProfile rise = coeff_profile(Polynomial({1, 1, 2}, Indet::x));
  CHECK_FALSE(rise.log_concave);
  CHECK(rise.unimodal);

  // Leading zeros below the support do not count as internal.
  const CoeffProfile shifted = coeff_profile(Polynomial({0, 0, 5, 10, 5}, Indet::x));
  CHECK(shifted.no_internal_zeros);
  CHECK(shifted.log_concave);

  // R-parts of cycle-count polynomials stay log-concave and unimodal.
  for (int n = 1; n <= 10; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      const CoeffProfile prof = coeff_profile(r_part(p_lambda(lam)));
      CHECK(prof.all());
    }
  }
}

TEST_CASE("roots-of-unity generators") {
  CHECK(roots_of_unity_product({}, 0) == Polynomial({1}, Indet::t));
  CHECK(roots_of_unity_product({1}, 0) == Polynomial({1, -1}, Indet::t));
  CHECK(roots_of_unity_product({}, 2) == Polynomial({1, 2, 1}, Indet::t));
  CHECK(roots_of_unity_product({2}, 1) ==
        Polynomial({1, 0, -1}, Indet::t) * Polynomial({1, 1}, Indet::t));
  CHECK_THROWS_AS(roots_of_unity_product({0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(roots_of_unity_product({2}, -1), std::invalid_argument);
}

TEST_CASE("theorem4_case handles both degree regimes") {
  SECTION("low degree factors off a falling factorial") {
    // g = 1 + t, n = 5: d = 1, m = 0, Q = 2q + 3 with root at -3/2.
    const Theorem4Result r = theorem4_case(roots_of_unity_product({}, 1), 5);
    CHECK(r.verdict);
    CHECK(r.d == 1);
    CHECK(r.m == 0);
    CHECK(r.alpha == Rational(-3, 2));
    REQUIRE(r.q_factor.has_value());
    CHECK(*r.q_factor == q_poly({3, 2}));
    CHECK(r.q_factor->degree() == r.d - r.m);

    // g = 1 - t, n = 4: the difference telescopes, Q is the constant 4.
    const Theorem4Result s = theorem4_case(roots_of_unity_product({1}, 0), 4);
    CHECK(s.verdict);
    CHECK(s.m == 1);
    REQUIRE(s.q_factor.has_value());
    CHECK(*s.q_factor == q_poly({4}));
  }

  SECTION("high degree bounds the surviving degree directly") {
    // g = (1 - t)(1 - t^2)(1 + t), n = 3: d = 4 >= n - 1, m = 2.
    const Theorem4Result r = theorem4_case(roots_of_unity_product({1, 2}, 1), 3);
    CHECK(r.verdict);
    CHECK(r.d == 4);
    CHECK(r.m == 2);
    CHECK(r.p.degree() == r.n - r.m);
    CHECK_FALSE(r.q_factor.has_value());
  }

  SECTION("seeded sweeps pass across both regimes") {
    for (const Theorem4Result& r : theorem4_sweep(20260819, 25, 25)) {
      INFO(r.witness);
      CHECK(r.verdict);
    }
  }
}
