#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "polynomial.hpp"
#include "stirling.hpp"

namespace cycleforge {

/*
 * The cycle-count polynomial of a conjugacy class:
 *
 *   P_lambda(q) = sum over w of type lambda of q^{kappa(c_n w)},
 *
 * where c_n is the canonical n-cycle. Three independent formula routes
 * produce it, plus a Stirling-number route for lambda = (n) and the
 * brute-force oracle; the enum records which one built a given value.
 */
enum class CycleMethod { Operator, GPrime, Hook, Stirling, Oracle };

inline const char* method_name(CycleMethod m) {
  switch (m) {
    case CycleMethod::Operator: return "operator";
    case CycleMethod::GPrime: return "gprime";
    case CycleMethod::Hook: return "hook";
    case CycleMethod::Stirling: return "stirling";
    case CycleMethod::Oracle: return "oracle";
  }
  return "?";
}

inline CycleMethod parse_method(const std::string& name) {
  if (name == "operator") return CycleMethod::Operator;
  if (name == "gprime") return CycleMethod::GPrime;
  if (name == "hook") return CycleMethod::Hook;
  if (name == "stirling") return CycleMethod::Stirling;
  if (name == "oracle") return CycleMethod::Oracle;
  throw std::invalid_argument("unknown method '" + name + "'");
}

struct CyclePolynomial {
  Partition lambda;
  Polynomial poly;  // in q
  CycleMethod method;
};

// prod_j (1 - t^{lambda_j}).
inline Polynomial g_prime_poly(const Partition& lambda) {
  Polynomial acc(Rational(1), Indet::t);
  for (int part : lambda.parts()) {
    std::vector<Rational> f(static_cast<std::size_t>(part) + 1);
    f[0] = 1;
    f[static_cast<std::size_t>(part)] = -1;
    acc = acc * Polynomial(std::move(f), Indet::t);
  }
  return acc;
}

// g_lambda(t) = prod_j (1 - t^{lambda_j}) / (1 - t); the quotient is exact
// since each factor vanishes at t = 1. Degree n - 1.
inline Polynomial g_poly(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("g_poly: empty partition");
  const Polynomial one_minus_t({Rational(1), Rational(-1)}, Indet::t);
  return divide_exact(g_prime_poly(lambda), one_minus_t);
}

// chi^{sigma(i)}(lambda), the irreducible character of the hook shape with
// arm n-i, read off g_lambda via sum_i (-1)^i chi^{sigma(i)}(lambda) t^i
// = g_lambda(t). Out-of-range i yields 0.
inline Integer hook_character(const Partition& lambda, int i) {
  if (lambda.empty()) throw std::invalid_argument("hook_character: empty partition");
  if (i < 0 || i > lambda.n() - 1) return 0;
  const Rational c = g_poly(lambda).coeff(i);
  const Integer v = to_integer(c);
  return i % 2 == 0 ? v : Integer(-v);
}

namespace detail {

// Integrality, nonnegativity, mass, degree and parity are theorems for a
// genuine cycle-count polynomial; any violation is a hard failure.
inline void check_cycle_polynomial(const Partition& lambda, const Polynomial& poly,
                                   const char* route) {
  const int n = lambda.n();
  const std::string where = std::string("P_") + lambda.to_string() + " via " + route;
  Integer mass = 0;
  for (int k = 0; k <= poly.degree(); ++k) {
    const Rational& c = poly.coeff(k);
    if (!is_integral(c))
      throw std::logic_error(where + ": non-integer coefficient " + c.str() + " at q^" + std::to_string(k));
    if (c < 0)
      throw std::logic_error(where + ": negative coefficient at q^" + std::to_string(k));
    // Support sits in one parity class: sign((1..n)w) is constant over the
    // class, giving kappa = n - l(lambda) + 1 (mod 2). This specializes to
    // the usual "kappa = n (mod 2)" only when l(lambda) is odd.
    if (c != 0 && (n - lambda.length() + 1 - k) % 2 != 0)
      throw std::logic_error(where + ": parity violation at q^" + std::to_string(k));
    mass += numerator(c);
  }
  if (mass != class_size(lambda))
    throw std::logic_error(where + ": coefficients sum to " + mass.str() + ", expected the class size");
  if (poly.degree() != n - lambda.length() + 1)
    throw std::logic_error(where + ": degree " + std::to_string(poly.degree()) +
                           ", expected " + std::to_string(n - lambda.length() + 1));
}

}  // namespace detail

inline CyclePolynomial p_ncycle(int n);

// P_lambda(q) by the requested formula route. All routes agree; each result
// is validated against the cycle-polynomial invariants before returning.
inline CyclePolynomial p_lambda(const Partition& lambda, CycleMethod method = CycleMethod::Operator) {
  if (lambda.empty()) throw std::invalid_argument("p_lambda: empty partition");
  const int n = lambda.n();
  const Rational inv_z = Rational(1) / Rational(z_of(lambda));
  Polynomial poly;
  switch (method) {
    case CycleMethod::Operator:
      poly = inv_z * apply_shift_operator(g_poly(lambda), falling_factorial(n - 1, n));
      break;
    case CycleMethod::GPrime:
      poly = inv_z / Rational(n + 1) *
             apply_shift_operator(g_prime_poly(lambda), falling_factorial(n, n + 1));
      break;
    case CycleMethod::Hook: {
      Polynomial acc(Indet::q);
      for (int i = 0; i <= n - 1; ++i) {
        const Integer chi = hook_character(lambda, i);
        if (chi == 0) continue;
        const Rational signed_chi(i % 2 == 0 ? chi : Integer(-chi));  // (-1)^i chi^{sigma(i)}(lambda)
        acc = acc + signed_chi * falling_factorial(n - i - 1, n);
      }
      poly = inv_z * acc;
      break;
    }
    case CycleMethod::Stirling:
      if (lambda.length() != 1)
        throw std::invalid_argument("stirling route applies only to single-cycle types (n)");
      return p_ncycle(n);
    case CycleMethod::Oracle:
      throw std::invalid_argument("the oracle route lives in the oracle module");
  }
  detail::check_cycle_polynomial(lambda, poly, method_name(method));
  return {lambda, poly.with_indeterminate(Indet::q), method};
}

// P_(n)(q) assembled directly from Stirling numbers:
// coefficient of q^k is c(n+1, k) / C(n+1, 2) when n - k is even, else 0.
// Every division must be exact.
inline CyclePolynomial p_ncycle(int n) {
  if (n < 1) throw std::invalid_argument("p_ncycle: n must be >= 1");
  const std::vector<Integer> row = stirling_first_row(n + 1);
  const Integer denom = binomial(n + 1, 2);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    if ((n - k) % 2 != 0) continue;
    const Integer& c = row[static_cast<std::size_t>(k)];
    if (c % denom != 0)
      throw std::logic_error("p_ncycle(" + std::to_string(n) + "): c(" + std::to_string(n + 1) + "," +
                             std::to_string(k) + ") = " + c.str() + " is not divisible by " + denom.str());
    coeffs[static_cast<std::size_t>(k)] = Rational(c / denom);
  }
  Polynomial poly(std::move(coeffs), Indet::q);
  const Partition lambda({n});
  detail::check_cycle_polynomial(lambda, poly, "stirling");
  return {lambda, poly, CycleMethod::Stirling};
}

// The even-part extraction forced by single-parity support:
// P(q) = R(q^2) when deg P is even, P(q) = q R(q^2) when deg P is odd.
// (Branching on deg P = n - l(lambda) + 1 rather than on n itself: the two
// agree only for classes of odd length, and e.g. P_(2,2) has degree 3 in
// S_4.)
inline Polynomial r_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("r_part: zero polynomial");
  const int off = p.degree() % 2;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) != 0 && (k - off) % 2 != 0)
      throw std::invalid_argument("parity violation: coefficient " + p.coeff(k).str() + " at degree " +
                                  std::to_string(k) + " is outside the parity class of the degree");
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(p.degree() / 2) + 1);
  for (int j = 0; 2 * j + off <= p.degree(); ++j)
    coeffs[static_cast<std::size_t>(j)] = p.coeff(2 * j + off);
  return Polynomial(std::move(coeffs), Indet::x);
}

inline Polynomial r_part(const CyclePolynomial& p) { return r_part(p.poly); }

}  // namespace cycleforge
