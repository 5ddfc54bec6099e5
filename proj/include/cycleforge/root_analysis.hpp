#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace cycleforge {

// Interval endpoint for root counting: a rational number or +-infinity.
struct Bound {
  enum Kind { NegInf, Finite, PosInf };
  Kind kind = Finite;
  Rational value;

  static Bound neg_inf() { return {NegInf, {}}; }
  static Bound pos_inf() { return {PosInf, {}}; }
  static Bound at(Rational v) { return {Finite, std::move(v)}; }
};

inline bool bound_less(const Bound& a, const Bound& b) {
  if (a.kind == Bound::NegInf) return b.kind != Bound::NegInf;
  if (a.kind == Bound::PosInf) return false;
  if (b.kind == Bound::PosInf) return true;
  if (b.kind == Bound::NegInf) return false;
  return a.value < b.value;
}

namespace detail {

inline int sign_of(const Rational& v) {
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

}  // namespace detail

// Sign of f at a point, where the point may be infinite; at +-infinity the
// sign is dictated by the leading coefficient and the degree parity.
inline int sign_at(const Polynomial& f, const Bound& b) {
  if (f.degree() < 0) return 0;
  switch (b.kind) {
    case Bound::Finite: return detail::sign_of(f(b.value));
    case Bound::PosInf: return detail::sign_of(f.leading());
    case Bound::NegInf: {
      const int lead = detail::sign_of(f.leading());
      return f.degree() % 2 == 0 ? lead : -lead;
    }
  }
  return 0;
}

namespace detail {

// Canonical Sturm chain of a square-free polynomial: f, f', then negated
// remainders down to a nonzero constant. Each element is scaled by a
// positive constant (made monic up to sign), which changes no sign anywhere.
inline std::vector<Polynomial> sturm_chain(const Polynomial& square_free) {
  const auto normalize = [](Polynomial p) {
    if (p.degree() < 0) return p;
    Rational lead = p.leading();
    if (lead < 0) lead = -lead;
    return p * (Rational(1) / lead);
  };
  std::vector<Polynomial> chain;
  chain.push_back(normalize(square_free));
  Polynomial d = square_free.derivative();
  if (d.degree() < 0) return chain;
  chain.push_back(normalize(d));
  while (chain.back().degree() > 0) {
    Polynomial rem = divmod(chain[chain.size() - 2], chain.back()).rem;
    if (rem.degree() < 0) break;  // cannot happen for square-free input
    chain.push_back(normalize(-rem));
  }
  return chain;
}

inline int sign_variations(const std::vector<Polynomial>& chain, const Bound& b) {
  int variations = 0;
  int prev = 0;
  for (const Polynomial& f : chain) {
    const int s = sign_at(f, b);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace detail

/*
 * Number of distinct real roots of f in the half-open interval (lo, hi].
 *
 * Sturm's theorem on the square-free part of f: with the zero-skipping
 * variation count, V(x) equals the right limit V(x+), so V(lo) - V(hi)
 * counts roots in (lo, hi] even when an endpoint is itself a root.
 * Exact rational arithmetic throughout; multiplicities are erased by the
 * square-free reduction first, so a double root counts once.
 */
inline int sturm_real_root_count(const Polynomial& f, const Bound& lo, const Bound& hi) {
  if (f.degree() < 0) throw std::invalid_argument("sturm_real_root_count: zero polynomial");
  if (!bound_less(lo, hi)) {
    if (lo.kind == Bound::Finite && hi.kind == Bound::Finite && lo.value == hi.value) return 0;
    throw std::invalid_argument("sturm_real_root_count: empty or inverted interval");
  }
  const Polynomial sf = square_free_part(f);
  if (sf.degree() <= 0) return 0;
  const std::vector<Polynomial> chain = detail::sturm_chain(sf);
  return detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
}

inline int sturm_real_root_count(const Polynomial& f) {
  return sturm_real_root_count(f, Bound::neg_inf(), Bound::pos_inf());
}

// Outcome of a root-location check: does every complex zero of poly have
// real part exactly alpha? A false verdict names the first failed check.
struct RootLocationReport {
  Polynomial poly;
  Rational alpha;
  bool verdict = false;
  std::string witness;
};

/*
 * Exact certificate for "every zero of p lies on the vertical line
 * Re = alpha", no numeric root finding involved.
 *
 * Substitute q = s + alpha. For a real polynomial the zeros then must be
 * 0 (any multiplicity) and conjugate pairs +-iy, i.e.
 *
 *   shifted(s) = c s^{m0} h(s^2)  with h real-rooted and h(x) = 0 => x < 0.
 *
 * Two checks, each necessary and together sufficient: the support of the
 * shifted polynomial sits in one parity class, and the distinct real roots
 * of h in (-inf, 0] exhaust deg of its square-free part. h(0) != 0 by the
 * choice of m0, so the closed right end of the interval is free.
 */
inline RootLocationReport verify_real_part(const Polynomial& p, const Rational& alpha) {
  RootLocationReport report{p, alpha, false, ""};
  if (p.degree() < 0) {
    report.witness = "zero polynomial: every complex number is a zero";
    return report;
  }
  if (p.degree() == 0) {
    report.verdict = true;  // no zeros at all
    return report;
  }
  const Polynomial shifted = translate(p, alpha);
  int m0 = 0;
  while (shifted.coeff(m0) == 0) ++m0;
  for (int i = m0 + 1; i <= shifted.degree(); ++i) {
    if (shifted.coeff(i) != 0 && (i - m0) % 2 != 0) {
      report.witness = "mixed parity support after shifting by " + alpha.str() + ": exponents " +
                       std::to_string(m0) + " and " + std::to_string(i) + " both occur";
      return report;
    }
  }
  const int half_deg = (shifted.degree() - m0) / 2;
  std::vector<Rational> even_part(static_cast<std::size_t>(half_deg) + 1);
  for (int j = 0; j <= half_deg; ++j) even_part[static_cast<std::size_t>(j)] = shifted.coeff(m0 + 2 * j);
  const Polynomial h(std::move(even_part), Indet::x);
  if (h.degree() == 0) {
    report.verdict = true;  // only the root s = 0 remains
    return report;
  }
  const int distinct = square_free_part(h).degree();
  const int nonpositive_real = sturm_real_root_count(h, Bound::neg_inf(), Bound::at(Rational(0)));
  if (nonpositive_real != distinct) {
    report.witness = "even-part polynomial: " + std::to_string(distinct) +
                     " distinct zeros, " + std::to_string(nonpositive_real) +
                     " of them real in (-inf, 0]";
    return report;
  }
  report.verdict = true;
  return report;
}

// Shape of a coefficient sequence over its support span.
struct CoeffProfile {
  bool log_concave = true;
  bool no_internal_zeros = true;
  bool unimodal = true;

  bool all() const { return log_concave && no_internal_zeros && unimodal; }
};

// Checks c_i^2 >= c_{i-1} c_{i+1}, absence of zero coefficients strictly
// between nonzero ones, and weak rise-then-fall, all restricted to the span
// from the lowest nonzero coefficient to the leading one.
inline CoeffProfile coeff_profile(const Polynomial& r) {
  CoeffProfile profile;
  if (r.degree() < 0) return profile;
  int lo = 0;
  while (r.coeff(lo) == 0) ++lo;
  const int hi = r.degree();
  for (int i = lo + 1; i < hi; ++i) {
    if (r.coeff(i) == 0) profile.no_internal_zeros = false;
    if (r.coeff(i) * r.coeff(i) < r.coeff(i - 1) * r.coeff(i + 1)) profile.log_concave = false;
  }
  bool falling = false;
  for (int i = lo + 1; i <= hi; ++i) {
    if (r.coeff(i) > r.coeff(i - 1) && falling) {
      profile.unimodal = false;
      break;
    }
    if (r.coeff(i) < r.coeff(i - 1)) falling = true;
  }
  return profile;
}

// Pi_j (1 - t^{a_j}) * (1 + t)^b: the constructive family whose members have
// all zeros on the unit circle (they are roots of unity). The multiplicity
// of the zero at 1 is exactly the number of a_j.
inline Polynomial roots_of_unity_product(const std::vector<int>& as, int b) {
  if (b < 0) throw std::invalid_argument("roots_of_unity_product: negative power of (1 + t)");
  Polynomial g({1}, Indet::t);
  for (int a : as) {
    if (a < 1) throw std::invalid_argument("roots_of_unity_product: exponents must be >= 1");
    std::vector<Rational> factor(static_cast<std::size_t>(a) + 1);
    factor.front() = 1;
    factor.back() = -1;
    g = g * Polynomial(std::move(factor), Indet::t);
  }
  const Polynomial one_plus_t({1, 1}, Indet::t);
  for (int i = 0; i < b; ++i) g = g * one_plus_t;
  return g;
}

// Everything theorem4_case established about one (g, n) instance.
struct Theorem4Result {
  int n = 0;
  Polynomial g;
  int d = 0;       // deg g
  int m = 0;       // multiplicity of the zero of g at t = 1
  Polynomial p;    // g(E) applied to (q+n-1)_n
  std::optional<Polynomial> q_factor;  // Q with P = (q+n-d-1)_{n-d} Q, when d <= n-1
  Rational alpha;  // (d-n+1)/2
  RootLocationReport report;
  bool verdict = false;
  std::string witness;
};

/*
 * Root location for P = g(E) (q+n-1)_n when every zero of g lies on the
 * unit circle (the caller guarantees that by drawing g from
 * roots_of_unity_product). Writing d = deg g and m for the multiplicity
 * of 1 as a zero of g:
 *
 *   d <= n-1:  P = (q+n-d-1)_{n-d} Q exactly, deg Q = d - m, and every
 *              zero of Q has real part (d-n+1)/2;
 *   d >= n-1:  deg P = n - m and every zero of P has real part (d-n+1)/2.
 *
 * Failures of the division, the degree claims, or the root location are
 * reported through the verdict and witness, never by throwing.
 */
inline Theorem4Result theorem4_case(const Polynomial& g, int n) {
  if (n < 1) throw std::invalid_argument("theorem4_case: need n >= 1");
  if (g.degree() < 0) throw std::invalid_argument("theorem4_case: zero polynomial g");
  Theorem4Result result;
  result.n = n;
  result.g = g;
  result.d = g.degree();
  Polynomial reduced = g;
  const Polynomial one_minus_t({1, -1}, Indet::t);
  while (reduced.degree() > 0 && reduced(Rational(1)) == 0) {
    reduced = divide_exact(reduced, one_minus_t);
    ++result.m;
  }
  result.alpha = Rational(result.d - n + 1, 2);
  result.p = apply_shift_operator(g, falling_factorial(n - 1, n));

  const auto locate = [&result](const Polynomial& target) {
    result.report = verify_real_part(target, result.alpha);
    if (!result.report.verdict) {
      result.witness = result.report.witness;
      return;
    }
    result.verdict = true;
  };

  if (result.d <= n - 1) {
    const Polynomial factor = falling_factorial(n - result.d - 1, n - result.d);
    const PolyDivMod division = divmod(result.p, factor);
    if (division.rem.degree() >= 0) {
      result.witness = "division by (q+" + std::to_string(n - result.d - 1) + ")_" +
                       std::to_string(n - result.d) + " left a nonzero remainder";
      return result;
    }
    result.q_factor = division.quot;
    if (division.quot.degree() != result.d - result.m) {
      result.witness = "deg Q = " + std::to_string(division.quot.degree()) + ", expected d - m = " +
                       std::to_string(result.d - result.m);
      return result;
    }
    locate(division.quot);
  } else {
    if (result.p.degree() != n - result.m) {
      result.witness = "deg P = " + std::to_string(result.p.degree()) + ", expected n - m = " +
                       std::to_string(n - result.m);
      return result;
    }
    locate(result.p);
  }
  return result;
}

}  // namespace cycleforge
