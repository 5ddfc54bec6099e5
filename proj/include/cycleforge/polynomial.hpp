#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cycleforge {

// Nominal indeterminate of a polynomial. This is advisory metadata:
// arithmetic never inspects it, module boundaries validate it.
enum class Indet { q, t, x };

inline char indet_char(Indet v) {
  switch (v) {
    case Indet::q: return 'q';
    case Indet::t: return 't';
    case Indet::x: return 'x';
  }
  return '?';
}

/*
 * Dense univariate polynomial over exact rationals.
 *
 * Coefficients are stored ascending by degree. The zero polynomial keeps an
 * empty coefficient list, so a nonzero polynomial always ends in a nonzero
 * leading coefficient and degree() == coeffs().size() - 1. The degree of the
 * zero polynomial is reported as -1.
 *
 * Equality compares coefficients only; the indeterminate tag is semantic
 * bookkeeping for callers. All values are immutable in practice: every
 * operation returns a fresh polynomial.
 */
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Indet var) : var_(var) {}
  Polynomial(const Rational& constant, Indet var = Indet::q) : var_(var) {
    if (constant != 0) coeffs_.push_back(constant);
  }
  Polynomial(std::vector<Rational> coeffs, Indet var = Indet::q)
      : coeffs_(std::move(coeffs)), var_(var) {
    trim();
  }
  Polynomial(std::initializer_list<Rational> coeffs, Indet var = Indet::q)
      : Polynomial(std::vector<Rational>(coeffs), var) {}

  static Polynomial monomial(const Rational& c, int power, Indet var = Indet::q) {
    if (power < 0) throw std::invalid_argument("monomial: negative power");
    std::vector<Rational> cs(static_cast<std::size_t>(power) + 1);
    cs[static_cast<std::size_t>(power)] = c;
    return Polynomial(std::move(cs), var);
  }
  static Polynomial variable(Indet var) { return monomial(1, 1, var); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& coeff(int k) const {
    static const Rational zero;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  const Rational& leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Indet indeterminate() const { return var_; }
  Polynomial with_indeterminate(Indet var) const {
    Polynomial r = *this;
    r.var_ = var;
    return r;
  }

  // Horner evaluation.
  Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(var_);
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(i) * coeffs_[i];
    return Polynomial(std::move(d), var_);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(r), merge_tag(a, b));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Polynomial(std::move(r), merge_tag(a, b));
  }

  Polynomial operator-() const {
    std::vector<Rational> r(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = -coeffs_[i];
    return Polynomial(std::move(r), var_);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(merge_tag(a, b));
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r), merge_tag(a, b));
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    if (s == 0) return Polynomial(a.var_);
    std::vector<Rational> r(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] = s * a.coeffs_[i];
    return Polynomial(std::move(r), a.var_);
  }
  friend Polynomial operator*(const Polynomial& a, const Rational& s) { return s * a; }

  friend Polynomial operator/(const Polynomial& a, const Rational& s) {
    if (s == 0) throw std::invalid_argument("polynomial division by the zero scalar");
    return Rational(1) / s * a;
  }

 private:
  // Tag of a binary result: a constant operand defers to the other side.
  static Indet merge_tag(const Polynomial& a, const Polynomial& b) {
    if (a.is_constant() && !b.is_constant()) return b.var_;
    return a.var_;
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
  Indet var_ = Indet::q;
};

inline Polynomial pow(const Polynomial& f, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  Polynomial acc(Rational(1), f.indeterminate());
  for (int i = 0; i < e; ++i) acc = acc * f;
  return acc;
}

// f(v + c): exact re-expansion around the shifted argument, by Horner.
inline Polynomial translate(const Polynomial& f, const Rational& c) {
  const Indet var = f.indeterminate();
  Polynomial acc(var);
  const Polynomial lin({c, Rational(1)}, var);
  for (int i = f.degree(); i >= 0; --i) acc = acc * lin + Polynomial(f.coeff(i), var);
  return acc;
}

struct PolyDivMod {
  Polynomial quot;
  Polynomial rem;
};

inline PolyDivMod divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Polynomial r = num;
  const int dd = den.degree();
  std::vector<Rational> q(static_cast<std::size_t>(std::max(num.degree() - dd + 1, 0)));
  while (!r.is_zero() && r.degree() >= dd) {
    const int shift = r.degree() - dd;
    const Rational c = r.leading() / den.leading();
    q[static_cast<std::size_t>(shift)] = c;
    r = r - Polynomial::monomial(c, shift, r.indeterminate()) * den;
  }
  return {Polynomial(std::move(q), num.indeterminate()), r};
}

inline Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
  auto [quot, rem] = divmod(num, den);
  if (!rem.is_zero()) throw std::logic_error("polynomial division left a nonzero remainder");
  return quot;
}

// Monic gcd; gcd(0, 0) is the zero polynomial. Remainders are renormalized
// to monic at every step to keep coefficient sizes in check.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    b = b / b.leading();
    Polynomial r = divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a / a.leading();
}

inline Polynomial square_free_part(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("square-free part of the zero polynomial");
  if (f.degree() == 0) return f / f.leading();
  return divide_exact(f, poly_gcd(f, f.derivative()));
}

// Expansion of (q + offset)(q + offset - 1)...(q + offset - n + 1);
// the empty product (n = 0) is the constant 1.
inline Polynomial falling_factorial(int offset, int n) {
  if (n < 0) throw std::invalid_argument("falling_factorial: negative length");
  Polynomial acc(Rational(1), Indet::q);
  for (int j = 0; j < n; ++j)
    acc = acc * Polynomial({Rational(offset - j), Rational(1)}, Indet::q);
  return acc;
}

// g(E) f, where E is the backward shift Ef(q) = f(q - 1): returns
// sum_i g_i f(q - i). Shifts are produced by repeated single shifts.
inline Polynomial apply_shift_operator(const Polynomial& g, const Polynomial& f) {
  Polynomial acc(f.indeterminate());
  Polynomial shifted = f;
  const int d = g.degree();
  for (int i = 0; i <= d; ++i) {
    if (g.coeff(i) != 0) acc = acc + g.coeff(i) * shifted;
    if (i < d) shifted = translate(shifted, Rational(-1));
  }
  return acc;
}

// Exact value of the integral of f over [0, 1], termwise.
inline Rational integrate_unit_interval(const Polynomial& f) {
  Rational acc;
  for (int i = 0; i <= f.degree(); ++i) acc += f.coeff(i) / Rational(i + 1);
  return acc;
}

// Human-readable rendering in descending degree, e.g. "q^3 + q" or
// "x^2 - (1/2)x + 3". The zero polynomial renders as "0".
inline std::string to_display_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const char v = indet_char(f.indeterminate());
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const Rational& c = f.coeff(k);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational mag = neg ? Rational(-c) : c;
    const bool show_coeff = (mag != 1) || k == 0;
    if (show_coeff) {
      if (is_integral(mag)) out += mag.str();
      else out += "(" + mag.str() + ")";
    }
    if (k >= 1) {
      out += v;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace cycleforge
