#pragma once

#include <utility>
#include <vector>

#include "lazard/polynomial.hpp"
#include "lazard/rational.hpp"

namespace lazard {

/// Dense univariate polynomial over the rationals; coefficient k belongs to
/// x^k and the top coefficient is nonzero (empty vector = zero polynomial).
struct Unipoly {
  std::vector<Rational> c;

  Unipoly() = default;
  explicit Unipoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

  static Unipoly constant(Rational v) {
    Unipoly p;
    if (v != 0) p.c.push_back(std::move(v));
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool isZero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  const Rational& lc() const {
    checkInternal(!c.empty(), "leading coefficient of zero polynomial");
    return c.back();
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Unipoly derivative() const {
    Unipoly d;
    for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * Rational(static_cast<long>(k)));
    d.trim();
    return d;
  }

  Unipoly operator-() const {
    Unipoly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }

  friend Unipoly operator+(const Unipoly& a, const Unipoly& b) {
    Unipoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }

  friend Unipoly operator-(const Unipoly& a, const Unipoly& b) { return a + (-b); }

  friend Unipoly operator*(const Unipoly& a, const Unipoly& b) {
    if (a.isZero() || b.isZero()) return {};
    Unipoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }

  Unipoly scaled(const Rational& v) const {
    if (v == 0) return {};
    Unipoly r = *this;
    for (auto& x : r.c) x *= v;
    return r;
  }

  bool operator==(const Unipoly& o) const { return c == o.c; }
  bool operator!=(const Unipoly& o) const { return !(*this == o); }

  /// p(x + a).
  Unipoly shifted(const Rational& a) const {
    if (c.size() <= 1 || a == 0) return *this;
    Unipoly r = *this;
    std::size_t d = r.c.size() - 1;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = d - 1; k + 1 > j; --k) r.c[k] += a * r.c[k + 1];
    return r;
  }

  /// p(a * x).
  Unipoly scaledArg(const Rational& a) const {
    Unipoly r = *this;
    Rational pw(1);
    for (std::size_t k = 1; k < r.c.size(); ++k) {
      pw *= a;
      r.c[k] *= pw;
    }
    r.trim();
    return r;
  }

  /// x^d * p(1/x) for the stated degree d >= deg(p).
  Unipoly reversed(std::size_t d) const {
    checkInternal(c.size() <= d + 1, "reversal degree too small");
    Unipoly r;
    r.c.assign(d + 1, Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) r.c[d - k] = c[k];
    r.trim();
    return r;
  }

  unsigned signVariations() const {
    unsigned v = 0;
    int prev = 0;
    for (const auto& x : c) {
      int s = signOf(x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }
};

/// Field division: f = q*g + r with deg r < deg g.
inline std::pair<Unipoly, Unipoly> divrem(const Unipoly& f, const Unipoly& g) {
  checkInternal(!g.isZero(), "division by zero polynomial");
  Unipoly q, r = f;
  int dg = g.degree();
  if (f.degree() >= dg) q.c.assign(static_cast<std::size_t>(f.degree() - dg) + 1, Rational(0));
  while (r.degree() >= dg) {
    int k = r.degree() - dg;
    Rational coef = r.lc() / g.lc();
    q.c[static_cast<std::size_t>(k)] = coef;
    for (int i = 0; i <= dg; ++i) r.c[static_cast<std::size_t>(k + i)] -= coef * g.c[static_cast<std::size_t>(i)];
    r.trim();
  }
  q.trim();
  return {std::move(q), std::move(r)};
}

inline Unipoly exactDivide(const Unipoly& f, const Unipoly& g) {
  auto [q, r] = divrem(f, g);
  checkInternal(r.isZero(), "exact univariate division failed");
  return q;
}

/// Integer-primitive, positive leading coefficient; (0,0) for zero.
inline std::pair<Rational, Unipoly> numericContentAndPrimitive(const Unipoly& f) {
  if (f.isZero()) return {Rational(0), f};
  Rational content(0);
  for (const auto& x : f.c) content = rationalGcd(content, x);
  if (f.lc() < 0) content = -content;
  Unipoly prim = f;
  for (auto& x : prim.c) x /= content;
  return {std::move(content), std::move(prim)};
}

inline Unipoly primitivePart(const Unipoly& f) { return numericContentAndPrimitive(f).second; }

/// Primitive positive gcd; gcdUni(f, 0) = primitive part of f.
inline Unipoly gcdUni(Unipoly a, Unipoly b) {
  while (!b.isZero()) {
    Unipoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
    if (!b.isZero()) b = primitivePart(b);  // keeps coefficients small
  }
  return primitivePart(a);
}

/// Yun squarefree decomposition: f = const * prod factor_i^mult_i with the
/// factors pairwise coprime, squarefree, primitive. Requires f nonzero.
inline std::vector<std::pair<Unipoly, unsigned>> yunDecomposition(const Unipoly& f) {
  checkInput(!f.isZero(), "squarefree decomposition of zero polynomial");
  std::vector<std::pair<Unipoly, unsigned>> out;
  Unipoly p = primitivePart(f);
  if (p.degree() < 1) return out;
  Unipoly g = gcdUni(p, p.derivative());
  if (g.degree() < 1) {
    out.emplace_back(std::move(p), 1u);
    return out;
  }
  Unipoly b = exactDivide(p, g);
  Unipoly d = exactDivide(p.derivative(), g) - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    Unipoly a = gcdUni(b, d);
    if (a.degree() > 0) out.emplace_back(primitivePart(a), i);
    b = exactDivide(b, a);
    Unipoly cNew = exactDivide(d, a);
    d = cNew - b.derivative();
    ++i;
  }
  return out;
}

/// View a polynomial that uses at most the variable `var` as univariate.
inline Unipoly toUnipoly(const Polynomial& f, unsigned var) {
  if (f.isConstant()) return Unipoly::constant(f.constantValue());
  checkInput(var < f.varCount(), "variable index out of range");
  Unipoly p;
  p.c.assign(static_cast<std::size_t>(std::max(f.degree(var), 0)) + 1, Rational(0));
  for (const auto& [m, coef] : f.terms()) {
    for (unsigned i = 0; i < f.varCount(); ++i)
      checkInput(i == var || m.exponents[i] == 0, "polynomial is not univariate in the given variable");
    p.c[m.exponents[var]] = coef;
  }
  p.trim();
  return p;
}

inline Polynomial toPolynomial(const Unipoly& p, unsigned varCount, unsigned var) {
  Polynomial f(varCount);
  for (std::size_t k = 0; k < p.c.size(); ++k) {
    if (p.c[k] == 0) continue;
    Monomial m(varCount);
    m.exponents[var] = static_cast<std::uint32_t>(k);
    f.addTerm(m, p.c[k]);
  }
  return f;
}

}  // namespace lazard
