#pragma once

#include <utility>
#include <vector>

#include "lazard/polynomial.hpp"

namespace lazard {

/// Positive gcd of all coefficients; 0 for the zero polynomial.
inline Rational numericContent(const Polynomial& f) {
  Rational c(0);
  for (const auto& [m, coef] : f.terms()) c = rationalGcd(c, coef);
  return c;
}

/// f = factor * primitive with coprime integer coefficients on the primitive
/// part and a positive graded-lex leading coefficient; the factor carries the
/// sign. The zero polynomial maps to (0, 0).
inline std::pair<Rational, Polynomial> numericContentAndPrimitive(const Polynomial& f) {
  if (f.isZero()) return {Rational(0), f};
  Rational c = numericContent(f);
  if (f.leadingTerm().second < 0) c = -c;
  return {c, f.scaled(1 / c)};
}

/// The integer-primitive, sign-normalized multiple of f.
inline Polynomial primitivePart(const Polynomial& f) {
  return numericContentAndPrimitive(f).second;
}

inline Polynomial leadingCoeffWrt(const Polynomial& f, unsigned var) {
  auto cs = f.coefficientsWrt(var);
  checkInternal(!cs.empty(), "leading coefficient of zero polynomial");
  return cs.back();
}

inline Polynomial trailingCoeffWrt(const Polynomial& f, unsigned var) {
  checkInput(var < f.varCount(), "variable index out of range");
  Polynomial t(f.varCount());
  for (const auto& [m, c] : f.terms()) {
    if (m.exponents[var] == 0) t.addTerm(m, c);
  }
  return t;
}

namespace detail {

/// Pseudo-remainder wrt x_{var}: lc(g)^(deg f - deg g + 1) * f = q*g + r.
inline Polynomial prem(const Polynomial& f, const Polynomial& g, unsigned var) {
  int df = f.degree(var), dg = g.degree(var);
  checkInternal(dg >= 0, "prem by zero polynomial");
  if (df < dg) {
    // lc(g)^(df-dg+1) with a negative exponent never arises in the PRS loops.
    return f;
  }
  auto G = g.coefficientsWrt(var);
  const Polynomial& d = G.back();
  auto R = f.coefficientsWrt(var);
  int e = df - dg + 1;
  while (true) {
    while (!R.empty() && R.back().isZero()) R.pop_back();
    int dr = static_cast<int>(R.size()) - 1;
    if (dr < dg) break;
    Polynomial lcR = R.back();
    std::vector<Polynomial> next(static_cast<std::size_t>(dr), Polynomial(f.varCount()));
    for (int k = 0; k < dr; ++k) {
      next[k] = d * R[k];
      int j = k - (dr - dg);
      if (j >= 0) next[k] -= lcR * G[j];
    }
    R = std::move(next);
    --e;
  }
  Polynomial r = Polynomial::fromCoefficientsWrt(f.varCount(), var, R);
  for (int i = 0; i < e; ++i) r = r * d;
  return r;
}

}  // namespace detail

inline std::pair<Polynomial, Polynomial> contentAndPrimitiveWrt(const Polynomial& f, unsigned var);

/// Content-aware gcd: the full gcd in Q[x], numeric part included, normalized
/// to a positive leading coefficient. gcdFull(f, 0) = |f|-normalized f.
inline Polynomial gcdFull(const Polynomial& f, const Polynomial& g) {
  checkInput(f.varCount() == g.varCount(), "variable count mismatch");
  const unsigned n = f.varCount();
  if (f.isZero()) return g.isZero() ? g : (g.leadingTerm().second < 0 ? -g : g);
  if (g.isZero()) return f.leadingTerm().second < 0 ? -f : f;
  if (f.isConstant() || g.isConstant())
    return Polynomial::constant(n, rationalGcd(numericContent(f), numericContent(g)));
  int var = -1;
  for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
    if (f.usesVariable(i) || g.usesVariable(i)) {
      var = i;
      break;
    }
  }
  checkInternal(var >= 0, "nonconstant polynomial uses no variable");
  unsigned v = static_cast<unsigned>(var);
  if (!f.usesVariable(v)) return gcdFull(f, contentAndPrimitiveWrt(g, v).first);
  if (!g.usesVariable(v)) return gcdFull(contentAndPrimitiveWrt(f, v).first, g);

  auto [cf, pf] = contentAndPrimitiveWrt(f, v);
  auto [cg, pg] = contentAndPrimitiveWrt(g, v);
  Polynomial c = gcdFull(cf, cg);

  Polynomial a = std::move(pf), b = std::move(pg);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  while (!b.isZero()) {
    Polynomial r = detail::prem(a, b, v);
    a = std::move(b);
    b = r.isZero() ? std::move(r) : primitivePart(contentAndPrimitiveWrt(r, v).second);
  }
  return c * primitivePart(a);
}

/// Content/primitive split wrt x_{var}: f = content * primitive, the content
/// free of x_{var}, the primitive with trivial content and positive graded-lex
/// leading coefficient.
inline std::pair<Polynomial, Polynomial> contentAndPrimitiveWrt(const Polynomial& f, unsigned var) {
  checkInput(!f.isZero(), "content of the zero polynomial");
  checkInput(var < f.varCount(), "variable index out of range");
  Polynomial content(f.varCount());
  for (const auto& coeff : f.coefficientsWrt(var)) {
    if (!coeff.isZero()) content = gcdFull(content, coeff);
  }
  Polynomial primitive = exactDivide(f, content);
  if (primitive.leadingTerm().second < 0) {
    primitive = -primitive;
    content = -content;
  }
  return {std::move(content), std::move(primitive)};
}

/// Primitive normalized gcd (numeric content stripped). gcd(f, 0) is the
/// primitive part of f; both arguments zero is an error.
inline Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  checkInput(!f.isZero() || !g.isZero(), "gcd of two zero polynomials");
  return primitivePart(gcdFull(f, g));
}

/// Squarefree part wrt x_{var}: repeated factors with positive degree in
/// x_{var} collapse to multiplicity one. Integer-primitive, positive sign.
inline Polynomial squarefreePartWrt(const Polynomial& f, unsigned var) {
  checkInput(!f.isZero(), "squarefree part of the zero polynomial");
  if (f.degree(var) <= 0) return primitivePart(f);
  Polynomial g = gcdFull(f, f.derivative(var));
  return primitivePart(exactDivide(f, g));
}

/// Total squarefree part: the product of the distinct irreducible factors,
/// integer-primitive with positive leading coefficient. Constants map to 1.
inline Polynomial squarefreePartTotal(const Polynomial& f) {
  checkInput(!f.isZero(), "squarefree part of the zero polynomial");
  if (f.isConstant()) return Polynomial::constant(f.varCount(), 1);
  Polynomial h = f;
  for (unsigned i = 0; i < f.varCount(); ++i) {
    if (f.usesVariable(i)) h = gcdFull(h, f.derivative(i));
  }
  return primitivePart(exactDivide(f, h));
}

/// Pairwise-coprime squarefree primitive polynomials of positive degree in
/// the main variable whose product has the same distinct factors as the
/// product of the inputs.
struct BasisSet {
  unsigned varCount = 0;
  unsigned mainVar = 0;
  std::vector<Polynomial> elements;
};

namespace detail {

inline void insertBasisElement(std::vector<Polynomial>& basis, Polynomial f, unsigned varCount,
                               unsigned mainVar) {
  const Polynomial mainVarPoly = Polynomial::variable(varCount, mainVar);
  std::vector<Polynomial> queue;
  queue.push_back(std::move(f));
  while (!queue.empty()) {
    Polynomial cur = std::move(queue.back());
    queue.pop_back();
    if (cur.isConstant()) continue;
    // An element divisible by the main variable sheds that factor, so that no
    // basis element has an identically zero trailing coefficient.
    if (cur != mainVarPoly && cur.degree(mainVar) > 0 &&
        trailingCoeffWrt(cur, mainVar).isZero()) {
      queue.push_back(mainVarPoly);
      queue.push_back(primitivePart(exactDivide(cur, mainVarPoly)));
      continue;
    }
    bool handled = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == cur) {
        handled = true;  // duplicate, merge
        break;
      }
      Polynomial g = gcd(cur, basis[i]);
      if (!g.isConstant()) {
        Polynomial b = std::move(basis[i]);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        queue.push_back(g);
        queue.push_back(primitivePart(exactDivide(b, g)));
        queue.push_back(primitivePart(exactDivide(cur, g)));
        handled = true;
        break;
      }
    }
    if (!handled) basis.push_back(std::move(cur));
  }
}

}  // namespace detail

/// Finest squarefree basis obtainable by gcd refinement. Inputs must be
/// nonzero with positive degree in the main variable.
inline BasisSet squarefreeBasis(const std::vector<Polynomial>& inputs, unsigned varCount,
                                unsigned mainVar) {
  checkInput(mainVar < varCount, "variable index out of range");
  BasisSet basis;
  basis.varCount = varCount;
  basis.mainVar = mainVar;
  for (const Polynomial& a : inputs) {
    checkInput(!a.isZero(), "zero polynomial in basis input");
    checkInput(a.varCount() == varCount, "variable count mismatch");
    checkInput(a.degree(mainVar) > 0, "basis input with zero degree in the main variable");
    detail::insertBasisElement(basis.elements, squarefreePartWrt(primitivePart(a), mainVar),
                               basis.varCount, mainVar);
  }
  std::sort(basis.elements.begin(), basis.elements.end(), PolynomialLess{});
  return basis;
}

inline BasisSet squarefreeBasis(const std::vector<Polynomial>& inputs, unsigned mainVar) {
  checkInput(!inputs.empty(), "cannot infer the ring of an empty basis input");
  return squarefreeBasis(inputs, inputs.front().varCount(), mainVar);
}

}  // namespace lazard
