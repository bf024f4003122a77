#pragma once

#include <utility>

#include "lazard/gcd.hpp"
#include "lazard/polynomial.hpp"

namespace lazard {

namespace detail {

/// Subresultant PRS resultant of two nonzero polynomials with positive degree
/// in x_{var}. Returns the exact Sylvester-matrix determinant, sign included.
inline Polynomial resultantCore(const Polynomial& f, const Polynomial& g, unsigned var) {
  const unsigned n = f.varCount();
  int sign = 1;
  Polynomial A = f, B = g;
  if (A.degree(var) < B.degree(var)) {
    if ((A.degree(var) & 1) && (B.degree(var) & 1)) sign = -sign;
    std::swap(A, B);
  }
  // res(a*A', b*B') = a^deg(B) * b^deg(A) * res(A', B').
  auto [ca, pa] = numericContentAndPrimitive(A);
  auto [cb, pb] = numericContentAndPrimitive(B);
  Rational scale = rationalPow(ca, static_cast<unsigned long>(B.degree(var))) *
                   rationalPow(cb, static_cast<unsigned long>(A.degree(var)));
  A = std::move(pa);
  B = std::move(pb);

  Polynomial gcoef = Polynomial::constant(n, 1);
  Polynomial h = Polynomial::constant(n, 1);
  while (true) {
    int da = A.degree(var), db = B.degree(var);
    int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    Polynomial R = prem(A, B, var);
    A = std::move(B);
    if (R.isZero()) {
      // Positive-degree common factor: the resultant vanishes.
      checkInternal(A.degree(var) > 0, "subresultant PRS: unexpected degree collapse");
      return Polynomial(n);
    }
    Polynomial divisor = gcoef;
    for (int i = 0; i < delta; ++i) divisor = divisor * h;
    B = exactDivide(R, divisor);
    gcoef = leadingCoeffWrt(A, var);
    if (delta > 0) {
      Polynomial num = gcoef.pow(static_cast<unsigned>(delta));
      Polynomial den = h.pow(static_cast<unsigned>(delta - 1));
      h = exactDivide(num, den);
    }
    if (B.degree(var) <= 0) break;
  }
  // B is a nonzero constant in x_{var}.
  int da = A.degree(var);
  Polynomial num = B.pow(static_cast<unsigned>(da));
  Polynomial den = (da >= 1) ? h.pow(static_cast<unsigned>(da - 1)) : Polynomial::constant(n, 1);
  Polynomial res = exactDivide(num, den);
  res = res.scaled(scale);
  return sign < 0 ? -res : res;
}

/// Resultant with the degenerate conventions res(f, c) = c^deg(f) and
/// res(c, d) = 1 for constants in x_{var}. Used by the elimination chains.
inline Polynomial resultantAllowConstant(const Polynomial& f, const Polynomial& g, unsigned var) {
  checkInput(!f.isZero() && !g.isZero(), "resultant of the zero polynomial");
  int df = f.degree(var), dg = g.degree(var);
  if (df <= 0 && dg <= 0) return Polynomial::constant(f.varCount(), 1);
  if (dg <= 0) return g.pow(static_cast<unsigned>(df));
  if (df <= 0) return f.pow(static_cast<unsigned>(dg));
  return resultantCore(f, g, var);
}

}  // namespace detail

/// Resultant of f and g with respect to x_{var} via the subresultant PRS;
/// equals the determinant of the Sylvester matrix, standard sign convention
/// (res(y - a, y - b) = a - b).
inline Polynomial resultant(const Polynomial& f, const Polynomial& g, unsigned var) {
  checkInput(!f.isZero() && !g.isZero(), "resultant of the zero polynomial");
  checkInput(f.degree(var) > 0 && g.degree(var) > 0,
             "resultant requires positive degree in the main variable");
  return detail::resultantCore(f, g, var);
}

/// Discriminant wrt x_{var}: (-1)^(d(d-1)/2) * res(f, df/dx) / lc(f), d >= 2.
/// The division is exact by construction and asserted.
inline Polynomial discriminant(const Polynomial& f, unsigned var) {
  checkInput(!f.isZero(), "discriminant of the zero polynomial");
  int d = f.degree(var);
  checkInput(d >= 2, "discriminant requires degree >= 2 in the main variable");
  Polynomial res = resultant(f, f.derivative(var), var);
  Polynomial lc = leadingCoeffWrt(f, var);
  Polynomial disc = exactDivide(res, lc);
  return ((static_cast<long>(d) * (d - 1) / 2) & 1) ? -disc : disc;
}

}  // namespace lazard
