#pragma once

#include <utility>

#include "lazard/interval.hpp"
#include "lazard/real_roots.hpp"
#include "lazard/unipoly.hpp"

namespace lazard {

/// A real algebraic number: a squarefree primitive integer polynomial plus an
/// isolating interval holding exactly one of its real roots. Rational values
/// are the degenerate case lo == hi. Interval refinement only sharpens a
/// cache, so it is allowed through const access; public operations behave as
/// pure functions of the represented value.
class RealAlgebraicNumber {
 public:
  RealAlgebraicNumber() : poly_(Unipoly{{Rational(0), Rational(1)}}), iv_(Interval::point(Rational(0))) {}

  static RealAlgebraicNumber fromRational(const Rational& v) {
    RealAlgebraicNumber r;
    r.poly_ = Unipoly{{Rational(-v.get_num()), Rational(v.get_den())}};
    r.iv_ = Interval::point(v);
    return r;
  }

  static RealAlgebraicNumber fromRoot(Unipoly squarefreePrimitive, Interval isolating) {
    if (isolating.isPoint()) {
      checkInternal(squarefreePrimitive.eval(isolating.lo) == 0,
                    "point interval does not hit a root");
      return fromRational(isolating.lo);
    }
    // Linear defining polynomials pin the root exactly; collapsing here keeps
    // towers rational whenever possible.
    if (squarefreePrimitive.degree() == 1)
      return fromRational(Rational(-squarefreePrimitive.c[0] / squarefreePrimitive.c[1]));
    checkInternal(squarefreePrimitive.eval(isolating.lo) != 0 &&
                      squarefreePrimitive.eval(isolating.hi) != 0,
                  "isolating interval endpoint is a root");
    checkInternal(sturmCountOpen(squarefreePrimitive, isolating.lo, isolating.hi) == 1,
                  "interval does not isolate exactly one root");
    RealAlgebraicNumber r;
    r.poly_ = std::move(squarefreePrimitive);
    r.iv_ = std::move(isolating);
    return r;
  }

  bool isRational() const { return iv_.isPoint(); }

  const Rational& rationalValue() const {
    checkInternal(isRational(), "rationalValue of an irrational number");
    return iv_.lo;
  }

  const Unipoly& definingPoly() const { return poly_; }
  const Interval& interval() const { return iv_; }

  void refineStep() const {
    refineRootStep(poly_, iv_);
    if (iv_.isPoint()) poly_ = Unipoly{{Rational(-iv_.lo.get_num()), Rational(iv_.lo.get_den())}};
  }

  void refineBelowWidth(const Rational& width) const {
    while (!iv_.isPoint() && iv_.width() > width) refineStep();
  }

  /// A rational approximation within `width` of the value.
  Rational approximate(const Rational& width) const {
    refineBelowWidth(width);
    return iv_.mid();
  }

  int signOfValue() const {
    while (true) {
      if (auto s = iv_.certainSign()) return *s;
      if (poly_.eval(Rational(0)) == 0 && iv_.contains(Rational(0))) {
        // 0 is a root of the defining polynomial inside the interval, hence
        // it is the isolated root.
        return 0;
      }
      refineStep();
    }
  }

 private:
  mutable Unipoly poly_;
  mutable Interval iv_;
};

/// Exact ordering of two real algebraic numbers; equality is decided by a gcd
/// of the defining polynomials, never by approximation alone.
inline int compare(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
  if (a.definingPoly() == b.definingPoly() && a.interval().lo == b.interval().lo &&
      a.interval().hi == b.interval().hi)
    return 0;
  if (a.isRational() && b.isRational()) return cmp(a.rationalValue(), b.rationalValue());

  // gcd root test happens once; afterwards the values are known distinct and
  // refinement must separate the intervals.
  bool maybeEqual = true;
  if (a.isRational() || b.isRational()) {
    const RealAlgebraicNumber& rat = a.isRational() ? a : b;
    const RealAlgebraicNumber& alg = a.isRational() ? b : a;
    const Rational& v = rat.rationalValue();
    if (alg.definingPoly().eval(v) == 0 && alg.interval().contains(v)) return 0;
    maybeEqual = false;
  }
  while (true) {
    if (a.interval().hi < b.interval().lo) return -1;
    if (b.interval().hi < a.interval().lo) return 1;
    if (maybeEqual) {
      maybeEqual = false;
      Unipoly g = gcdUni(a.definingPoly(), b.definingPoly());
      if (g.degree() >= 1) {
        Rational lo = std::max(a.interval().lo, b.interval().lo);
        Rational hi = std::min(a.interval().hi, b.interval().hi);
        // Overlap endpoints are interval endpoints of a or b, hence not roots
        // of the respective defining polynomials nor of their gcd.
        if (lo < hi && sturmCountOpen(g, lo, hi) >= 1) return 0;
        if (lo == hi && g.eval(lo) == 0) return 0;
      }
    }
    a.refineStep();
    b.refineStep();
  }
}

inline bool operator==(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
  return compare(a, b) == 0;
}
inline bool operator<(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
  return compare(a, b) < 0;
}

/// Same value, isolation width at most `width`.
inline RealAlgebraicNumber refine(const RealAlgebraicNumber& x, const Rational& width) {
  checkInput(width > 0, "refinement width must be positive");
  RealAlgebraicNumber r = x;
  r.refineBelowWidth(width);
  return r;
}

}  // namespace lazard
