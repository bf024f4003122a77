#pragma once

#include <algorithm>
#include <optional>

#include "lazard/rational.hpp"

namespace lazard {

/// Closed rational interval; an exact point is encoded lo == hi.
struct Interval {
  Rational lo, hi;

  Interval() : lo(0), hi(0) {}
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    checkInput(lo <= hi, "interval with lo > hi");
  }

  static Interval point(Rational v) { return Interval(v, v); }

  bool isPoint() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool containsZero() const { return contains(Rational(0)); }

  /// Sign when certain, nullopt when the interval straddles zero.
  std::optional<int> certainSign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == 0 && hi == 0) return 0;
    return std::nullopt;
  }
};

inline Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo + b.lo, a.hi + b.hi);
}

inline Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }
inline Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

inline Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval intervalPow(const Interval& a, unsigned e) {
  if (e == 0) return Interval::point(Rational(1));
  Interval r = a;
  for (unsigned i = 1; i < e; ++i) r = r * a;
  return r;
}

inline Interval scaleInterval(const Interval& a, const Rational& c) {
  if (c >= 0) return Interval(a.lo * c, a.hi * c);
  return Interval(a.hi * c, a.lo * c);
}

/// True when the two closed intervals are disjoint with a strictly positive gap
/// or meet only in configurations that still order them strictly.
inline bool strictlyBelow(const Interval& a, const Interval& b) { return a.hi < b.lo; }

}  // namespace lazard
