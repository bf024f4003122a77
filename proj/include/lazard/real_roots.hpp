#pragma once

#include <utility>
#include <vector>

#include "lazard/interval.hpp"
#include "lazard/unipoly.hpp"

namespace lazard {

/// Power of two B with every real root of f strictly inside (-B, B).
inline Rational rootBoundPow2(const Unipoly& f) {
  checkInput(!f.isZero(), "root bound of zero polynomial");
  Rational maxRatio(0);
  for (std::size_t k = 0; k + 1 < f.c.size(); ++k) {
    Rational ratio = abs(Rational(f.c[k] / f.lc()));
    if (ratio > maxRatio) maxRatio = ratio;
  }
  Rational cauchy = 1 + maxRatio;
  Rational b(1);
  while (b < cauchy) b *= 2;
  return b * 2;  // strict margin, keeps endpoints clear of roots
}

namespace detail {

/// Descartes bound on the number of roots of f in the open interval (a, b).
inline unsigned descartesCount(const Unipoly& f, const Rational& a, const Rational& b) {
  std::size_t d = static_cast<std::size_t>(f.degree());
  Unipoly q = f.shifted(a).scaledArg(b - a);  // roots of interest now in (0,1)
  q = q.reversed(d).shifted(Rational(1));
  return q.signVariations();
}

struct RootAccumulator {
  std::vector<Interval> out;
};

inline void isolateSquarefreeRec(const Unipoly& f, const Rational& a, const Rational& b,
                                 RootAccumulator& acc) {
  unsigned v = descartesCount(f, a, b);
  if (v == 0) return;
  Rational m = (a + b) / 2;
  if (v == 1) {
    // One dyadic evaluation often pins the root exactly and keeps later
    // sample points rational.
    if (f.eval(m) == 0)
      acc.out.push_back(Interval::point(m));
    else
      acc.out.emplace_back(a, b);
    return;
  }
  isolateSquarefreeRec(f, a, m, acc);
  if (f.eval(m) == 0) acc.out.push_back(Interval::point(m));
  isolateSquarefreeRec(f, m, b, acc);
}

}  // namespace detail

/// Isolating intervals for the real roots of a squarefree polynomial, in
/// increasing order. Open intervals have dyadic endpoints which are not roots;
/// exact rational roots come back as points.
inline std::vector<Interval> isolateSquarefreeRoots(const Unipoly& f) {
  checkInput(!f.isZero(), "root isolation of zero polynomial");
  if (f.degree() < 1) return {};
  Rational b = rootBoundPow2(f);
  detail::RootAccumulator acc;
  detail::isolateSquarefreeRec(f, -b, b, acc);
  return std::move(acc.out);
}

/// One isolated real root: the squarefree primitive factor it belongs to, an
/// isolating interval, and its multiplicity in the original polynomial.
struct IsolatedRoot {
  Unipoly factor;
  Interval iv;
  unsigned multiplicity = 1;
};

/// One bisection step. Point intervals are final; open intervals keep exactly
/// one simple root of `factor` strictly inside. Endpoints may be other roots
/// of the factor (bisection midpoints that hit roots exactly), so when the
/// endpoint signs are unusable the surviving half is picked by the parity of
/// the Descartes bound: at most one root inside makes an odd bound exact.
inline void refineRootStep(const Unipoly& factor, Interval& iv) {
  if (iv.isPoint()) return;
  Rational m = iv.mid();
  Rational fm = factor.eval(m);
  if (fm == 0) {
    iv = Interval::point(m);
    return;
  }
  int sa = signOf(factor.eval(iv.lo));
  int sb = signOf(factor.eval(iv.hi));
  bool keepLeft;
  if (sa != 0 && sb != 0)
    keepLeft = sa != signOf(fm);
  else
    keepLeft = (detail::descartesCount(factor, iv.lo, m) & 1u) == 1;
  iv = keepLeft ? Interval(iv.lo, m) : Interval(m, iv.hi);
}

inline void refineRootBelowWidth(const Unipoly& factor, Interval& iv, const Rational& width) {
  while (!iv.isPoint() && iv.width() > width) refineRootStep(factor, iv);
}

/// Refines until consecutive roots are strictly separated (hi_k < lo_{k+1})
/// and returns them sorted. All roots must be pairwise distinct reals.
inline void sortAndSeparate(std::vector<IsolatedRoot>& roots) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(roots.begin(), roots.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.iv.lo < y.iv.lo; });
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      if (roots[i].iv.hi < roots[i + 1].iv.lo) continue;
      refineRootStep(roots[i].factor, roots[i].iv);
      refineRootStep(roots[i + 1].factor, roots[i + 1].iv);
      changed = true;
    }
  }
}

/// Real roots of an arbitrary nonzero univariate polynomial with factors and
/// multiplicities, strictly separated and in increasing order.
inline std::vector<IsolatedRoot> isolateRootsDetailed(const Unipoly& f) {
  checkInput(!f.isZero(), "root isolation of zero polynomial");
  std::vector<IsolatedRoot> roots;
  for (auto& [factor, mult] : yunDecomposition(f)) {
    for (Interval& iv : isolateSquarefreeRoots(factor))
      roots.push_back(IsolatedRoot{factor, std::move(iv), mult});
  }
  sortAndSeparate(roots);
  return roots;
}

/// Isolating intervals and multiplicities only, increasing order.
inline std::vector<std::pair<Interval, unsigned>> isolateRealRoots(const Unipoly& f) {
  std::vector<std::pair<Interval, unsigned>> out;
  for (auto& r : isolateRootsDetailed(f)) out.emplace_back(r.iv, r.multiplicity);
  return out;
}

inline std::vector<std::pair<Interval, unsigned>> isolateRealRoots(const Polynomial& f,
                                                                   unsigned var) {
  return isolateRealRoots(toUnipoly(f, var));
}

// ---------------------------------------------------------------------------
// Sturm sequences (root-counting cross-check and exact interval queries).
// ---------------------------------------------------------------------------

inline std::vector<Unipoly> sturmSequence(const Unipoly& f) {
  std::vector<Unipoly> seq;
  seq.push_back(f);
  Unipoly d = f.derivative();
  if (!d.isZero()) seq.push_back(d);
  while (seq.size() >= 2 && !seq.back().isZero()) {
    Unipoly r = divrem(seq[seq.size() - 2], seq.back()).second;
    if (r.isZero()) break;
    seq.push_back(-r);
  }
  return seq;
}

inline unsigned sturmVariationsAt(const std::vector<Unipoly>& seq, const Rational& x) {
  unsigned v = 0;
  int prev = 0;
  for (const auto& p : seq) {
    int s = signOf(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

/// Number of distinct real roots in the open interval (a, b); requires
/// f(a) != 0 and f(b) != 0.
inline unsigned sturmCountOpen(const Unipoly& f, const Rational& a, const Rational& b) {
  checkInput(!f.isZero(), "Sturm count of zero polynomial");
  checkInput(a <= b, "Sturm count over an empty interval");
  checkInternal(f.eval(a) != 0 && f.eval(b) != 0, "Sturm count with a root at an endpoint");
  auto seq = sturmSequence(f);
  unsigned va = sturmVariationsAt(seq, a), vb = sturmVariationsAt(seq, b);
  checkInternal(va >= vb, "Sturm variation count decreased the wrong way");
  return va - vb;
}

inline unsigned countDistinctRealRoots(const Unipoly& f) {
  checkInput(!f.isZero(), "Sturm count of zero polynomial");
  if (f.degree() < 1) return 0;
  Rational b = rootBoundPow2(f);
  return sturmCountOpen(f, -b, b);
}

}  // namespace lazard
