#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lazard/algebraic.hpp"
#include "lazard/gcd.hpp"
#include "lazard/resultant.hpp"

namespace lazard {

/// A triangular sample point: coordinate k binds variable x_{k+1}. Every
/// coordinate carries a univariate integer defining polynomial (its own
/// variable only), so eliminations against the tower never degenerate.
class Tower {
 public:
  Tower() = default;
  explicit Tower(std::vector<RealAlgebraicNumber> coords) : coords_(std::move(coords)) {}

  static Tower fromRationals(const std::vector<Rational>& values) {
    std::vector<RealAlgebraicNumber> cs;
    cs.reserve(values.size());
    for (const auto& v : values) cs.push_back(RealAlgebraicNumber::fromRational(v));
    return Tower(std::move(cs));
  }

  unsigned size() const { return static_cast<unsigned>(coords_.size()); }
  bool empty() const { return coords_.empty(); }
  const RealAlgebraicNumber& coord(unsigned i) const { return coords_[i]; }
  const std::vector<RealAlgebraicNumber>& coords() const { return coords_; }

  bool isRational(unsigned i) const { return coords_[i].isRational(); }
  bool allRational() const {
    for (const auto& c : coords_)
      if (!c.isRational()) return false;
    return true;
  }

  Tower extended(RealAlgebraicNumber next) const {
    Tower t = *this;
    t.coords_.push_back(std::move(next));
    return t;
  }

  Tower prefix(unsigned k) const {
    checkInternal(k <= size(), "tower prefix too long");
    return Tower(std::vector<RealAlgebraicNumber>(coords_.begin(), coords_.begin() + k));
  }

  /// Replaces the defining polynomial of coordinate i by a divisor that still
  /// isolates the same root. Used when an elimination degenerates.
  void replaceDefiningPoly(unsigned i, Unipoly p) {
    coords_[i] = RealAlgebraicNumber::fromRoot(std::move(p), coords_[i].interval());
  }

 private:
  std::vector<RealAlgebraicNumber> coords_;
};

namespace detail {

/// Remainder of f under the defining polynomial of x_{var} (univariate with
/// rational coefficients), taken in x_{var}.
inline Polynomial reduceVariable(const Polynomial& f, unsigned var, const Unipoly& p) {
  int dp = p.degree();
  checkInternal(dp >= 1, "defining polynomial must have positive degree");
  if (f.degree(var) < dp) return f;
  auto R = f.coefficientsWrt(var);
  while (static_cast<int>(R.size()) - 1 >= dp) {
    Polynomial top = std::move(R.back());
    R.pop_back();
    if (top.isZero()) continue;
    std::size_t k = R.size() - static_cast<std::size_t>(dp);
    for (int j = 0; j < dp; ++j)
      R[k + static_cast<std::size_t>(j)] -= top.scaled(p.c[static_cast<std::size_t>(j)] / p.lc());
  }
  return Polynomial::fromCoefficientsWrt(f.varCount(), var, R);
}

}  // namespace detail

/// Substitutes rational coordinates and reduces algebraic ones to normal form
/// (degree in x_i below the defining degree). Purely representational; no
/// zero certification happens here.
inline Polynomial reduceAtTower(const Polynomial& f, const Tower& tower) {
  Polynomial g = f;
  unsigned bound = std::min(tower.size(), f.varCount());
  for (unsigned i = 0; i < bound; ++i) {
    if (!g.usesVariable(i)) continue;
    if (tower.isRational(i))
      g = g.substitute(i, tower.coord(i).rationalValue());
    else
      g = detail::reduceVariable(g, i, tower.coord(i).definingPoly());
  }
  return g;
}

/// Interval enclosure of f's value at the tower point; refinement of the
/// coordinates tightens it.
inline Interval evalIntervalAtTower(const Polynomial& f, const Tower& tower) {
  Interval acc = Interval::point(Rational(0));
  for (const auto& [m, c] : f.terms()) {
    Interval t = Interval::point(Rational(1));
    for (unsigned i = 0; i < f.varCount(); ++i) {
      if (m.exponents[i] == 0) continue;
      checkInternal(i < tower.size(), "tower does not cover an evaluated variable");
      t = t * intervalPow(tower.coord(i).interval(), m.exponents[i]);
    }
    acc = acc + scaleInterval(t, c);
  }
  return acc;
}

/// Univariate integer polynomial with the value of f at the tower point among
/// its roots: resultant elimination of every algebraic coordinate against
/// w - f. Never identically zero.
inline Unipoly normPolyAt(const Polynomial& f, const Tower& tower) {
  unsigned n = std::max(f.varCount(), tower.size());
  unsigned w = n;
  Polynomial F = Polynomial::variable(n + 1, w) - f.withVarCount(n + 1);
  for (unsigned i = 0; i < tower.size(); ++i) {
    if (!F.usesVariable(i)) continue;
    checkInternal(!tower.isRational(i), "unreduced rational coordinate in norm computation");
    Polynomial p = toPolynomial(tower.coord(i).definingPoly(), n + 1, i);
    F = detail::resultantAllowConstant(p, F, i);
    checkInternal(!F.isZero(), "norm elimination collapsed to zero");
  }
  Unipoly norm = toUnipoly(F, w);
  checkInternal(norm.degree() >= 1, "norm polynomial is constant");
  return norm;
}

/// Exact sign of an already-reduced polynomial in tower variables only.
/// Nonzero values separate from 0 by interval refinement; zero is certified
/// with a defining-polynomial gcd when a single algebraic coordinate is
/// involved, and with the norm's smallest-nonzero-root bound otherwise.
inline int certifySignReduced(const Polynomial& f, const Tower& tower) {
  if (f.isZero()) return 0;
  if (f.isConstant()) return signOf(f.constantValue());

  const unsigned quickRounds = 6;
  auto refineUsed = [&](unsigned steps) {
    for (unsigned i = 0; i < std::min(tower.size(), f.varCount()); ++i) {
      if (!f.usesVariable(i)) continue;
      for (unsigned s = 0; s < steps; ++s) tower.coord(i).refineStep();
    }
  };

  int onlyVar = -1;
  for (unsigned i = 0; i < f.varCount(); ++i) {
    if (!f.usesVariable(i)) continue;
    onlyVar = onlyVar == -1 ? static_cast<int>(i) : -2;
  }
  if (onlyVar >= 0) {
    // Single algebraic coordinate: the value vanishes exactly when the gcd of
    // f and the defining polynomial keeps a root inside the isolating
    // interval (whose endpoints are never roots of the defining polynomial).
    const RealAlgebraicNumber& a = tower.coord(static_cast<unsigned>(onlyVar));
    Unipoly g = toUnipoly(f, static_cast<unsigned>(onlyVar));
    if (a.interval().isPoint()) return signOf(g.eval(a.interval().lo));
    Unipoly d = gcdUni(g, a.definingPoly());
    if (d.degree() >= 1 && sturmCountOpen(d, a.interval().lo, a.interval().hi) >= 1) return 0;
    while (true) {
      Interval v = evalIntervalAtTower(f, tower);
      if (!v.containsZero()) return v.lo > 0 ? 1 : -1;
      a.refineStep();
    }
  }

  for (unsigned round = 0; round < quickRounds; ++round) {
    Interval v = evalIntervalAtTower(f, tower);
    if (!v.containsZero()) return v.lo > 0 ? 1 : -1;
    if (v.isPoint()) return 0;
    refineUsed(2);
  }

  Unipoly norm = normPolyAt(f, tower);
  std::size_t m = 0;
  while (m < norm.c.size() && norm.c[m] == 0) ++m;
  if (m == 0) {
    // 0 is not a root of the norm, so the value is nonzero.
    while (true) {
      Interval v = evalIntervalAtTower(f, tower);
      if (!v.containsZero()) return v.lo > 0 ? 1 : -1;
      refineUsed(2);
    }
  }
  // Any nonzero root of the norm has |root| >= bound.
  Rational maxRatio(0);
  for (std::size_t k = m + 1; k < norm.c.size(); ++k) {
    Rational ratio = abs(Rational(norm.c[k] / norm.c[m]));
    if (ratio > maxRatio) maxRatio = ratio;
  }
  Rational bound = Rational(1) / (1 + maxRatio);
  while (true) {
    Interval v = evalIntervalAtTower(f, tower);
    if (!v.containsZero()) return v.lo > 0 ? 1 : -1;
    if (-bound < v.lo && v.hi < bound) return 0;
    refineUsed(2);
  }
}

/// True when the value of f at the tower point is exactly zero.
inline bool towerValueZero(const Polynomial& f, const Tower& tower) {
  return certifySignReduced(reduceAtTower(f, tower), tower) == 0;
}

/// Exact sign of f at the tower point. Requires the tower to cover every
/// variable of f.
inline int signAt(const Polynomial& f, const Tower& tower) {
  checkInput(f.varCount() <= tower.size(), "tower does not cover all variables");
  return certifySignReduced(reduceAtTower(f, tower), tower);
}

inline int signAt(const Polynomial& f, const std::vector<Rational>& point) {
  return signAt(f, Tower::fromRationals(point));
}

/// Substitutes the tower into all but the trailing `keep` variables and
/// reduces; coefficient groups whose value at the tower point is certified
/// zero are removed, so the result is zero exactly when the value is.
inline Polynomial substituteTower(const Polynomial& f, const Tower& tower, unsigned keep) {
  checkInput(keep <= f.varCount(), "keep count exceeds variable count");
  unsigned bound = f.varCount() - keep;
  checkInput(tower.size() >= bound, "tower does not cover the substituted variables");
  Polynomial g = f;
  for (unsigned i = 0; i < bound; ++i) {
    if (!g.usesVariable(i)) continue;
    if (tower.isRational(i))
      g = g.substitute(i, tower.coord(i).rationalValue());
    else
      g = detail::reduceVariable(g, i, tower.coord(i).definingPoly());
  }
  // Group by the free-variable part and certify each tower coefficient.
  std::map<Monomial, Polynomial, GradedLexLess> groups;
  for (const auto& [m, c] : g.terms()) {
    Monomial freePart(f.varCount());
    Monomial towerPart(f.varCount());
    for (unsigned i = 0; i < f.varCount(); ++i) {
      if (i < bound)
        towerPart.exponents[i] = m.exponents[i];
      else
        freePart.exponents[i] = m.exponents[i];
    }
    auto [it, inserted] = groups.emplace(freePart, Polynomial(f.varCount()));
    it->second.addTerm(towerPart, c);
  }
  Polynomial out(f.varCount());
  for (const auto& [freePart, coeff] : groups) {
    if (coeff.isConstant() ? coeff.constantValue() == 0 : certifySignReduced(coeff, tower) == 0)
      continue;
    for (const auto& [m, c] : coeff.terms()) out.addTerm(m.times(freePart), c);
  }
  return out;
}

namespace detail {

/// Last value-nonzero element of a pseudo-remainder sequence of A and B wrt
/// x_{var} over the prefix tower: the gcd of the specialized polynomials up
/// to a nonzero constant. Inputs must be pruned with nonzero values.
inline Polynomial chainGcdAtTower(Polynomial A, Polynomial B, const Tower& prefix, unsigned var) {
  if (A.degree(var) < B.degree(var)) std::swap(A, B);
  while (true) {
    if (B.degree(var) <= 0) return B;
    Polynomial R = prem(A, B, var);
    R = substituteTower(R, prefix, R.varCount() - std::min(R.varCount(), prefix.size()));
    if (R.isZero()) return B;
    R = primitivePart(R);
    A = std::move(B);
    B = std::move(R);
  }
}

/// The iterated gcd representatives Q_0 = P, Q_{i+1} ~ gcd(Q_i, dQ_i/dx_var)
/// at the tower point. The multiplicity of a root of P's value is the number
/// of consecutive Q_i it stays a root of.
inline std::vector<Polynomial> gcdChainAtTower(const Polynomial& P, const Tower& prefix,
                                               unsigned var) {
  std::vector<Polynomial> gcds;
  Polynomial Q = P;
  while (Q.degree(var) >= 1) {
    gcds.push_back(Q);
    Polynomial d = substituteTower(Q.derivative(var),
                                   prefix, Q.varCount() - std::min(Q.varCount(), prefix.size()));
    Polynomial g = chainGcdAtTower(Q, std::move(d), prefix, var);
    if (g.degree(var) <= 0) break;
    Q = primitivePart(g);
  }
  return gcds;
}

/// Sign of the value of f with x_{var} replaced by the rational t, over the
/// prefix tower.
inline int signAtSection(const Polynomial& f, const Tower& prefix, unsigned var,
                         const Rational& t) {
  return certifySignReduced(reduceAtTower(f.substitute(var, t), prefix), prefix);
}

/// Whether the one root of `sq` isolated by iv is also a root of the value of
/// T, where every root of T's value inside iv is known to be a root of sq and
/// T's value is squarefree. Decided by an endpoint sign change.
inline bool sharedRootInside(const Polynomial& T, const Tower& prefix, unsigned var,
                             const Interval& iv) {
  if (T.degree(var) <= 0) return false;
  if (iv.isPoint()) return signAtSection(T, prefix, var, iv.lo) == 0;
  int sa = signAtSection(T, prefix, var, iv.lo);
  int sb = signAtSection(T, prefix, var, iv.hi);
  checkInternal(sa != 0 && sb != 0, "interval endpoint hit a root of the gcd");
  return sa != sb;
}

}  // namespace detail

/// First j with the j-th scaled derivative of f (wrt x_{var}) nonzero at the
/// tower point; this is the multiplicity of the point's var-coordinate as a
/// root of f. The tower must cover all variables of f. For an algebraic
/// coordinate the scan runs through gcd chains against the coordinate's
/// defining polynomial, so no derivative value needs a zero certificate.
inline unsigned multiplicityAt(const Polynomial& f, const Tower& tower, unsigned var) {
  int dv = f.degree(var);
  checkInternal(dv >= 0, "multiplicity of the zero polynomial");
  checkInput(var < tower.size(), "tower does not cover the scanned variable");
  const RealAlgebraicNumber& c = tower.coord(var);
  if (!c.isRational()) {
    Tower prefix = tower.prefix(var);
    Polynomial P = substituteTower(f, prefix, f.varCount() - var);
    checkInternal(!P.isZero(), "multiplicity of a value-zero polynomial");
    if (P.degree(var) <= 0) return 0;
    Polynomial sq = toPolynomial(c.definingPoly(), P.varCount(), var);
    unsigned m = 0;
    for (const Polynomial& Qi : detail::gcdChainAtTower(P, prefix, var)) {
      Polynomial T = detail::chainGcdAtTower(sq, Qi, prefix, var);
      if (!detail::sharedRootInside(primitivePart(T), prefix, var, c.interval())) break;
      ++m;
    }
    return m;
  }
  Polynomial g = f;
  for (unsigned j = 0; j <= static_cast<unsigned>(dv); ++j) {
    if (signAt(g, tower) != 0) return j;
    g = g.derivative(var).scaled(Rational(1, static_cast<long>(j) + 1));
  }
  throw internal_error("multiplicity scan exhausted: value-zero polynomial");
}

/// Real roots (with multiplicities) of f in x_{var} over the tower point.
/// f must live in var+1 variables with var == tower.size(); the value of f at
/// the tower point must be a nonzero polynomial in x_{var}.
inline std::vector<std::pair<RealAlgebraicNumber, unsigned>> isolateRootsAtTower(
    const Polynomial& f, const Tower& baseTower, unsigned var) {
  checkInput(var == baseTower.size(), "root isolation variable must extend the tower");
  checkInput(f.varCount() == var + 1, "polynomial ring does not match the tower");
  Polynomial P = substituteTower(f, baseTower, 1);
  checkInternal(!P.isZero(), "root isolation over a value-zero polynomial");

  std::vector<std::pair<RealAlgebraicNumber, unsigned>> out;

  bool algebraic = false;
  for (unsigned i = 0; i < var; ++i)
    if (P.usesVariable(i)) algebraic = true;

  if (!algebraic) {
    Unipoly u = toUnipoly(P, var);
    if (u.degree() < 1) return out;
    for (auto& r : isolateRootsDetailed(u))
      out.emplace_back(RealAlgebraicNumber::fromRoot(std::move(r.factor), r.iv), r.multiplicity);
    return out;
  }

  // Candidate roots come from eliminating the algebraic coordinates. If an
  // elimination collapses (the candidate polynomial vanishes on a sibling
  // branch of a reducible defining polynomial), the defining polynomial is
  // split by a gcd and the elimination retried.
  Tower tower = baseTower;
  Polynomial C = P;
  for (unsigned i = 0; i < var; ++i) {
    while (C.usesVariable(i)) {
      checkInternal(!tower.isRational(i), "rational coordinate survived substitution");
      Polynomial p = toPolynomial(tower.coord(i).definingPoly(), f.varCount(), i);
      Polynomial r = detail::resultantAllowConstant(p, C, i);
      if (!r.isZero()) {
        C = std::move(r);
        break;
      }
      Polynomial gmv = lazard::gcd(p, C);
      Unipoly gu = toUnipoly(gmv, i);
      checkInternal(gu.degree() >= 1, "degenerate elimination without a common factor");
      Unipoly hu = exactDivide(tower.coord(i).definingPoly(), gu);
      const Interval& iv = tower.coord(i).interval();
      unsigned inG = sturmCountOpen(gu, iv.lo, iv.hi);
      tower.replaceDefiningPoly(i, inG == 1 ? primitivePart(gu) : primitivePart(hu));
      return isolateRootsAtTower(f, tower, var);  // retry with the refined tower
    }
  }
  Unipoly cand = toUnipoly(C, var);
  if (cand.degree() < 1) return out;
  Unipoly sq = exactDivide(cand, gcdUni(cand, cand.derivative()));
  sq = primitivePart(sq);
  if (sq.degree() < 1) return out;

  std::vector<IsolatedRoot> candidates;
  for (Interval& iv : isolateSquarefreeRoots(sq))
    candidates.push_back(IsolatedRoot{sq, std::move(iv), 1});
  sortAndSeparate(candidates);

  // When the specialized polynomial is squarefree (its discriminant-like
  // resultant does not vanish at the tower point), every root is simple and
  // candidate acceptance reduces to a sign change across the isolating
  // interval: the interval holds at most this one root of the value. With
  // multiple roots, multiplicities come from the iterated gcd chain tested
  // against the candidate polynomial, again by endpoint signs.
  bool simpleRoots = false;
  if (P.degree(var) >= 1) {
    Polynomial disc = detail::resultantAllowConstant(P, P.derivative(var), var);
    simpleRoots = certifySignReduced(reduceAtTower(disc, tower), tower) != 0;
  }
  std::vector<Polynomial> sharedFactors;  // T_i ~ gcd(sq, Q_i) at the point
  if (!simpleRoots) {
    Polynomial sqPoly = toPolynomial(sq, f.varCount(), var);
    for (const Polynomial& Qi : detail::gcdChainAtTower(P, tower, var))
      sharedFactors.push_back(primitivePart(detail::chainGcdAtTower(sqPoly, Qi, tower, var)));
  }
  for (const IsolatedRoot& c : candidates) {
    if (simpleRoots) {
      if (detail::sharedRootInside(P, tower, var, c.iv))
        out.emplace_back(RealAlgebraicNumber::fromRoot(c.factor, c.iv), 1u);
      continue;
    }
    unsigned mult = 0;
    for (const Polynomial& T : sharedFactors) {
      if (!detail::sharedRootInside(T, tower, var, c.iv)) break;
      ++mult;
    }
    if (mult > 0) out.emplace_back(RealAlgebraicNumber::fromRoot(c.factor, c.iv), mult);
  }
  std::uint64_t total = 0;
  for (const auto& [root, mult] : out) total += mult;
  checkInternal(total <= static_cast<std::uint64_t>(P.degree(var)),
                "root multiplicities exceed the degree");
  return out;
}

}  // namespace lazard
