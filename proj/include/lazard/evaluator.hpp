#pragma once

#include <vector>

#include "lazard/unipoly.hpp"
#include "lazard/valuation.hpp"

namespace lazard {

/// A tuple of positive integers c making lexicographic comparison of a
/// valuation set equivalent to comparison of scalar products <c,v>:
/// c_i >= 1 + max over the set of sum_{j>i} c_j v_j.
struct Evaluator {
  std::vector<std::uint64_t> c;

  Evaluator() = default;
  explicit Evaluator(std::vector<std::uint64_t> exps) : c(std::move(exps)) {}
  unsigned size() const { return static_cast<unsigned>(c.size()); }
};

inline std::uint64_t scalarProduct(const Evaluator& c, const Valuation& v) {
  checkInput(c.size() == v.size(), "evaluator/valuation length mismatch");
  std::uint64_t s = 0;
  for (unsigned i = 0; i < v.size(); ++i) s += c.c[i] * v[i];
  return s;
}

/// Validity of the defining inequalities for a valuation set.
inline bool isEvaluatorFor(const Evaluator& c, const std::vector<Valuation>& V) {
  for (const auto& e : c.c)
    if (e < 1) return false;
  for (const auto& v : V) checkInput(v.size() == c.size(), "valuation length mismatch");
  const unsigned n = c.size();
  for (unsigned i = 0; i + 1 < n; ++i) {
    std::uint64_t worst = 0;
    for (const auto& v : V) {
      std::uint64_t s = 0;
      for (unsigned j = i + 1; j < n; ++j) s += c.c[j] * v[j];
      worst = std::max(worst, s);
    }
    if (c.c[i] < 1 + worst) return false;
  }
  return true;
}

/// Minimal recursive evaluator: c_n = cLast, then
/// c_i = 1 + max_v sum_{j>i} c_j v_j downwards.
inline Evaluator evaluatorFor(const std::vector<Valuation>& V, std::uint64_t cLast = 1) {
  checkInput(!V.empty(), "evaluator for an empty valuation set");
  checkInput(cLast >= 1, "evaluator entries must be positive");
  const unsigned n = V.front().size();
  for (const auto& v : V) checkInput(v.size() == n, "valuation length mismatch");
  Evaluator c;
  c.c.assign(n, 1);
  c.c[n - 1] = cLast;
  for (int i = static_cast<int>(n) - 2; i >= 0; --i) {
    std::uint64_t worst = 0;
    for (const auto& v : V) {
      std::uint64_t s = 0;
      for (unsigned j = static_cast<unsigned>(i) + 1; j < n; ++j) s += c.c[j] * v[j];
      worst = std::max(worst, s);
    }
    c.c[static_cast<unsigned>(i)] = 1 + worst;
  }
  return c;
}

/// The curve s -> p + (s^{c_1}, ..., s^{c_n}).
struct MonomialCurve {
  std::vector<Rational> basePoint;
  Evaluator exponents;
};

inline Unipoly unipolyPow(const Unipoly& p, std::uint64_t e) {
  Unipoly r = Unipoly::constant(Rational(1));
  Unipoly b = p;
  while (e > 0) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e > 0) b = b * b;
  }
  return r;
}

/// Order at s = 0 of g(p + (s^{c_1}, ..., s^{c_n})), by direct expansion as a
/// univariate polynomial in s.
inline unsigned curveOrder(const Polynomial& g, const MonomialCurve& curve) {
  checkInput(!g.isZero(), "curve order of the zero polynomial");
  const unsigned n = g.varCount();
  checkInput(curve.basePoint.size() >= n && curve.exponents.size() >= n,
             "curve dimension mismatch");
  for (const auto& e : curve.exponents.c) checkInput(e >= 1, "curve exponents must be positive");
  Unipoly acc;
  for (const auto& [m, coef] : g.terms()) {
    Unipoly term = Unipoly::constant(coef);
    for (unsigned i = 0; i < n; ++i) {
      if (m.exponents[i] == 0) continue;
      std::vector<Rational> lin(static_cast<std::size_t>(curve.exponents.c[i]) + 1, Rational(0));
      lin[0] = curve.basePoint[i];
      lin.back() = 1;
      term = term * unipolyPow(Unipoly(std::move(lin)), m.exponents[i]);
    }
    acc = acc + term;
  }
  checkInput(!acc.isZero(), "curve substitution vanished: exponents are not an evaluator here");
  for (std::size_t k = 0; k < acc.c.size(); ++k)
    if (acc.c[k] != 0) return static_cast<unsigned>(k);
  throw internal_error("unreachable: nonzero polynomial without nonzero coefficient");
}

}  // namespace lazard
