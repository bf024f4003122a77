#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lazard/tower.hpp"

namespace lazard {

/// Tuple of naturals compared lexicographically (x1 most significant).
struct Valuation {
  std::vector<std::uint32_t> entries;

  Valuation() = default;
  explicit Valuation(std::vector<std::uint32_t> e) : entries(std::move(e)) {}

  unsigned size() const { return static_cast<unsigned>(entries.size()); }
  std::uint32_t operator[](unsigned i) const { return entries[i]; }
  bool operator==(const Valuation& o) const { return entries == o.entries; }
  bool operator!=(const Valuation& o) const { return !(*this == o); }

  bool isZeroTuple() const {
    for (auto e : entries)
      if (e != 0) return false;
    return true;
  }
};

inline int lexCompare(const Valuation& a, const Valuation& b) {
  checkInput(a.size() == b.size(), "valuation length mismatch");
  for (unsigned i = 0; i < a.size(); ++i)
    if (a.entries[i] != b.entries[i]) return a.entries[i] < b.entries[i] ? -1 : 1;
  return 0;
}

inline Valuation lexMin(const Valuation& a, const Valuation& b) {
  return lexCompare(a, b) <= 0 ? a : b;
}

inline Valuation operator+(const Valuation& a, const Valuation& b) {
  checkInput(a.size() == b.size(), "valuation length mismatch");
  Valuation r = a;
  for (unsigned i = 0; i < a.size(); ++i) r.entries[i] += b.entries[i];
  return r;
}

inline std::string toString(const Valuation& v) {
  std::string s = "(";
  for (unsigned i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v.entries[i]);
  }
  return s + ")";
}

/// Result of evaluating f at a sample point of one lower dimension: the
/// nonzero univariate residual (tower coefficients) and the exponents divided
/// out along the way.
struct LazardEvalResult {
  Polynomial residual;
  Valuation vTuple;
};

/// The evaluation process: at each level divide out the largest power of
/// (x_i - alpha_i), then substitute alpha_i. Division and substitution are
/// fused as scaled-derivative extraction: f / (x-a)^v at x=a equals the v-th
/// Taylor coefficient of f at a.
inline LazardEvalResult lazardEvaluate(const Polynomial& f, const Tower& alpha) {
  checkInput(!f.isZero(), "Lazard evaluation of the zero polynomial");
  const unsigned n = f.varCount();
  checkInput(n >= 1, "Lazard evaluation needs at least one variable");
  checkInput(alpha.size() + 1 >= n, "sample point too short");

  Polynomial cur = f;
  Valuation v;
  for (unsigned i = 0; i + 1 < n; ++i) {
    int maxOrder = cur.degree(i);
    Polynomial g = cur;
    for (unsigned m = 0;; ++m) {
      checkInternal(static_cast<int>(m) <= std::max(maxOrder, 0),
                    "Lazard evaluation residual collapsed to zero");
      Polynomial h = substituteTower(g, alpha, n - i - 1);
      if (!h.isZero()) {
        v.entries.push_back(m);
        cur = std::move(h);
        break;
      }
      g = g.derivative(i).scaled(Rational(1, static_cast<long>(m) + 1));
    }
  }
  return LazardEvalResult{std::move(cur), std::move(v)};
}

inline LazardEvalResult lazardEvaluate(const Polynomial& f, const std::vector<Rational>& alpha) {
  return lazardEvaluate(f, Tower::fromRationals(alpha));
}

/// Lazard valuation of f at a full-dimension point: the lex-least exponent
/// tuple with a nonzero coefficient in the expansion of f about the point.
/// Computed as the evaluation tuple extended by the multiplicity of the last
/// coordinate in the residual.
inline Valuation valuationAt(const Polynomial& f, const Tower& point) {
  checkInput(!f.isZero(), "valuation of the zero polynomial");
  const unsigned n = f.varCount();
  checkInput(point.size() >= n, "point dimension mismatch");
  LazardEvalResult ev = lazardEvaluate(f, point);
  Valuation v = ev.vTuple;
  v.entries.push_back(multiplicityAt(ev.residual, point, n - 1));
  return v;
}

inline Valuation valuationAt(const Polynomial& f, const std::vector<Rational>& point) {
  return valuationAt(f, Tower::fromRationals(point));
}

/// Order of f at a rational point: minimal total degree of a nonzero term of
/// the shifted expansion.
inline unsigned orderAt(const Polynomial& f, const std::vector<Rational>& alpha) {
  checkInput(!f.isZero(), "order of the zero polynomial");
  checkInput(alpha.size() >= f.varCount(), "point dimension mismatch");
  Polynomial shifted = expandAbout(f, alpha, f.varCount());
  return static_cast<unsigned>(shifted.terms().begin()->first.totalDegree());
}

/// Coefficient f^u(x_n) of prod (x_i - alpha_i)^{u_i} in the expansion of f
/// about alpha (first n-1 coordinates). May be zero.
inline Polynomial expansionCoefficient(const Polynomial& f, const std::vector<Rational>& alpha,
                                       const std::vector<std::uint32_t>& u) {
  checkInput(!f.isZero(), "expansion of the zero polynomial");
  const unsigned n = f.varCount();
  checkInput(n >= 1, "expansion needs at least one variable");
  checkInput(alpha.size() + 1 >= n && u.size() + 1 >= n, "expansion point dimension mismatch");
  Polynomial g = f;
  for (unsigned i = 0; i + 1 < n; ++i) {
    for (std::uint32_t k = 1; k <= u[i]; ++k)
      g = g.derivative(i).scaled(Rational(1, static_cast<long>(k)));
    g = g.substitute(i, alpha[i]);
  }
  return g;
}

/// Valuation-invariance check over a finite point list with a witness pair on
/// failure.
struct InvarianceReport {
  bool invariant = true;
  std::optional<Valuation> value;
  std::size_t witnessA = 0, witnessB = 0;
  Valuation valueA, valueB;
};

inline InvarianceReport valuationInvariantOn(const Polynomial& f, const std::vector<Tower>& points) {
  checkInput(!f.isZero(), "valuation of the zero polynomial");
  InvarianceReport report;
  for (std::size_t k = 0; k < points.size(); ++k) {
    Valuation v = valuationAt(f, points[k]);
    if (!report.value) {
      report.value = v;
      report.witnessA = k;
      report.valueA = v;
    } else if (v != *report.value) {
      report.invariant = false;
      report.witnessB = k;
      report.valueB = v;
      return report;
    }
  }
  return report;
}

}  // namespace lazard
