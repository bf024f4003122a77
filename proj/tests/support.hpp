#pragma once

// Shared test helpers: seeded generators and independent oracles kept apart
// from the implementation paths they check.

#include <random>
#include <vector>

#include "lazard/gcd.hpp"
#include "lazard/polynomial.hpp"
#include "lazard/valuation.hpp"

namespace lazard::testing {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t next() { return eng(); }
  long intIn(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational smallRational() {
    long num = intIn(-6, 6);
    long den = intIn(1, 4);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational nonzeroSmallRational() {
    while (true) {
      Rational q = smallRational();
      if (q != 0) return q;
    }
  }
};

/// Random sparse polynomial with per-variable degree at most maxDeg.
inline Polynomial randomPolynomial(Rng& rng, unsigned varCount, unsigned maxDeg, unsigned maxTerms) {
  Polynomial f(varCount);
  unsigned terms = static_cast<unsigned>(rng.intIn(1, static_cast<long>(maxTerms)));
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m(varCount);
    for (unsigned i = 0; i < varCount; ++i)
      m.exponents[i] = static_cast<std::uint32_t>(rng.intIn(0, static_cast<long>(maxDeg)));
    f.addTerm(m, Rational(rng.intIn(-9, 9)));
  }
  return f;
}

inline Polynomial randomNonzeroPolynomial(Rng& rng, unsigned varCount, unsigned maxDeg,
                                          unsigned maxTerms) {
  while (true) {
    Polynomial f = randomPolynomial(rng, varCount, maxDeg, maxTerms);
    if (!f.isZero()) return f;
  }
}

/// Random polynomial with a typically nontrivial valuation at alpha: random
/// exponents on the shifted monomials prod (x_i - alpha_i)^{u_i}.
inline Polynomial randomShiftedPolynomial(Rng& rng, unsigned varCount,
                                          const std::vector<Rational>& alpha, unsigned maxDeg,
                                          unsigned maxTerms) {
  while (true) {
    Polynomial f(varCount);
    unsigned terms = static_cast<unsigned>(rng.intIn(1, static_cast<long>(maxTerms)));
    for (unsigned t = 0; t < terms; ++t) {
      Polynomial term = Polynomial::constant(varCount, Rational(rng.intIn(-9, 9)));
      for (unsigned i = 0; i < varCount; ++i) {
        unsigned e = static_cast<unsigned>(rng.intIn(0, static_cast<long>(maxDeg)));
        if (e == 0) continue;
        Polynomial lin = Polynomial::variable(varCount, i) -
                         Polynomial::constant(varCount, alpha[i]);
        term = term * lin.pow(e);
      }
      f += term;
    }
    if (!f.isZero()) return f;
  }
}

/// Lex-least exponent tuple with nonzero coefficient in the full shifted
/// expansion: the brute-force valuation oracle.
inline Valuation bruteForceValuation(const Polynomial& f, const std::vector<Rational>& alpha) {
  Polynomial shifted = expandAbout(f, alpha, f.varCount());
  const Monomial* best = nullptr;
  for (const auto& [m, c] : shifted.terms()) {
    if (!best || lexCompareExponents(m, *best) < 0) best = &m;
  }
  Valuation v;
  v.entries.assign(best->exponents.begin(), best->exponents.end());
  return v;
}

/// Fraction-free Bareiss determinant over the polynomial ring.
inline Polynomial bareissDeterminant(std::vector<std::vector<Polynomial>> M, unsigned varCount) {
  const std::size_t n = M.size();
  if (n == 0) return Polynomial::constant(varCount, 1);
  int sign = 1;
  Polynomial prev = Polynomial::constant(varCount, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].isZero()) {
      std::size_t swapRow = k;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!M[j][k].isZero()) {
          swapRow = j;
          break;
        }
      if (swapRow == k) return Polynomial(varCount);  // singular
      std::swap(M[k], M[swapRow]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        M[i][j] = exactDivide(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
    prev = M[k][k];
  }
  Polynomial det = M[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

/// Sylvester-matrix resultant oracle.
inline Polynomial sylvesterResultant(const Polynomial& f, const Polynomial& g, unsigned var) {
  int m = f.degree(var), n = g.degree(var);
  auto F = f.coefficientsWrt(var), G = g.coefficientsWrt(var);
  std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Polynomial>> M(size,
                                         std::vector<Polynomial>(size, Polynomial(f.varCount())));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = F[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = G[static_cast<std::size_t>(n - k)];
  return bareissDeterminant(std::move(M), f.varCount());
}

}  // namespace lazard::testing
