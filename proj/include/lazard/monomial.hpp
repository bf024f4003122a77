#pragma once

#include <cstdint>
#include <vector>

#include "lazard/errors.hpp"

namespace lazard {

/// Exponent tuple of a power product. The length always equals the ambient
/// ring's variable count; index i is the exponent of x_{i+1}.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  Monomial() = default;
  explicit Monomial(unsigned varCount) : exponents(varCount, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

  unsigned size() const { return static_cast<unsigned>(exponents.size()); }

  std::uint64_t totalDegree() const {
    std::uint64_t d = 0;
    for (auto e : exponents) d += e;
    return d;
  }

  bool operator==(const Monomial& o) const { return exponents == o.exponents; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  bool divides(const Monomial& o) const {
    if (size() != o.size()) return false;
    for (unsigned i = 0; i < size(); ++i)
      if (exponents[i] > o.exponents[i]) return false;
    return true;
  }

  Monomial times(const Monomial& o) const {
    checkInternal(size() == o.size(), "monomial length mismatch");
    Monomial r = *this;
    for (unsigned i = 0; i < size(); ++i) r.exponents[i] += o.exponents[i];
    return r;
  }

  Monomial dividedBy(const Monomial& o) const {
    checkInternal(o.divides(*this), "monomial division is not exact");
    Monomial r = *this;
    for (unsigned i = 0; i < size(); ++i) r.exponents[i] -= o.exponents[i];
    return r;
  }
};

/// Lexicographic comparison with x1 most significant; <0, 0, >0.
inline int lexCompareExponents(const Monomial& a, const Monomial& b) {
  checkInternal(a.size() == b.size(), "monomial length mismatch");
  for (unsigned i = 0; i < a.size(); ++i) {
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i] ? -1 : 1;
  }
  return 0;
}

/// Graded lexicographic comparison: total degree first, then lex.
inline int gradedLexCompare(const Monomial& a, const Monomial& b) {
  auto da = a.totalDegree(), db = b.totalDegree();
  if (da != db) return da < db ? -1 : 1;
  return lexCompareExponents(a, b);
}

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return gradedLexCompare(a, b) < 0; }
};

}  // namespace lazard
