#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lazard/gcd.hpp"
#include "lazard/resultant.hpp"

namespace lazard {

enum class ProvenanceKind { LeadingCoeff, TrailingCoeff, Discriminant, ResultantOfPair, MiddleCoeff };

inline const char* provenanceKindName(ProvenanceKind k) {
  switch (k) {
    case ProvenanceKind::LeadingCoeff: return "leading-coeff";
    case ProvenanceKind::TrailingCoeff: return "trailing-coeff";
    case ProvenanceKind::Discriminant: return "discriminant";
    case ProvenanceKind::ResultantOfPair: return "resultant-of-pair";
    case ProvenanceKind::MiddleCoeff: return "middle-coeff";
  }
  return "?";
}

/// Where a projection element came from: the class of the contribution and the
/// indices of the basis elements that produced it.
struct Provenance {
  ProvenanceKind kind;
  std::size_t source = 0;
  std::optional<std::size_t> source2;

  friend bool operator==(const Provenance& a, const Provenance& b) {
    return a.kind == b.kind && a.source == b.source && a.source2 == b.source2;
  }
  friend bool operator<(const Provenance& a, const Provenance& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.source != b.source) return a.source < b.source;
    return a.source2 < b.source2;
  }
};

struct ProjectionEntry {
  Polynomial poly;
  std::vector<Provenance> provenance;
};

/// Set of normalized projection polynomials in one fewer variable, each with
/// merged provenance, sorted canonically.
struct ProjectionSet {
  unsigned varCount = 0;
  std::vector<ProjectionEntry> entries;

  std::vector<Polynomial> polynomials() const {
    std::vector<Polynomial> ps;
    ps.reserve(entries.size());
    for (const auto& e : entries) ps.push_back(e.poly);
    return ps;
  }

  bool contains(const Polynomial& p) const {
    for (const auto& e : entries)
      if (e.poly == p) return true;
    return false;
  }
};

/// Normal form of a projection contribution living in the base ring: drop the
/// main variable, take the integer-primitive totally squarefree part with
/// positive leading coefficient. Constants carry no geometry and map to
/// nullopt.
inline std::optional<Polynomial> projectionNormalForm(const Polynomial& p) {
  if (p.isZero()) return std::nullopt;
  Polynomial q = p.dropLastVariable();
  if (q.isConstant()) return std::nullopt;
  return squarefreePartTotal(q);
}

namespace detail {

struct ProjectionBuilder {
  unsigned varCount;
  std::vector<ProjectionEntry> entries;

  void add(const Polynomial& raw, Provenance prov) {
    auto nf = projectionNormalForm(raw);
    if (!nf) return;
    for (auto& e : entries) {
      if (e.poly == *nf) {
        if (std::find(e.provenance.begin(), e.provenance.end(), prov) == e.provenance.end())
          e.provenance.push_back(prov);
        return;
      }
    }
    entries.push_back(ProjectionEntry{std::move(*nf), {prov}});
  }

  ProjectionSet finish() {
    std::sort(entries.begin(), entries.end(), [](const ProjectionEntry& a, const ProjectionEntry& b) {
      return comparePolynomials(a.poly, b.poly) < 0;
    });
    for (auto& e : entries) std::sort(e.provenance.begin(), e.provenance.end());
    return ProjectionSet{varCount, std::move(entries)};
  }
};

inline ProjectionSet projectBasis(const BasisSet& A, bool withTrailing, bool withMiddle) {
  checkInput(A.varCount >= 2, "projection needs at least two variables");
  checkInput(A.mainVar == A.varCount - 1, "projection expects the last variable as main");
  const unsigned v = A.mainVar;
  ProjectionBuilder builder{A.varCount - 1, {}};
  for (std::size_t i = 0; i < A.elements.size(); ++i) {
    const Polynomial& f = A.elements[i];
    auto cs = f.coefficientsWrt(v);
    builder.add(cs.back(), Provenance{ProvenanceKind::LeadingCoeff, i, std::nullopt});
    if (withTrailing && !cs.front().isZero())
      builder.add(cs.front(), Provenance{ProvenanceKind::TrailingCoeff, i, std::nullopt});
    if (withMiddle) {
      for (std::size_t k = 1; k + 1 < cs.size(); ++k) {
        if (!cs[k].isZero())
          builder.add(cs[k], Provenance{ProvenanceKind::MiddleCoeff, i, std::nullopt});
      }
    }
    if (f.degree(v) >= 2)
      builder.add(discriminant(f, v), Provenance{ProvenanceKind::Discriminant, i, std::nullopt});
  }
  for (std::size_t i = 0; i < A.elements.size(); ++i)
    for (std::size_t j = i + 1; j < A.elements.size(); ++j)
      builder.add(resultant(A.elements[i], A.elements[j], v),
                  Provenance{ProvenanceKind::ResultantOfPair, i, j});
  return builder.finish();
}

}  // namespace detail

/// Leading coefficients, trailing coefficients, discriminants, and pairwise
/// resultants of the basis, normalized.
inline ProjectionSet lazardProjection(const BasisSet& A) {
  return detail::projectBasis(A, /*withTrailing=*/true, /*withMiddle=*/false);
}

/// Additionally carries the middle coefficients.
inline ProjectionSet mccallumProjection(const BasisSet& A) {
  return detail::projectBasis(A, /*withTrailing=*/true, /*withMiddle=*/true);
}

/// Omits the trailing coefficients.
inline ProjectionSet brownMccallumProjection(const BasisSet& A) {
  return detail::projectBasis(A, /*withTrailing=*/false, /*withMiddle=*/false);
}

struct ProjectionStats {
  std::size_t count = 0;
  int maxTotalDegree = -1;
  long sumTotalDegrees = 0;
};

inline ProjectionStats projectionStats(const ProjectionSet& s) {
  ProjectionStats st;
  st.count = s.entries.size();
  for (const auto& e : s.entries) {
    int d = e.poly.totalDegree();
    st.maxTotalDegree = std::max(st.maxTotalDegree, d);
    st.sumTotalDegrees += d;
  }
  return st;
}

/// Size and containment report for the three operators on one basis.
struct ProjectionComparison {
  ProjectionSet brownMccallum, lazard, mccallum;
  ProjectionStats statsBM, statsL, statsM;
  bool bmSubsetOfL = false, lSubsetOfM = false;
  std::vector<Polynomial> inLNotInBM;  // strictness witnesses
  std::vector<Polynomial> inMNotInL;
};

inline ProjectionComparison compareProjections(const BasisSet& A) {
  ProjectionComparison r;
  r.brownMccallum = brownMccallumProjection(A);
  r.lazard = lazardProjection(A);
  r.mccallum = mccallumProjection(A);
  r.statsBM = projectionStats(r.brownMccallum);
  r.statsL = projectionStats(r.lazard);
  r.statsM = projectionStats(r.mccallum);
  r.bmSubsetOfL = true;
  for (const auto& e : r.brownMccallum.entries)
    if (!r.lazard.contains(e.poly)) r.bmSubsetOfL = false;
  r.lSubsetOfM = true;
  for (const auto& e : r.lazard.entries)
    if (!r.mccallum.contains(e.poly)) r.lSubsetOfM = false;
  for (const auto& e : r.lazard.entries)
    if (!r.brownMccallum.contains(e.poly)) r.inLNotInBM.push_back(e.poly);
  for (const auto& e : r.mccallum.entries)
    if (!r.lazard.contains(e.poly)) r.inMNotInL.push_back(e.poly);
  return r;
}

}  // namespace lazard
