#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lazard/projection.hpp"
#include "lazard/valuation.hpp"

namespace lazard {

/// Collins-style cell index: component k odd means the cell is a sector at
/// level k, even means a section, counted bottom-up.
using CellIndex = std::vector<std::uint32_t>;

inline int compareCellIndex(const CellIndex& a, const CellIndex& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

inline std::string toString(const CellIndex& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

struct Cell {
  CellIndex index;
  Tower sample;
  std::vector<Valuation> signatures;  // per level input polynomial
  std::vector<int> signs;             // matching exact signs at the sample
};

/// The 2k+1 cells over one base cell: sections at the isolated roots of the
/// lifted basis product, sectors with rational sample coordinates between and
/// beyond them.
struct Stack {
  Cell base;
  std::vector<std::pair<RealAlgebraicNumber, unsigned>> sections;  // root, multiplicity
  std::vector<Cell> cells;
};

struct Level {
  std::vector<Polynomial> inputs;    // polynomials handled at this level
  std::vector<Polynomial> contents;  // nonconstant contents passed down
  BasisSet basis;
  std::optional<ProjectionSet> projection;  // absent at level 1
};

struct Decomposition {
  unsigned dimension = 0;
  std::vector<Polynomial> inputs;                // original nonconstant inputs
  std::vector<Level> levels;                     // levels[k-1] describes level k
  std::vector<std::vector<Cell>> cellsPerLevel;  // sorted by index

  const std::vector<Cell>& cells() const { return cellsPerLevel.back(); }

  std::vector<const ProjectionSet*> perLevelProjections() const {
    std::vector<const ProjectionSet*> ps;
    for (const auto& l : levels)
      if (l.projection) ps.push_back(&*l.projection);
    return ps;
  }
};

namespace detail {

inline void separateSections(std::vector<std::pair<RealAlgebraicNumber, unsigned>>& roots) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      if (roots[i].first.interval().hi < roots[i + 1].first.interval().lo) continue;
      roots[i].first.refineStep();
      roots[i + 1].first.refineStep();
      again = true;
    }
  }
}

inline Rational sectorSampleBetween(const RealAlgebraicNumber& below,
                                    const RealAlgebraicNumber& above) {
  return Rational((below.interval().hi + above.interval().lo) / 2);
}

}  // namespace detail

/// Lifts one base cell: evaluates every basis element at the sample point,
/// isolates the real roots of the residual product and builds the stack. The
/// roots are isolated factor by factor and merged, which keeps each section's
/// defining polynomial small; coinciding roots add their multiplicities.
/// Signatures are left empty; the driver fills them per level.
inline Stack liftOverPoint(const BasisSet& B, const Cell& base) {
  const unsigned level = base.sample.size() + 1;
  const unsigned var = level - 1;
  checkInput(B.elements.empty() || (B.varCount == level && B.mainVar == var),
             "basis ring does not match the base cell");

  std::vector<std::pair<RealAlgebraicNumber, unsigned>> roots;
  for (const Polynomial& f : B.elements) {
    LazardEvalResult ev = lazardEvaluate(f, base.sample);
    for (auto& [root, mult] : isolateRootsAtTower(ev.residual, base.sample, var)) {
      bool merged = false;
      for (auto& [existing, m] : roots) {
        if (compare(existing, root) == 0) {
          m += mult;
          merged = true;
          break;
        }
      }
      if (!merged) roots.emplace_back(std::move(root), mult);
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  detail::separateSections(roots);

  Stack stack;
  stack.base = base;
  stack.sections = roots;
  const std::size_t k = roots.size();
  auto pushCell = [&](std::uint32_t j, RealAlgebraicNumber coord) {
    Cell c;
    c.index = base.index;
    c.index.push_back(j);
    c.sample = base.sample.extended(std::move(coord));
    stack.cells.push_back(std::move(c));
  };
  // Bottom sector.
  if (k == 0) {
    pushCell(1, RealAlgebraicNumber::fromRational(Rational(0)));
    return stack;
  }
  pushCell(1, RealAlgebraicNumber::fromRational(Rational(floorOf(roots.front().first.interval().lo) - 1)));
  for (std::size_t i = 0; i < k; ++i) {
    pushCell(static_cast<std::uint32_t>(2 * i + 2), roots[i].first);
    if (i + 1 < k)
      pushCell(static_cast<std::uint32_t>(2 * i + 3),
               RealAlgebraicNumber::fromRational(
                   detail::sectorSampleBetween(roots[i].first, roots[i + 1].first)));
  }
  pushCell(static_cast<std::uint32_t>(2 * k + 1),
           RealAlgebraicNumber::fromRational(Rational(ceilOf(roots.back().first.interval().hi) + 1)));
  return stack;
}

namespace detail {

/// Geometric normal form for polynomials handed to the next level.
inline std::optional<Polynomial> levelNormalForm(const Polynomial& p) {
  if (p.isZero() || p.isConstant()) return std::nullopt;
  return squarefreePartTotal(p);
}

inline void addUnique(std::vector<Polynomial>& set, Polynomial p) {
  for (const auto& q : set)
    if (q == p) return;
  set.push_back(std::move(p));
}

}  // namespace detail

/// Projection phase of the decomposition: starting from the inputs at level n,
/// split off contents, build the finest squarefree basis and the Lazard
/// projection, and pass cont union projection to the next level down, until
/// `stopLevel` has its inputs and basis.
inline std::vector<Level> projectionPhase(const std::vector<Polynomial>& inputs, unsigned n,
                                          unsigned stopLevel = 1) {
  checkInput(n >= 1 && stopLevel >= 1 && stopLevel <= n, "bad projection levels");
  std::vector<Level> levels(n);
  levels[n - 1].inputs = inputs;
  for (unsigned k = n; k >= stopLevel; --k) {
    Level& L = levels[k - 1];
    const unsigned var = k - 1;
    std::vector<Polynomial> prims;
    std::vector<Polynomial> conts;
    for (const Polynomial& f : L.inputs) {
      if (f.degree(var) <= 0) {
        conts.push_back(f);
        continue;
      }
      auto [cont, prim] = contentAndPrimitiveWrt(f, var);
      prims.push_back(std::move(prim));
      if (!cont.isConstant()) conts.push_back(std::move(cont));
    }
    L.basis = squarefreeBasis(prims, k, var);
    if (k == 1) break;
    L.projection = lazardProjection(L.basis);
    std::vector<Polynomial> next;
    for (const Polynomial& c : conts) {
      if (auto nf = detail::levelNormalForm(c.dropLastVariable())) {
        detail::addUnique(next, *nf);
        L.contents.push_back(*nf);
      }
    }
    for (const auto& e : L.projection->entries) detail::addUnique(next, e.poly);
    std::sort(next.begin(), next.end(), PolynomialLess{});
    levels[k - 2].inputs = std::move(next);
  }
  return levels;
}

/// Valuation-invariant CAD of R^n for the input list A: project with the
/// Lazard operator down to dimension 1, isolate, then lift level by level via
/// Lazard evaluation. Cells carry sample points, exact signs and valuation
/// signatures of the level inputs.
inline Decomposition vcadl(const std::vector<Polynomial>& A, unsigned n) {
  checkInput(n >= 1, "decomposition needs at least one dimension");
  Decomposition D;
  D.dimension = n;
  for (const Polynomial& f : A) {
    checkInput(!f.isZero(), "zero polynomial in input");
    checkInput(f.varCount() == n, "variable count mismatch");
    if (!f.isConstant()) D.inputs.push_back(f);
  }
  D.levels = projectionPhase(D.inputs, n);

  // Lifting phase.
  D.cellsPerLevel.assign(n, {});
  Cell root;  // the trivial cell of R^0
  std::vector<Cell> bases{root};
  for (unsigned k = 1; k <= n; ++k) {
    std::vector<Cell>& out = D.cellsPerLevel[k - 1];
    for (const Cell& base : bases) {
      Stack stack = liftOverPoint(D.levels[k - 1].basis, base);
      for (Cell& c : stack.cells) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const Cell& a, const Cell& b) { return compareCellIndex(a.index, b.index) < 0; });
    for (Cell& c : out) {
      for (const Polynomial& f : D.levels[k - 1].inputs) {
        c.signatures.push_back(valuationAt(f, c.sample));
        c.signs.push_back(signAt(f, c.sample));
      }
    }
    bases = out;
  }
  return D;
}

/// The decomposition of the base space R^(n-1) embedded in a decomposition of
/// R^n (one level peeled off).
inline Decomposition baseOf(const Decomposition& D) {
  checkInput(D.dimension >= 2, "base of a one-dimensional decomposition");
  Decomposition B;
  B.dimension = D.dimension - 1;
  B.levels.assign(D.levels.begin(), D.levels.end() - 1);
  B.cellsPerLevel.assign(D.cellsPerLevel.begin(), D.cellsPerLevel.end() - 1);
  B.inputs = B.levels.back().inputs;
  return B;
}

/// Sorted table of per-cell valuation signatures.
inline std::vector<std::pair<CellIndex, std::vector<Valuation>>> signatureTable(
    const Decomposition& D) {
  std::vector<std::pair<CellIndex, std::vector<Valuation>>> table;
  for (const Cell& c : D.cells()) table.emplace_back(c.index, c.signatures);
  return table;
}

// ---------------------------------------------------------------------------
// Empirical delineability checking over full-dimensional base cells.
// ---------------------------------------------------------------------------

struct DelineabilityCheck {
  CellIndex cell;
  bool delineable = false;
  Valuation vTuple;                     // evaluation tuple at the sample point
  unsigned rootCount = 0;               // real roots of the residual
  std::vector<unsigned> multiplicities; // their multiplicity vector
  std::string failure;                  // first counterexample, if any
  std::vector<Rational> failureProbe;
};

namespace detail {

inline bool isFullDimensional(const CellIndex& idx) {
  for (auto c : idx)
    if ((c & 1u) == 0) return false;
  return true;
}

/// Sections of the level basis lifted over a rational prefix point.
inline std::vector<IsolatedRoot> stackRootsOverRationalPoint(const BasisSet& basis,
                                                             const std::vector<Rational>& prefix) {
  const unsigned level = static_cast<unsigned>(prefix.size()) + 1;
  Polynomial fstar = Polynomial::constant(level, 1);
  Tower t = Tower::fromRationals(prefix);
  for (const Polynomial& f : basis.elements) fstar = fstar * lazardEvaluate(f, t).residual;
  checkInternal(!fstar.isZero(), "lifted product vanished over a rational point");
  Unipoly u = toUnipoly(fstar, level - 1);
  if (u.degree() < 1) return {};
  return isolateRootsDetailed(u);
}

/// Rational jitter in the open unit interval.
inline Rational unitJitter(std::mt19937_64& rng) {
  return Rational(static_cast<long>(rng() % 255) + 1, 256);
}

/// Deterministically samples a rational point inside a full-dimensional cell
/// by walking the sector intervals level by level. Returns false when the
/// stack structure over the probe prefix disagrees with the cell index, which
/// is itself a delineability counterexample of the base decomposition.
inline bool sampleCellPoint(const Decomposition& D, const CellIndex& idx, std::mt19937_64& rng,
                            std::vector<Rational>& out, std::string& note) {
  out.clear();
  for (unsigned j = 0; j < idx.size(); ++j) {
    auto roots = stackRootsOverRationalPoint(D.levels[j].basis, out);
    // Expected section count: sibling cells of the ancestor at this level.
    std::size_t siblings = 0;
    for (const Cell& c : D.cellsPerLevel[j]) {
      bool samePrefix = true;
      for (unsigned t = 0; t < j; ++t)
        if (c.index[t] != idx[t]) samePrefix = false;
      if (samePrefix) ++siblings;
    }
    std::size_t expectedSections = (siblings - 1) / 2;
    if (roots.size() != expectedSections) {
      note = "stack over probe prefix has " + std::to_string(roots.size()) +
             " sections, expected " + std::to_string(expectedSections);
      return false;
    }
    std::uint32_t sector = (idx[j] + 1) / 2;  // 1-based sector number
    Rational q;
    if (roots.empty()) {
      q = Rational(static_cast<long>(rng() % 9)) - 4 + unitJitter(rng);
    } else if (sector == 1) {
      q = Rational(floorOf(roots.front().iv.lo) - 1) - Rational(static_cast<long>(rng() % 4)) -
          unitJitter(rng);
    } else if (sector == roots.size() + 1) {
      q = Rational(ceilOf(roots.back().iv.hi) + 1) + Rational(static_cast<long>(rng() % 4)) +
          unitJitter(rng);
    } else {
      IsolatedRoot& lo = roots[sector - 2];
      IsolatedRoot& hi = roots[sector - 1];
      while (!(lo.iv.hi < hi.iv.lo)) {
        refineRootStep(lo.factor, lo.iv);
        refineRootStep(hi.factor, hi.iv);
      }
      q = lo.iv.hi + (hi.iv.lo - lo.iv.hi) * unitJitter(rng);
    }
    out.push_back(std::move(q));
  }
  return true;
}

}  // namespace detail

/// Probes a full-dimensional base cell with rational points and verifies that
/// the Lazard evaluation of f keeps the same exponent tuple, real root count
/// and multiplicity vector as at the cell's own sample point.
inline std::vector<DelineabilityCheck> checkDelineability(const Polynomial& f,
                                                          const Decomposition& base,
                                                          const std::vector<CellIndex>& cells,
                                                          unsigned probes, std::uint64_t seed) {
  checkInput(!f.isZero(), "delineability of the zero polynomial");
  checkInput(base.dimension + 1 == f.varCount(), "base decomposition dimension mismatch");
  std::vector<DelineabilityCheck> out;
  for (const CellIndex& idx : cells) {
    checkInput(detail::isFullDimensional(idx), "delineability probing needs a full-dimensional cell");
    const Cell* cell = nullptr;
    for (const Cell& c : base.cells())
      if (c.index == idx) cell = &c;
    checkInput(cell != nullptr, "unknown cell index");

    DelineabilityCheck check;
    check.cell = idx;
    LazardEvalResult ref = lazardEvaluate(f, cell->sample);
    auto refRoots = isolateRootsAtTower(ref.residual, cell->sample, f.varCount() - 1);
    check.vTuple = ref.vTuple;
    check.rootCount = static_cast<unsigned>(refRoots.size());
    for (const auto& [root, mult] : refRoots) check.multiplicities.push_back(mult);
    check.delineable = true;

    std::uint64_t cellSalt = 0;
    for (auto c : idx) cellSalt = cellSalt * 31 + c;
    std::mt19937_64 rng(seed ^ (cellSalt * 0x9e3779b97f4a7c15ULL));
    for (unsigned t = 0; t < probes && check.delineable; ++t) {
      std::vector<Rational> q;
      std::string note;
      if (!detail::sampleCellPoint(base, idx, rng, q, note)) {
        check.delineable = false;
        check.failure = note;
        check.failureProbe = q;
        break;
      }
      LazardEvalResult ev = lazardEvaluate(f, q);
      std::vector<unsigned> mults;
      Unipoly residual = toUnipoly(substituteTower(ev.residual, Tower::fromRationals(q), 1),
                                   f.varCount() - 1);
      if (residual.degree() >= 1) {
        for (const auto& r : isolateRootsDetailed(residual)) mults.push_back(r.multiplicity);
      }
      if (ev.vTuple != check.vTuple) {
        check.delineable = false;
        check.failure = "valuation " + toString(ev.vTuple) + " != " + toString(check.vTuple);
        check.failureProbe = q;
      } else if (mults.size() != check.rootCount || mults != check.multiplicities) {
        check.delineable = false;
        check.failure = "root structure changed across probes";
        check.failureProbe = q;
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

/// All full-dimensional base cells.
inline std::vector<DelineabilityCheck> checkDelineability(const Polynomial& f,
                                                          const Decomposition& base,
                                                          unsigned probes, std::uint64_t seed) {
  std::vector<CellIndex> cells;
  for (const Cell& c : base.cells())
    if (detail::isFullDimensional(c.index)) cells.push_back(c.index);
  return checkDelineability(f, base, cells, probes, seed);
}

}  // namespace lazard
