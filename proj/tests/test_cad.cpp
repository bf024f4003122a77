#include <catch2/catch_amalgamated.hpp>

#include "lazard/cad.hpp"
#include "support.hpp"

using namespace lazard;

namespace {

std::vector<std::size_t> stackProfile(const Decomposition& D) {
  // Cells of the top level grouped by base-cell prefix, in base order.
  std::vector<std::size_t> profile;
  const auto& base = D.cellsPerLevel[D.dimension - 2];
  for (const Cell& b : base) {
    std::size_t count = 0;
    for (const Cell& c : D.cells()) {
      bool samePrefix = true;
      for (std::size_t i = 0; i < b.index.size(); ++i)
        if (c.index[i] != b.index[i]) samePrefix = false;
      if (samePrefix) ++count;
    }
    profile.push_back(count);
  }
  return profile;
}

Valuation V(std::initializer_list<std::uint32_t> e) {
  return Valuation(std::vector<std::uint32_t>(e));
}

Rational sampleCoord(const Cell& c, unsigned i) {
  REQUIRE(c.sample.isRational(i));
  return c.sample.coord(i).rationalValue();
}

}  // namespace

TEST_CASE("one-dimensional decomposition") {
  auto f = parsePolynomial("x1^2 - 1", 1);
  Decomposition D = vcadl({f}, 1);
  REQUIRE(D.cells().size() == 5);
  std::vector<Rational> samples;
  for (unsigned j = 0; j < 5; ++j) {
    CHECK(D.cells()[j].index == CellIndex{j + 1});
    samples.push_back(sampleCoord(D.cells()[j], 0));
  }
  CHECK(samples == std::vector<Rational>{Rational(-2), Rational(-1), Rational(0), Rational(1),
                                         Rational(2)});
  // Boundaries coincide with the isolated roots of the basis product.
  auto roots = isolateRealRoots(toUnipoly(f, 0));
  REQUIRE(roots.size() == 2);
  CHECK(samples[1] == roots[0].first.lo);
  CHECK(samples[3] == roots[1].first.lo);
}

TEST_CASE("circle decomposition") {
  auto circle = parsePolynomial("x^2 + y^2 - 1", {"x", "y"});
  Decomposition D = vcadl({circle}, 2);
  CHECK(D.cells().size() == 13);
  CHECK(stackProfile(D) == std::vector<std::size_t>{1, 3, 5, 3, 1});
  for (const Cell& c : D.cells()) {
    bool onCircle = signAt(circle, c.sample) == 0;
    CHECK(onCircle == (c.signatures[0] != V({0, 0})));
  }
}

TEST_CASE("sphere decomposition with the per-stack oracle") {
  auto sphere = parsePolynomial("x^2 + y^2 + z^2 - 1", {"x", "y", "z"});
  Decomposition D = vcadl({sphere}, 3);
  CHECK(D.cells().size() == 25);
  // Over each base cell the expected stack size follows from the sign of
  // 1 - x^2 - y^2 at the sample: positive 5, zero 3, negative 1.
  auto disk = parsePolynomial("1 - x^2 - y^2", {"x", "y"});
  const auto& base = D.cellsPerLevel[1];
  std::size_t total = 0;
  for (std::size_t b = 0; b < base.size(); ++b) {
    int s = signAt(disk, base[b].sample);
    std::size_t expected = s > 0 ? 5 : (s == 0 ? 3 : 1);
    CHECK(stackProfile(D)[b] == expected);
    total += expected;
  }
  CHECK(total == 25);
}

TEST_CASE("liftOverPoint") {
  std::vector<std::string> xy{"x", "y"};
  auto circle = parsePolynomial("x^2 + y^2 - 1", xy);
  BasisSet B = squarefreeBasis({circle}, 2, 1);

  Cell base0;
  base0.index = {3};
  base0.sample = Tower::fromRationals({Rational(0)});
  Stack s0 = liftOverPoint(B, base0);
  CHECK(s0.cells.size() == 5);
  REQUIRE(s0.sections.size() == 2);
  CHECK(compare(s0.sections[0].first, RealAlgebraicNumber::fromRational(Rational(-1))) == 0);
  CHECK(compare(s0.sections[1].first, RealAlgebraicNumber::fromRational(Rational(1))) == 0);

  Cell base2;
  base2.index = {5};
  base2.sample = Tower::fromRationals({Rational(2)});
  Stack s2 = liftOverPoint(B, base2);
  CHECK(s2.cells.size() == 1);
  CHECK(s2.sections.empty());

  // Lazard evaluation, not naive substitution: y*z - x over (0,0).
  std::vector<std::string> xyz{"x", "y", "z"};
  auto yzmx = parsePolynomial("y*z - x", xyz);
  BasisSet B3 = squarefreeBasis({yzmx}, 3, 2);
  Cell origin;
  origin.index = {2, 2};
  origin.sample = Tower::fromRationals({Rational(0), Rational(0)});
  Stack s3 = liftOverPoint(B3, origin);
  CHECK(s3.cells.size() == 3);
  REQUIRE(s3.sections.size() == 1);
  CHECK(compare(s3.sections[0].first, RealAlgebraicNumber::fromRational(Rational(0))) == 0);
}

TEST_CASE("stack shape invariants") {
  auto f = parsePolynomial("y^2 - x", {"x", "y"});
  auto g = parsePolynomial("x^2 + y^2 - 4", {"x", "y"});
  Decomposition D = vcadl({f, g}, 2);
  const auto& base = D.cellsPerLevel[0];
  for (const Cell& b : base) {
    std::vector<const Cell*> stack;
    for (const Cell& c : D.cells())
      if (c.index[0] == b.index[0]) stack.push_back(&c);
    CHECK(stack.size() % 2 == 1);
    // Sample coordinates strictly increase through the stack.
    for (std::size_t i = 0; i + 1 < stack.size(); ++i)
      CHECK(compare(stack[i]->sample.coord(1), stack[i + 1]->sample.coord(1)) < 0);
  }
}

TEST_CASE("recursion consistency: base cells are prefixes") {
  auto sphere = parsePolynomial("x^2 + y^2 + z^2 - 1", {"x", "y", "z"});
  Decomposition D = vcadl({sphere}, 3);
  for (unsigned level = 2; level <= 3; ++level) {
    std::vector<CellIndex> prefixes;
    for (const Cell& c : D.cellsPerLevel[level - 1])
      prefixes.emplace_back(c.index.begin(), c.index.end() - 1);
    std::sort(prefixes.begin(), prefixes.end());
    prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());
    std::vector<CellIndex> baseIndices;
    for (const Cell& c : D.cellsPerLevel[level - 2]) baseIndices.push_back(c.index);
    CHECK(prefixes == baseIndices);
  }
}

TEST_CASE("signature table") {
  auto circle = parsePolynomial("x^2 + y^2 - 1", {"x", "y"});
  Decomposition D = vcadl({circle}, 2);
  auto table = signatureTable(D);
  REQUIRE(table.size() == 13);
  std::map<CellIndex, Valuation> expect;
  expect[CellIndex{2, 2}] = V({0, 2});
  expect[CellIndex{4, 2}] = V({0, 2});
  expect[CellIndex{3, 2}] = V({0, 1});
  expect[CellIndex{3, 4}] = V({0, 1});
  for (const auto& [index, sigs] : table) {
    REQUIRE(sigs.size() == 1);
    auto it = expect.find(index);
    if (it != expect.end()) CHECK(sigs[0] == it->second);
  }

  Decomposition empty = vcadl({}, 2);
  auto emptyTable = signatureTable(empty);
  REQUIRE(emptyTable.size() == 1);
  CHECK(emptyTable[0].second.empty());
}

TEST_CASE("quartic golden input: axis valuations at base sample points") {
  std::vector<std::string> v4{"x", "y", "z", "w"};
  auto f = parsePolynomial("y*w^2 + x*w - y*z^2", v4);
  Decomposition D = vcadl({f}, 4);
  std::vector<std::string> v3{"x", "y", "z"};
  auto disc = parsePolynomial("x^2 + 4*y^2*z^2", v3);
  auto lead = parsePolynomial("y", v3);
  auto trail = parsePolynomial("0 - y*z^2", v3);
  // The punctured z-axis appears as the base cells (2,2,1) and (2,2,3); the
  // origin is (2,2,2).
  int found = 0;
  for (const Cell& c : D.cellsPerLevel[2]) {
    if (c.index == CellIndex{2, 2, 1} || c.index == CellIndex{2, 2, 3}) {
      ++found;
      CHECK(valuationAt(disc, c.sample) == V({0, 2, 0}));
      CHECK(valuationAt(lead, c.sample) == V({0, 1, 0}));
      CHECK(valuationAt(trail, c.sample) == V({0, 1, 0}));
    } else if (c.index == CellIndex{2, 2, 2}) {
      ++found;
      CHECK(valuationAt(disc, c.sample) == V({0, 2, 2}));
      CHECK(valuationAt(lead, c.sample) == V({0, 1, 0}));
      CHECK(valuationAt(trail, c.sample) == V({0, 1, 2}));
    }
  }
  CHECK(found == 3);
}

TEST_CASE("checkDelineability") {
  auto circle = parsePolynomial("x^2 + y^2 - 1", {"x", "y"});
  Decomposition D = vcadl({circle}, 2);
  Decomposition base = baseOf(D);

  auto middle = checkDelineability(circle, base, {CellIndex{3}}, 3, 7);
  REQUIRE(middle.size() == 1);
  CHECK(middle[0].delineable);
  CHECK(middle[0].rootCount == 2);
  CHECK(middle[0].multiplicities == std::vector<unsigned>{1, 1});

  auto all = checkDelineability(circle, base, 3, 7);
  REQUIRE(all.size() == 3);  // cells (1), (3), (5)
  for (const auto& v : all) CHECK(v.delineable);
  CHECK(all[0].rootCount == 0);  // no roots left of the circle

  CHECK_THROWS_AS(checkDelineability(circle, base, {CellIndex{2}}, 3, 7), input_error);

  auto zxy = parsePolynomial("z^2 - x*y", {"x", "y", "z"});
  Decomposition Dz = vcadl({zxy}, 3);
  auto verdicts = checkDelineability(zxy, baseOf(Dz), 4, 7);
  for (const auto& v : verdicts) CHECK(v.delineable);
}

TEST_CASE("sign invariance within cells of the golden corpus") {
  auto circle = parsePolynomial("x^2 + y^2 - 1", {"x", "y"});
  Decomposition D = vcadl({circle}, 2);
  // Probe the full-dimensional top-level cells through their base sectors.
  std::mt19937_64 rng(5);
  for (const Cell& c : D.cells()) {
    bool fullDim = true;
    for (auto ix : c.index)
      if ((ix & 1u) == 0) fullDim = false;
    if (!fullDim) continue;
    for (int probe = 0; probe < 4; ++probe) {
      std::vector<Rational> q;
      std::string note;
      bool ok = lazard::detail::sampleCellPoint(D, c.index, rng, q, note);
      REQUIRE(ok);
      CHECK(signAt(circle, Tower::fromRationals(q)) == c.signs[0]);
    }
  }
}

TEST_CASE("randomized small decompositions keep the cell invariants") {
  testing::Rng rng(109);
  int done = 0;
  while (done < 12) {
    unsigned n = static_cast<unsigned>(rng.intIn(1, 2));
    std::vector<Polynomial> A{testing::randomNonzeroPolynomial(rng, n, 2, 3)};
    if (A[0].isConstant()) continue;
    ++done;
    Decomposition D = vcadl(A, n);
    std::vector<CellIndex> seen;
    for (const Cell& c : D.cells()) {
      seen.push_back(c.index);
      CHECK(c.index.size() == n);
      CHECK(c.sample.size() == n);
      REQUIRE(c.signatures.size() == D.levels[n - 1].inputs.size());
      for (std::size_t i = 0; i < c.signatures.size(); ++i) {
        // Zero valuation tuple exactly at nonvanishing points.
        CHECK(c.signatures[i].isZeroTuple() == (c.signs[i] != 0));
      }
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());  // unique indices
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(vcadl({Polynomial(2)}, 2), input_error);
  CHECK_THROWS_AS(vcadl({parsePolynomial("x1", 1)}, 2), input_error);
  CHECK_THROWS_AS(vcadl({}, 0), input_error);
}
