#include <catch2/catch_amalgamated.hpp>

#include "lazard/valuation.hpp"
#include "support.hpp"

using namespace lazard;

namespace {

Valuation V(std::initializer_list<std::uint32_t> e) {
  return Valuation(std::vector<std::uint32_t>(e));
}

std::vector<Rational> pt(std::initializer_list<long> xs) {
  std::vector<Rational> p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

}  // namespace

TEST_CASE("lexCompare") {
  CHECK(lexCompare(V({0, 0, 2}), V({0, 1, 0})) < 0);
  CHECK(lexCompare(V({1, 2}), V({1, 2})) == 0);
  CHECK(lexCompare(V({0, 1}), V({1, 0})) < 0);
  CHECK_THROWS_AS(lexCompare(V({1}), V({1, 0})), input_error);
}

TEST_CASE("valuations of the two-variable product") {
  auto f = parsePolynomial("x1*x2^2 + x1^2*x2", 2);
  CHECK(valuationAt(f, pt({0, 0})) == V({1, 2}));
  CHECK(valuationAt(f, pt({1, 0})) == V({0, 1}));
  CHECK(valuationAt(f, pt({0, 1})) == V({1, 0}));
}

TEST_CASE("univariate valuation is the order") {
  auto f = parsePolynomial("x1^2 - x1^3", 1);
  CHECK(valuationAt(f, pt({0})) == V({2}));
  CHECK(valuationAt(f, pt({1})) == V({1}));
  testing::Rng rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = testing::randomNonzeroPolynomial(rng, 1, 5, 4);
    std::vector<Rational> alpha{rng.smallRational()};
    CHECK(valuationAt(g, alpha)[0] == orderAt(g, alpha));
  }
}

TEST_CASE("valuation on the axis of z^2 - xy") {
  auto f = parsePolynomial("z^2 - x*y", {"x", "y", "z"});
  for (long a : {-1L, 1L, 2L, 5L}) CHECK(valuationAt(f, pt({a, 0, 0})) == V({0, 0, 2}));
  CHECK(valuationAt(f, pt({0, 0, 0})) == V({0, 0, 2}));
  CHECK(orderAt(f, pt({0, 0, 0})) == 2);
  CHECK(orderAt(f, pt({1, 0, 0})) == 1);
  CHECK(orderAt(parsePolynomial("x1 + 1", 1), pt({1})) == 0);
}

TEST_CASE("lazardEvaluate") {
  std::vector<std::string> xyz{"x", "y", "z"};
  auto sphere = parsePolynomial("z^2 + y^2 + x^2 - 1", xyz);
  auto ev = lazardEvaluate(sphere, pt({0, 0}));
  CHECK(ev.residual == parsePolynomial("z^2 - 1", xyz));
  CHECK(ev.vTuple == V({0, 0}));

  auto yzmx = parsePolynomial("y*z - x", xyz);
  auto ev2 = lazardEvaluate(yzmx, pt({0, 0}));
  CHECK(ev2.residual == parsePolynomial("z", xyz));
  CHECK(ev2.vTuple == V({0, 1}));

  std::vector<std::string> v4{"x", "y", "z", "w"};
  auto f58 = parsePolynomial("y*w^2 + x*w - y*z^2", v4);
  auto ev3 = lazardEvaluate(f58, pt({0, 0, 1}));
  CHECK(ev3.residual == parsePolynomial("w^2 - 1", v4));
  CHECK(ev3.vTuple == V({0, 1, 0}));

  // Residual of lower degree than the input: x*w^2 + y*z*w - x on the z-axis.
  auto g = parsePolynomial("x*w^2 + y*z*w - x", v4);
  auto ev4 = lazardEvaluate(g, pt({0, 0, 2}));
  CHECK(ev4.residual == parsePolynomial("2*w", v4));
  CHECK(ev4.vTuple == V({0, 1, 0}));

  CHECK_THROWS_AS(lazardEvaluate(Polynomial(3), pt({0, 0})), input_error);
}

TEST_CASE("expansionCoefficient") {
  std::vector<std::string> xyz{"x", "y", "z"};
  auto yzmx = parsePolynomial("y*z - x", xyz);
  CHECK(expansionCoefficient(yzmx, pt({0, 0}), {0, 1}) == parsePolynomial("z", xyz));
  auto sphere = parsePolynomial("z^2 + y^2 + x^2 - 1", xyz);
  CHECK(expansionCoefficient(sphere, pt({0, 0}), {0, 0}) == parsePolynomial("z^2 - 1", xyz));
  // u = 0 reproduces the plain substitution.
  auto f = parsePolynomial("x^2*z + y*z^2 + 3", xyz);
  CHECK(expansionCoefficient(f, pt({2, 5}), {0, 0}) ==
        f.substitute(0, Rational(2)).substitute(1, Rational(5)));
}

TEST_CASE("valuation axioms randomized") {
  testing::Rng rng(71);
  for (int trial = 0; trial < 120; ++trial) {
    unsigned n = static_cast<unsigned>(rng.intIn(1, 4));
    std::vector<Rational> alpha;
    for (unsigned i = 0; i < n; ++i) alpha.push_back(rng.smallRational());
    auto f = testing::randomShiftedPolynomial(rng, n, alpha, 2, 3);
    auto g = testing::randomShiftedPolynomial(rng, n, alpha, 2, 3);
    CHECK(valuationAt(f * g, alpha) == valuationAt(f, alpha) + valuationAt(g, alpha));
    Polynomial sum = f + g;
    if (!sum.isZero()) {
      Valuation vs = valuationAt(sum, alpha);
      Valuation vmin = lexMin(valuationAt(f, alpha), valuationAt(g, alpha));
      CHECK(lexCompare(vs, vmin) >= 0);
    }
  }
}

TEST_CASE("valuation equals the brute-force lex scan") {
  testing::Rng rng(73);
  for (int trial = 0; trial < 80; ++trial) {
    unsigned n = static_cast<unsigned>(rng.intIn(1, 3));
    std::vector<Rational> alpha;
    for (unsigned i = 0; i < n; ++i) alpha.push_back(rng.smallRational());
    auto f = testing::randomShiftedPolynomial(rng, n, alpha, 2, 3);
    Valuation v = valuationAt(f, alpha);
    Valuation oracle = testing::bruteForceValuation(f, alpha);
    CHECK(v == oracle);
  }
}

TEST_CASE("residual equals the expansion coefficient at the returned tuple") {
  testing::Rng rng(79);
  for (int trial = 0; trial < 80; ++trial) {
    unsigned n = static_cast<unsigned>(rng.intIn(2, 4));
    std::vector<Rational> alpha;
    for (unsigned i = 0; i + 1 < n; ++i) alpha.push_back(rng.smallRational());
    auto fullAlpha = alpha;
    fullAlpha.push_back(Rational(0));
    auto f = testing::randomShiftedPolynomial(rng, n, fullAlpha, 2, 3);
    auto ev = lazardEvaluate(f, alpha);
    CHECK(ev.residual == expansionCoefficient(f, alpha, ev.vTuple.entries));
  }
}

TEST_CASE("valuationInvariantOn") {
  auto f = parsePolynomial("z^2 - x*y", {"x", "y", "z"});
  std::vector<Tower> axis;
  for (long a : {1L, 2L, -1L}) axis.push_back(Tower::fromRationals(pt({a, 0, 0})));
  auto report = valuationInvariantOn(f, axis);
  CHECK(report.invariant);
  REQUIRE(report.value.has_value());
  CHECK(*report.value == V({0, 0, 2}));

  auto circle = parsePolynomial("x^2 + y^2 - 1", {"x", "y"});
  std::vector<Tower> two{Tower::fromRationals(pt({0, 1})), Tower::fromRationals(pt({1, 0}))};
  auto bad = valuationInvariantOn(circle, two);
  CHECK(!bad.invariant);
  CHECK(bad.valueA == V({0, 1}));
  CHECK(bad.valueB == V({0, 2}));

  auto single = valuationInvariantOn(circle, {Tower::fromRationals(pt({0, 1}))});
  CHECK(single.invariant);
}

TEST_CASE("product invariance") {
  // f and g invariant on a point set forces fg invariant (additivity); on
  // connected sets the converse holds too, checked here on axis segments.
  std::vector<Tower> axis;
  for (long num : {1L, 2L, 3L}) axis.push_back(Tower::fromRationals(pt({num, 0})));
  auto fx = parsePolynomial("x1", 2);
  auto fy = parsePolynomial("x2", 2);
  CHECK(valuationInvariantOn(fx, axis).invariant);
  CHECK(valuationInvariantOn(fy, axis).invariant);
  CHECK(valuationInvariantOn(fx * fy, axis).invariant);

  std::vector<Tower> throughOrigin = axis;
  throughOrigin.push_back(Tower::fromRationals(pt({0, 0})));
  CHECK(!valuationInvariantOn(fx, throughOrigin).invariant);
  CHECK(!valuationInvariantOn(fx * fy, throughOrigin).invariant);

  testing::Rng rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = static_cast<unsigned>(rng.intIn(1, 3));
    std::vector<Tower> points;
    std::vector<Rational> base;
    for (unsigned i = 0; i < n; ++i) base.push_back(rng.smallRational());
    for (int k = 0; k < 3; ++k) {
      std::vector<Rational> p = base;
      p[static_cast<unsigned>(rng.intIn(0, static_cast<long>(n) - 1))] += rng.smallRational();
      points.push_back(Tower::fromRationals(p));
    }
    auto f = testing::randomShiftedPolynomial(rng, n, base, 2, 3);
    auto g = testing::randomShiftedPolynomial(rng, n, base, 2, 3);
    if (valuationInvariantOn(f, points).invariant && valuationInvariantOn(g, points).invariant)
      CHECK(valuationInvariantOn(f * g, points).invariant);
  }
}

TEST_CASE("valuation at an algebraic point") {
  auto f = parsePolynomial("x1^2 - 2", 1);
  Tower t(std::vector<RealAlgebraicNumber>{RealAlgebraicNumber::fromRoot(
      toUnipoly(parsePolynomial("x1^2 - 2", 1), 0), Interval(Rational(1), Rational(2)))});
  CHECK(valuationAt(f, t) == V({1}));
  CHECK(valuationAt(parsePolynomial("x1 - 1", 1), t) == V({0}));
}
