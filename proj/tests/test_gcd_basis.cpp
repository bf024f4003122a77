#include <catch2/catch_amalgamated.hpp>

#include "lazard/gcd.hpp"
#include "support.hpp"

using namespace lazard;

TEST_CASE("gcd") {
  auto y2m1 = parsePolynomial("x1^2 - 1", 1);
  auto ym1 = parsePolynomial("x1 - 1", 1);
  CHECK(gcd(y2m1, ym1) == ym1);
  auto f = parsePolynomial("6*x1^2 - 6", 1);
  CHECK(gcd(f, f) == y2m1);  // primitive part of f
  auto a = parsePolynomial("x1*x2^2 + x1^2*x2", 2);
  auto b = parsePolynomial("x1*x2", 2);
  CHECK(gcd(a, b) == b);
  CHECK(gcd(a, Polynomial(2)) == parsePolynomial("x1*x2^2 + x1^2*x2", 2));
  CHECK_THROWS_AS(gcd(Polynomial(2), Polynomial(2)), input_error);

  testing::Rng rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    unsigned n = static_cast<unsigned>(rng.intIn(1, 3));
    auto u = testing::randomNonzeroPolynomial(rng, n, 2, 3);
    auto v = testing::randomNonzeroPolynomial(rng, n, 2, 3);
    auto w = testing::randomNonzeroPolynomial(rng, n, 2, 3);
    Polynomial g = gcd(u * w, v * w);
    // The primitive part of w divides the gcd of u*w and v*w, which in turn
    // divides both products.
    CHECK(tryDivideExact(g, primitivePart(w)).has_value());
    CHECK(tryDivideExact(u * w, g).has_value());
    CHECK(tryDivideExact(v * w, g).has_value());
  }
}

TEST_CASE("content and primitive part") {
  std::vector<std::string> yz{"y", "z"};
  auto f = parsePolynomial("y*z^2 - y", yz);
  auto [c, p] = contentAndPrimitiveWrt(f, 1);
  CHECK(c == parsePolynomial("y", yz));
  CHECK(p == parsePolynomial("z^2 - 1", yz));
  CHECK(c * p == f);

  auto g = parsePolynomial("z^2 - 1", yz);
  auto [cg, pg] = contentAndPrimitiveWrt(g, 1);
  CHECK(cg == Polynomial::constant(2, 1));
  CHECK(pg == g);

  auto h = parsePolynomial("2*z + 2", yz);
  auto [ch, ph] = contentAndPrimitiveWrt(h, 1);
  CHECK(ch == Polynomial::constant(2, 2));
  CHECK(ph == parsePolynomial("z + 1", yz));

  CHECK_THROWS_AS(contentAndPrimitiveWrt(Polynomial(2), 1), input_error);

  testing::Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    auto r = testing::randomNonzeroPolynomial(rng, 2, 3, 4);
    auto [cr, pr] = contentAndPrimitiveWrt(r, 1);
    CHECK(cr * pr == r);
    CHECK(pr.leadingTerm().second > 0);
  }
}

TEST_CASE("squarefree basis") {
  auto y2 = parsePolynomial("x1^2", 1);
  auto basis1 = squarefreeBasis({y2}, 0);
  REQUIRE(basis1.elements.size() == 1);
  CHECK(basis1.elements[0] == parsePolynomial("x1", 1));

  auto basis2 = squarefreeBasis({parsePolynomial("x1^2 - 1", 1), parsePolynomial("x1 - 1", 1)}, 0);
  REQUIRE(basis2.elements.size() == 2);
  CHECK(basis2.elements[0] == parsePolynomial("x1 - 1", 1));
  CHECK(basis2.elements[1] == parsePolynomial("x1 + 1", 1));

  auto circle = parsePolynomial("x1^2 + x2^2 - 1", 2);
  auto basis3 = squarefreeBasis({circle}, 1);
  REQUIRE(basis3.elements.size() == 1);
  CHECK(basis3.elements[0] == circle);

  CHECK_THROWS_AS(squarefreeBasis({Polynomial(1)}, 0), input_error);

  // An element divisible by the main variable sheds it as its own element.
  auto divisible = parsePolynomial("x1*x2^2 + x2", 2);  // x2 * (x1*x2 + 1)
  auto basis4 = squarefreeBasis({divisible}, 1);
  REQUIRE(basis4.elements.size() == 2);
  CHECK(basis4.elements[0] == parsePolynomial("x2", 2));
  CHECK(basis4.elements[1] == parsePolynomial("x1*x2 + 1", 2));
}

TEST_CASE("squarefree basis invariants on randomized inputs") {
  testing::Rng rng(29);
  int done = 0;
  while (done < 20) {
    unsigned n = static_cast<unsigned>(rng.intIn(1, 2));
    unsigned mainVar = n - 1;
    std::vector<Polynomial> inputs;
    unsigned count = static_cast<unsigned>(rng.intIn(1, 3));
    for (unsigned k = 0; k < count; ++k) {
      auto f = testing::randomNonzeroPolynomial(rng, n, 2, 3);
      if (f.degree(mainVar) <= 0) continue;
      inputs.push_back(contentAndPrimitiveWrt(f, mainVar).second);
    }
    if (inputs.empty()) continue;
    ++done;
    BasisSet basis = squarefreeBasis(inputs, n, mainVar);
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
      const Polynomial& b = basis.elements[i];
      CHECK(b.degree(mainVar) > 0);
      // squarefree wrt the main variable
      CHECK(gcd(b, b.derivative(mainVar)).isConstant());
      for (std::size_t j = i + 1; j < basis.elements.size(); ++j)
        CHECK(gcd(b, basis.elements[j]).isConstant());
    }
    // The basis product divides the product of the inputs' squarefree parts.
    Polynomial basisProduct = Polynomial::constant(n, 1);
    for (const auto& b : basis.elements) basisProduct = basisProduct * b;
    Polynomial inputProduct = Polynomial::constant(n, 1);
    for (const auto& f : inputs) inputProduct = inputProduct * squarefreePartWrt(f, mainVar);
    CHECK(tryDivideExact(inputProduct, basisProduct).has_value());
  }
}

TEST_CASE("squarefree parts") {
  auto f = parsePolynomial("x1^2*x2 + 2*x1*x2^2 + x2^3", 2);  // x2*(x1+x2)^2
  CHECK(squarefreePartTotal(f) == parsePolynomial("x1*x2 + x2^2", 2));
  auto g = parsePolynomial("x1^3 - x1^2", 1);
  CHECK(squarefreePartWrt(g, 0) == parsePolynomial("x1^2 - x1", 1));
}
