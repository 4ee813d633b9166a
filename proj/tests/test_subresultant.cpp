#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tticad/parser.hpp"
#include "tticad/subresultant.hpp"

using namespace tticad;

namespace {
const std::vector<std::string> kXY = {"x", "y"};
Polynomial P(const std::string& s) { return parse_polynomial(s, kXY); }

Polynomial random_bivariate(std::mt19937& rng, unsigned dy) {
  std::uniform_int_distribution<int> c(-4, 4), dx(0, 2);
  Polynomial p;
  for (unsigned i = 0; i <= dy; ++i) {
    Polynomial ci;
    for (int k = 0; k <= dx(rng); ++k) ci += Polynomial::variable(0, k) * Rational(c(rng));
    p += ci * Polynomial::variable(1, i);
  }
  if (p.degree(1) < dy) p += Polynomial::variable(1, dy);
  return p;
}
}  // namespace

TEST_CASE("subresultant chain matches Sylvester determinants") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<unsigned> dp(1, 4);
  for (int it = 0; it < 60; ++it) {
    unsigned p = dp(rng), q = dp(rng);
    if (q > p) std::swap(p, q);
    Polynomial a = random_bivariate(rng, p), b = random_bivariate(rng, q);
    auto S = subresultant_chain(a, b, 1);
    REQUIRE(S.size() == p);
    for (unsigned j = 0; j < q; ++j) {
      CHECK(S[j] == oracle::subresultant(a, b, j, 1));
    }
  }
}

TEST_CASE("subresultants of a common-factor pair") {
  Polynomial g = P("y - x"), a = g * P("y^2 + 1"), b = g * P("y + 2*x");
  auto S = subresultant_chain(a, b, 1);
  CHECK(S[0].is_zero());
  CHECK(psc(S, 1, 1) != 0);
  CHECK(primitive_part(S[1], 1) == g.canonical());
}

TEST_CASE("resultants of the running example") {
  Polynomial f1 = P("x^2 + y^2 - 4"), g1 = P("(x-3)^2 - (y+3)");
  Polynomial f2 = P("(x-6)^2 + y^2 - 4"), g2 = P("(x-3)^2 + (y-2)");
  CHECK(resultant(f1, g1, 1).canonical() == P("x^4 - 12*x^3 + 49*x^2 - 72*x + 32"));
  CHECK(resultant(f2, g2, 1).canonical() == P("x^4 - 12*x^3 + 51*x^2 - 96*x + 81"));
  CHECK(resultant(f1, f2, 1).canonical() == P("(x-3)^2"));
  CHECK(discriminant(f1, 1).canonical() == P("x^2 - 4").canonical());
  CHECK(discriminant(f2, 1).canonical() == P("(x-4)*(x-8)"));
  CHECK_THROWS_AS(resultant(P("x"), P("x+1"), 1), DegenerateInputError);
  CHECK(resultant(P("y^2"), P("3"), 1) == P("9"));
}

TEST_CASE("resultant antisymmetry") {
  std::mt19937 rng(5);
  for (int it = 0; it < 30; ++it) {
    Polynomial a = random_bivariate(rng, 3), b = random_bivariate(rng, 2);
    Polynomial r1 = resultant(a, b, 1), r2 = resultant(b, a, 1);
    CHECK(r1 == (a.degree(1) * b.degree(1) % 2 ? -r2 : r2));
  }
}

TEST_CASE("squarefree") {
  CHECK(squarefree_part(P("(y-x)^2*(y+1)"), 1) == P("(y-x)*(y+1)").canonical());
  auto f = squarefree_factorization(P("(y-1)*(y+2)^2*(y-3)^3"), 1);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == P("y-1"));
  CHECK(f[1] == P("y+2"));
  CHECK(f[2] == P("y-3"));
}
