#include <random>

#include "doctest.h"
#include "tticad/parser.hpp"
#include "tticad/polynomial.hpp"

using namespace tticad;

namespace {
const std::vector<std::string> kXY = {"x", "y"};
Polynomial P(const std::string& s) { return parse_polynomial(s, kXY); }

Polynomial random_poly(std::mt19937& rng, int nvars, int deg, int nterms) {
  std::uniform_int_distribution<int> c(-5, 5), e(0, deg);
  Polynomial p;
  for (int i = 0; i < nterms; ++i) {
    Monomial m{};
    for (int v = 0; v < nvars; ++v) m[v] = static_cast<std::uint16_t>(e(rng));
    p += Polynomial::monomial(m, Rational(c(rng)));
  }
  return p;
}
}  // namespace

TEST_CASE("arithmetic basics") {
  Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
  CHECK((x - x).is_zero());
  CHECK((y + 1) * (y - 1) == y.pow(2) - 1);
  CHECK(P("(x+y)^2") == P("x^2 + 2*x*y + y^2"));
  CHECK(P("x/2 + 1/3").terms().size() == 2);
  CHECK(y.mvar() == 1);
  CHECK(Polynomial(5).mvar() == -1);
  CHECK(Polynomial().mvar() == -1);
}

TEST_CASE("evaluation") {
  std::vector<Rational> pt = {0, 2};
  CHECK(P("x^2 + y^2 - 4").eval(pt) == 0);
  std::vector<Rational> short_pt = {0};
  CHECK_THROWS_AS(P("x + y").eval(short_pt), ArityError);
  CHECK(P("x^2 + y").substitute(0, Rational(1, 2)) == P("y + 1/4"));
}

TEST_CASE("coefficients and leading coefficient") {
  Polynomial p = P("x*y^2 + 3*y^2 - x*y + 7");
  CHECK(p.degree(1) == 2);
  CHECK(p.lc(1) == P("x + 3"));
  CHECK(p.reductum(1) == P("-x*y + 7"));
  auto cs = p.coeffs(1);
  REQUIRE(cs.size() == 3);
  CHECK(Polynomial::from_coeffs(1, cs) == p);
  CHECK(p.derivative(1) == P("2*x*y + 6*y - x"));
}

TEST_CASE("pseudo division identity") {
  std::mt19937 rng(7);
  for (int it = 0; it < 100; ++it) {
    Polynomial a = random_poly(rng, 2, 4, 6), b = random_poly(rng, 2, 3, 4);
    if (b.degree(1) == 0 || a.degree(1) < b.degree(1)) continue;
    Polynomial r = prem(a, b, 1), q = pquo(a, b, 1);
    unsigned e = a.degree(1) - b.degree(1) + 1;
    CHECK(b.lc(1).pow(e) * a == q * b + r);
    CHECK((r.is_zero() || r.degree(1) < b.degree(1)));
  }
}

TEST_CASE("divexact round trip") {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    Polynomial a = random_poly(rng, 3, 3, 5), b = random_poly(rng, 3, 2, 3);
    if (b.is_zero()) continue;
    CHECK(divexact(a * b, b) == a);
  }
  CHECK_THROWS_AS(divexact(P("x^2 + 1"), P("x + 1")), ExactnessError);
}

TEST_CASE("gcd") {
  CHECK(gcd(P("x^2 - 1"), P("x^2 + 2*x + 1")) == P("x + 1"));
  CHECK(gcd(P("(x*y - 1)*(y + x)"), P("(x*y - 1)*(y - x)")) == P("x*y - 1"));
  CHECK(gcd(P("2*x"), P("4*x^2")) == P("x"));
  std::mt19937 rng(3);
  for (int it = 0; it < 40; ++it) {
    Polynomial g = random_poly(rng, 2, 2, 3), a = random_poly(rng, 2, 2, 3),
               b = random_poly(rng, 2, 2, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Polynomial h = gcd(g * a, g * b);
    CHECK_NOTHROW(divexact(h, g.canonical()));
    CHECK_NOTHROW(divexact(g * a, h));
    CHECK_NOTHROW(divexact(g * b, h));
  }
}

TEST_CASE("canonical form and printing") {
  CHECK(P("-2*x + 4").canonical() == P("x - 2"));
  CHECK(P("x/2 - y/3").canonical() == P("-2*y + 3*x").canonical());
  CHECK(P("x^2*y - 3*y + 1/2").to_string(kXY) == "x^2*y - 3*y + 1/2");
  CHECK(P("-y").to_string(kXY) == "-y");
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(P("x + z"), ParseError);
  CHECK_THROWS_AS(P("x / y"), ParseError);
  CHECK_THROWS_AS(P("(x + 1"), ParseError);
  try {
    P("x + $");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  auto rc = parse_relation("x^2 + y^2 < 4", kXY);
  CHECK(rc.rel == Relation::Lt);
  CHECK(rc.lhs == P("x^2 + y^2 - 4"));
}
