#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tticad/algebraic.hpp"
#include "tticad/parser.hpp"

using namespace tticad;

namespace {
const std::vector<std::string> kX12 = {"x1", "x2"};
Polynomial P(const std::string& s) { return parse_polynomial(s, kX12); }
}  // namespace

TEST_CASE("isolating rational univariate roots") {
  auto r = isolate_roots(P("x1^2 - 2"), 0, {});
  REQUIRE(r.size() == 2);
  CHECK(r[0]->approx() == doctest::Approx(-std::sqrt(2.0)));
  CHECK(r[1]->approx() == doctest::Approx(std::sqrt(2.0)));
  CHECK(isolate_roots(P("x1^2 + 1"), 0, {}).empty());
  auto e = isolate_roots(P("(x1 - 1)*(x1 + 3)*(2*x1 - 1)"), 0, {});
  REQUIRE(e.size() == 3);
  CHECK(e[0]->approx() == doctest::Approx(-3));
  CHECK(e[2]->approx() == doctest::Approx(1));
  auto m = isolate_roots(P("(x1 - 1)^3*(x1 + 1)"), 0, {});
  CHECK(m.size() == 2);
  CHECK_THROWS_AS(isolate_roots(Polynomial(), 0, {}), DegenerateInputError);
}

TEST_CASE("isolation over a rational prefix") {
  std::vector<CoordPtr> prefix = {Coordinate::make_rational(0, Rational(1, 4))};
  auto r = isolate_roots(P("2*x2 + 1"), 1, prefix);
  REQUIRE(r.size() == 1);
  REQUIRE(r[0]->rational);
  CHECK(r[0]->value == Rational(-1, 2));
}

TEST_CASE("isolation over an algebraic prefix") {
  auto s2 = isolate_roots(P("x1^2 - 2"), 0, {});
  std::vector<CoordPtr> prefix = {s2[1]};
  CHECK(sign_at(P("x1^2 - 2"), prefix) == 0);
  CHECK(sign_at(P("x1 - 1"), prefix) == 1);
  CHECK(sign_at(P("x1^3 - 2*x1"), prefix) == 0);
  auto r = isolate_roots(P("x2^2 - x1"), 1, prefix);
  REQUIRE(r.size() == 2);
  CHECK(r[1]->approx() == doctest::Approx(std::pow(2.0, 0.25)));
  std::vector<CoordPtr> pt = {s2[1], r[1]};
  CHECK(sign_at(P("x2^4 - 2"), pt) == 0);
  CHECK(sign_at(P("x2^2 - x1"), pt) == 0);
  CHECK(sign_at(P("x2 - x1"), pt) == -1);
  // Leading coefficient vanishing at the prefix is stripped.
  auto q = isolate_roots(P("(x1^2 - 2)*x2^2 + x2 - 1"), 1, prefix);
  REQUIRE(q.size() == 1);
  CHECK(q[0]->rational);
  CHECK(q[0]->value == 1);
}

TEST_CASE("root counts agree with Sturm sequences") {
  std::mt19937 rng(8);
  for (int it = 0; it < 200; ++it) {
    Polynomial p = oracle::random_univariate(rng, 0, 8, 9);
    auto roots = isolate_roots(p, 0, {});
    CHECK(static_cast<int>(roots.size()) == oracle::sturm_count(p, Rational(-1000000), Rational(1000000)));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(compare(roots[i], roots[i + 1]) < 0);
  }
}
