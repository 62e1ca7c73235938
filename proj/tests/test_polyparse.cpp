#include <doctest.h>

#include <cstdlib>

#include "nspec/corpus.hpp"
#include "nspec/errors.hpp"
#include "nspec/polyparse.hpp"

using namespace nspec;

TEST_SUITE("polyparse") {
  TEST_CASE("examples") {
    Support a = parse_polynomial("x^4*y^2 + x^2*y^3");
    CHECK(a.n == 2);
    CHECK(a.points == std::vector<Point>{{2, 3}, {4, 2}});
    Support b = parse_polynomial("x^3 + y^2*z");
    CHECK(b.n == 3);
    CHECK(b.points == std::vector<Point>{{0, 2, 1}, {3, 0, 0}});
    CHECK_THROWS_WITH_AS(parse_polynomial("x - x"), "zero polynomial", ParseError);
  }

  TEST_CASE("variables, coefficients and repeated factors") {
    Support s = parse_polynomial("3/2*x1^2*x3 - x*x*y + w");
    CHECK(s.n == 4);
    CHECK(s.coeffs.at(Point{2, 0, 1, 0}) == make_rational(3, 2));
    CHECK(s.coeffs.at(Point{2, 1, 0, 0}) == -1);
    CHECK(s.coeffs.at(Point{0, 0, 0, 1}) == 1);
    // like terms combine
    Support t = parse_polynomial("x^2 + 2*x^2 + y");
    CHECK(t.coeffs.at(Point{2, 0}) == 3);
  }

  TEST_CASE("malformed input") {
    for (const char* bad : {"", "x^", "x^0", "x +", "2 x", "x^2 y", "q^2", "x^-1", "1", "x5^2*x1"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_polynomial(bad), ParseError);
    }
  }

  TEST_CASE("exponent cap") {
    CHECK_THROWS_AS(parse_polynomial("x^11", 10), ParseError);
    CHECK_NOTHROW(parse_polynomial("x^10", 10));
    CHECK_THROWS_AS(parse_polynomial("x^6*x^6", 10), ParseError);
    setenv("NSPEC_MAX_EXP", "5", 1);
    CHECK(max_exponent_from_env() == 5);
    CHECK_THROWS_AS(parse_polynomial("x^6"), ParseError);
    unsetenv("NSPEC_MAX_EXP");
    CHECK(max_exponent_from_env() == kDefaultMaxExponent);
  }

  TEST_CASE("term order and whitespace do not matter") {
    CHECK(parse_polynomial("x^3+y^2*z") == parse_polynomial("  y ^ 2 * z +x^3 "));
    CHECK(parse_polynomial("x^4+y^4+z^4+x*y*z") == parse_polynomial("x*y*z + z^4 + y^4 + x^4"));
  }

  TEST_CASE("render round trip on the corpus") {
    for (const Support& s : generate_corpus(3, 40)) {
      CAPTURE(render(s));
      CHECK(parse_polynomial(render(s)) == s);
    }
    Support c = parse_polynomial("-2*x^2*y + 1/3*y^5 + x^7");
    CHECK(parse_polynomial(render(c)) == c);
  }

  TEST_CASE("JSON supports") {
    Support s = parse_input(R"({"n":3,"support":[[3,0,0],[0,2,1]]})");
    CHECK(s == parse_polynomial("x^3+y^2*z"));
    CHECK(support_from_json(to_json(s)) == s);
    Support c = parse_input(R"({"n":2,"support":[[1,1]],"coeffs":["-3/4"]})");
    CHECK(c.coeffs.at(Point{1, 1}) == make_rational(-3, 4));
    CHECK_THROWS_AS(parse_input(R"({"n":2,"support":[[0,0]]})"), ParseError);
    CHECK_THROWS_AS(parse_input(R"({"n":2,"support":[[1,1],[1,1]]})"), ParseError);
    CHECK_THROWS_AS(parse_input(R"({"n":2,"support":[[1,-1]]})"), ParseError);
    CHECK_THROWS_AS(parse_input(R"({"n":5,"support":[[1,0,0,0,0]]})"), ParseError);
    CHECK_THROWS_AS(parse_input(R"({"n":2,"support":)"), ParseError);
  }
}
