#include <doctest.h>

#include "nspec/corpus.hpp"
#include "nspec/errors.hpp"
#include "nspec/zeta.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace nspec;

namespace {

FracPoly t(long num, long den = 1, long c = 1) { return FracPoly::monomial(make_rational(num, den), c); }

}  // namespace

TEST_SUITE("zeta") {
  TEST_CASE("facet sums") {
    Support s = oracle::brieskorn_support({3, 3});
    CHECK(mstar(s, {0, 1}) == FracPoly::fractional_run(0, 2, 3) * Integer(3));
    CHECK(mstar(s, {0}) == FracPoly::fractional_run(0, 2, 3));
    CHECK(mstar(s, {}) == FracPoly::constant(1));
    CHECK(mstar(oracle::tpqr_support(4, 5, 6), {}) == FracPoly::constant(1));
  }

  TEST_CASE("restriction to coordinate subspaces") {
    Support s = oracle::tpqr_support(4, 5, 6);
    CHECK(restrict_support(s, {1}) == std::vector<Point>{{5}});
    CHECK(restrict_support(s, {0, 2}) == std::vector<Point>{{0, 6}, {4, 0}});
    CHECK(restrict_support(Support::make(2, {{1, 1}}), {0}).empty());
  }

  TEST_CASE("M_f examples") {
    CHECK(mzeta(oracle::brieskorn_support({3, 3})).m == FracPoly::constant(2) + t(1, 3) + t(2, 3));
    for (long a = 2; a <= 9; ++a) {
      CHECK(mzeta(oracle::brieskorn_support({a})).m == FracPoly::fractional_run(1, a - 1, a));
    }
    Support t444 = oracle::tpqr_support(4, 4, 4);
    CHECK(mzeta(t444).m == phi(oracle::tpqr(4, 4, 4)));
    CHECK(mzeta(oracle::brieskorn_support({2, 3, 5})).m == phi(oracle::brieskorn_pham({2, 3, 5})));
    CHECK_THROWS_AS(mzeta(Support::make(3, {{3, 0, 0}, {0, 2, 1}})), HypothesisError);
  }

  TEST_CASE("identity with the spectrum") {
    for (const char* f : {"x^4+y^4+z^4+x*y*z", "x^15+y^12+z^13+x^4*y^2+x^2*y^4+x^6*z^3+x^3*z^6+y^3*z+y*z^3",
                          "x^17+y^12+z^13+x^4*y^2+x^2*y^4+x^6*z^3+x^3*z^6+y^3*z+y*z^3", "x^3+y^2", "x^5"}) {
      CAPTURE(f);
      ZetaCheck z = verify_zeta_identity(parse_polynomial(f));
      CHECK(z.ok);
      CHECK(z.discrepancy.is_zero());
    }
  }

  TEST_CASE("a corrupted spectrum is detected") {
    Support s = oracle::tpqr_support(4, 4, 4);
    FracPoly sp = oracle::tpqr(4, 4, 4) - t(3, 2);
    ZetaCheck z = compare_zeta(sp, s);
    CHECK_FALSE(z.ok);
    CHECK(z.discrepancy == -t(1, 2));
  }

  TEST_CASE("corpus") {
    for (const Support& s : generate_corpus(31, 80)) {
      CAPTURE(render(s));
      ZetaCheck z = verify_zeta_identity(s);
      CHECK(z.ok);
      CHECK(mass(z.m) == mass(z.spectrum));
      for (const auto& [a, c] : z.m.terms()) {
        CHECK(a >= 0);
        CHECK(a < 1);
      }
    }
  }
}
