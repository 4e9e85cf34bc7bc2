#include <doctest.h>

#include "knots/errors.hpp"
#include "knots/laurent.hpp"

using knots::LaurentPoly;

TEST_CASE("laurent arithmetic basics") {
  LaurentPoly a(0, {1, -1, 1});  // 1 - t + t^2
  LaurentPoly b(1, {2});         // 2t

  CHECK((a + b) == LaurentPoly(0, {1, 1, 1}));
  CHECK((a - a).is_zero());
  CHECK((a * b) == LaurentPoly(1, {2, -2, 2}));
  CHECK(a.eval_at_one() == 1);
  CHECK(a.eval_at_minus_one() == 3);
  CHECK(a.to_string() == "t^2 - t + 1");
}

TEST_CASE("normalize shifts to min_exp zero with positive leading coefficient") {
  // -t^3 + t^2 - t  ->  t^2 - t + 1
  LaurentPoly p(1, {-1, 1, -1});
  CHECK(knots::normalize_laurent(p) == LaurentPoly(0, {1, -1, 1}));
  CHECK(knots::normalize_laurent(LaurentPoly::constant(1)) == LaurentPoly::constant(1));
  CHECK(knots::normalize_laurent(LaurentPoly::zero()).is_zero());
}

TEST_CASE("equal_up_to_unit ignores units") {
  LaurentPoly p(0, {1, -1, 1});
  LaurentPoly q(-3, {-1, 1, -1});
  CHECK(knots::equal_up_to_unit(p, q));
  CHECK_FALSE(knots::equal_up_to_unit(p, LaurentPoly(0, {1, 1})));
}

TEST_CASE("exact division") {
  LaurentPoly num(0, {-1, 0, 0, -1});  // -(1 + t^3)
  LaurentPoly den(0, {1, 1});          // 1 + t
  CHECK(knots::exact_div(num, den) == LaurentPoly(0, {-1, 1, -1}));
  CHECK_THROWS_AS(knots::exact_div(LaurentPoly(0, {1, 1, 1}), LaurentPoly(0, {1, 1})), knots::Error);
}

TEST_CASE("reciprocal substitution reverses coefficients") {
  LaurentPoly p(0, {2, -5, 2});
  CHECK(p.reciprocal_substitution() == LaurentPoly(-2, {2, -5, 2}));
  CHECK(knots::equal_up_to_unit(p, p.reciprocal_substitution()));
}
