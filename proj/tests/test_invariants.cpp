#include <doctest.h>

#include "knots/braid.hpp"
#include "knots/errors.hpp"
#include "knots/invariants.hpp"
#include "knots/laurent.hpp"
#include "knots/seifert.hpp"

using namespace knots;

namespace {

SeifertMatrix matrix2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  SeifertMatrix m;
  m.dim = 2;
  m.entries = {a, b, c, d};
  return m;
}

}  // namespace

TEST_CASE("alexander polynomial of the trefoil matrix") {
  // Expanding det(Theta - t Theta^T) by hand:
  //   [[-1+t, 1], [-t, -1+t]] -> (t-1)^2 + t = t^2 - t + 1.
  SeifertMatrix theta = matrix2(-1, 1, 0, -1);
  CHECK(equal_up_to_unit(alexander_polynomial(theta), LaurentPoly(0, {1, -1, 1})));
}

TEST_CASE("alexander polynomial degenerate matrices") {
  SeifertMatrix empty;
  CHECK(alexander_polynomial(empty) == LaurentPoly::constant(1));

  SeifertMatrix zero1;
  zero1.dim = 1;
  zero1.entries = {0};
  CHECK(alexander_polynomial(zero1).is_zero());
}

TEST_CASE("signature anchors") {
  CHECK(signature(matrix2(-1, 1, 0, -1)) == -2);  // Theta+Theta^T = [[-2,1],[1,-2]]
  CHECK(std::abs(signature(matrix2(-1, 1, 0, -1))) == 2);
  CHECK(signature(SeifertMatrix{}) == 0);
  // Figure-eight: Theta+Theta^T has negative determinant, one eigenvalue of
  // each sign.
  CHECK(signature(seifert_matrix(parse_braid_word("3 | 1 -2 1 -2"))) == 0);
}

TEST_CASE("signature handles zero diagonals via hyperbolic blocks") {
  CHECK(signature(matrix2(0, 1, 0, 0)) == 0);  // symmetrizes to [[0,1],[1,0]]
  SeifertMatrix m;
  m.dim = 3;
  m.entries = {0, 1, 0, 0, 0, 0, 0, 0, 2};  // symmetrizes to hyperbolic pair + [4]
  CHECK(signature(m) == 1);
}

TEST_CASE("burau oracle anchors") {
  CHECK(equal_up_to_unit(burau_alexander_oracle(parse_braid_word("2 | 1 1 1")), LaurentPoly(0, {1, -1, 1})));
  CHECK(equal_up_to_unit(burau_alexander_oracle(parse_braid_word("2 | 1")), LaurentPoly::constant(1)));
  CHECK(equal_up_to_unit(burau_alexander_oracle(parse_braid_word("3 | 1 -2 1 -2")), LaurentPoly(0, {1, -3, 1})));
  CHECK_THROWS_WITH_AS(burau_alexander_oracle(parse_braid_word("3 | 1 1")), doctest::Contains("DisconnectedClosure"),
                       Error);
}

TEST_CASE("figure-eight seifert matrix reproduces the oracle") {
  BraidWord f = parse_braid_word("3 | 1 -2 1 -2");
  SeifertMatrix theta = seifert_matrix(f);
  REQUIRE(theta.dim == 2);
  CHECK(equal_up_to_unit(alexander_polynomial(theta), LaurentPoly(0, {1, -3, 1})));
  CHECK(equal_up_to_unit(alexander_polynomial(theta), burau_alexander_oracle(f)));
}

TEST_CASE("closure of sigma1 sigma1^-1 has vanishing alexander polynomial") {
  BraidWord b = parse_braid_word("2 | 1 -1");
  CHECK(alexander_polynomial(seifert_matrix(b)).is_zero());
  CHECK(burau_alexander_oracle(b).is_zero());
}

TEST_CASE("bounds collapse on the trefoil") {
  BraidWord b = parse_braid_word("2 | 1 1 1");
  LinkDiagram d = braid_closure(b);
  ReconnectionBounds r = reconnection_bounds(d, b, std::nullopt);
  CHECK(r.lower == 2);
  CHECK(r.upper == 2);
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == 2);
  bool has_sig = false, has_pos = false;
  for (const auto& c : r.certificates) {
    if (c.kind == "signature") {
      has_sig = true;
      CHECK(c.value == 2);
    }
    if (c.kind == "positivity") has_pos = true;
  }
  CHECK(has_sig);
  CHECK(has_pos);
}

TEST_CASE("bounds on the 6-crossing knot with unknotting number 1") {
  BraidWord b = parse_braid_word("3 | 1 1 1 -2 1 -2");
  LinkDiagram d = braid_closure(b);
  ReconnectionBounds r = reconnection_bounds(d, b, 1);
  CHECK(r.lower == 2);   // |sigma| = 2
  CHECK(r.upper == 2);   // min(c - s + 1 = 4, 2u = 2)
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == 2);
}

TEST_CASE("bounds without a braid fall back to the component bound") {
  LinkDiagram chain = parse_pd("[[2,3,1,4],[4,1,5,2],[5,7,6,8],[8,6,7,3]]");
  ReconnectionBounds r = reconnection_bounds(chain, std::nullopt, std::nullopt);
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == 2);  // positive diagram: exact c - s + 1
  CHECK(r.lower == 2);
}

TEST_CASE("bounds preconditions") {
  LinkDiagram split = braid_closure(parse_braid_word("2 | "));
  CHECK_THROWS_WITH_AS(reconnection_bounds(split, std::nullopt, std::nullopt),
                       doctest::Contains("DisconnectedDiagram"), Error);

  LinkDiagram trefoil = braid_closure(parse_braid_word("2 | 1 1 1"));
  BraidWord other = parse_braid_word("2 | 1 1 1 1 1");
  CHECK_THROWS_WITH_AS(reconnection_bounds(trefoil, other, std::nullopt), doctest::Contains("MismatchedBraid"), Error);
}

TEST_CASE("reconnection number of positive diagrams") {
  CHECK(reconnection_number_positive(braid_closure(parse_braid_word("2 | 1 1 1"))) == 2);
  CHECK(reconnection_number_positive(braid_closure(torus_braid(4, 3))) == 6);
  CHECK(reconnection_number_positive(parse_pd("[[4,7,1,8],[8,1,5,2],[2,5,3,6],[6,3,7,4]]")) == 3);
  CHECK(reconnection_number_positive(parse_pd("[[6,4,7,1],[1,5,2,6],[8,2,5,3],[3,7,4,8]]")) == 1);
  CHECK(reconnection_number_positive(parse_pd("[] + L1")) == 0);

  CHECK_THROWS_WITH_AS(reconnection_number_positive(braid_closure(parse_braid_word("3 | 1 -2 1 -2"))),
                       doctest::Contains("NotPositive"), Error);
  CHECK_THROWS_WITH_AS(reconnection_number_positive(braid_closure(parse_braid_word("2 | "))),
                       doctest::Contains("DisconnectedDiagram"), Error);
}
