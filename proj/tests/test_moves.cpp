#include <doctest.h>

#include "knots/braid.hpp"
#include "knots/errors.hpp"
#include "knots/invariants.hpp"
#include "knots/moves.hpp"
#include "knots/seifert.hpp"

using namespace knots;

namespace {

LinkDiagram closure_of(const char* word) { return braid_closure(parse_braid_word(word)); }

}  // namespace

TEST_CASE("smoothing a trefoil crossing yields a two-component two-crossing link") {
  LinkDiagram trefoil = closure_of("2 | 1 1 1");
  for (int k = 0; k < 3; ++k) {
    LinkDiagram after = smooth_crossing(trefoil, k);
    CHECK(after.crossing_count() == 2);
    CHECK(component_count(after) == 2);
    CHECK(writhe(after) == 2);
  }
}

TEST_CASE("smoothing the hopf link yields a curl-reducible unknot") {
  LinkDiagram hopf = closure_of("2 | 1 1");
  LinkDiagram after = smooth_crossing(hopf, 0);
  CHECK(after.crossing_count() == 1);
  CHECK(component_count(after) == 1);
  CHECK(verify_unknot(after) == UnknotVerdict::confirmed);
}

TEST_CASE("smoothing all crossings leaves the seifert circles as free loops") {
  for (const char* w : {"2 | 1 1 1", "3 | 1 2 1 2", "3 | 1 -2 1 -2"}) {
    LinkDiagram d = closure_of(w);
    int s = seifert_circles(d).count;
    while (d.crossing_count() > 0) d = smooth_crossing(d, 0);
    CHECK(d.crossing_count() == 0);
    CHECK(d.free_loops == s);
  }
}

TEST_CASE("per-move bookkeeping") {
  LinkDiagram d = closure_of("3 | 1 1 2 -1 2");
  while (d.crossing_count() > 0) {
    int c = d.crossing_count();
    int mu = component_count(d);
    int w = writhe(d);
    int eps = crossing_sign(d, 0);
    LinkDiagram next = smooth_crossing(d, 0);
    CHECK(next.crossing_count() == c - 1);
    CHECK(std::abs(component_count(next) - mu) == 1);
    CHECK(writhe(next) == w - eps);
    d = next;
  }
}

TEST_CASE("smooth_crossing rejects bad indices") {
  LinkDiagram trefoil = closure_of("2 | 1 1 1");
  CHECK_THROWS_WITH_AS(smooth_crossing(trefoil, 3), doctest::Contains("IndexOutOfRange"), Error);
}

TEST_CASE("merge_circles") {
  LinkDiagram three = parse_pd("[] + L3");
  LinkDiagram two = merge_circles(three, 0, 1);
  CHECK(two.free_loops == 2);
  LinkDiagram one = merge_circles(two, 0, 1);
  CHECK(one.free_loops == 1);
  CHECK(component_count(one) == 1);

  CHECK_THROWS_WITH_AS(merge_circles(three, 1, 1), doctest::Contains("SameCircle"), Error);
  CHECK_THROWS_WITH_AS(merge_circles(three, 0, 3), doctest::Contains("NotFreeLoops"), Error);
  CHECK_THROWS_WITH_AS(merge_circles(parse_pd("[] + L1"), 0, 1), doctest::Contains("NotFreeLoops"), Error);
}

TEST_CASE("verify_unknot on basic diagrams") {
  // One-crossing curl: closure of a single positive generator.
  CHECK(verify_unknot(closure_of("2 | 1")) == UnknotVerdict::confirmed);
  CHECK(verify_unknot(closure_of("2 | -1")) == UnknotVerdict::confirmed);
  CHECK(verify_unknot(parse_pd("[] + L1")) == UnknotVerdict::confirmed);
  // No R1 or R2 move exists on the standard trefoil.
  CHECK(verify_unknot(closure_of("2 | 1 1 1")) == UnknotVerdict::inconclusive);
  // Two free loops are an unlink, not an unknot.
  CHECK(verify_unknot(parse_pd("[] + L2")) == UnknotVerdict::inconclusive);
}

TEST_CASE("reduce_r1_r2 cancels reidemeister-2 pairs") {
  LinkDiagram d = closure_of("2 | 1 -1");
  LinkDiagram reduced = reduce_r1_r2(d);
  CHECK(reduced.crossing_count() == 0);
  CHECK(reduced.free_loops == 2);
  CHECK(component_count(reduced) == component_count(d));

  LinkDiagram longer = closure_of("2 | 1 1 -1 1 -1");
  CHECK(verify_unknot(longer) == UnknotVerdict::confirmed);
}

TEST_CASE("reduction preserves components and never confirms a knot") {
  // sigma1^3 sigma2^-1 sigma1 sigma2^-1 is a genuine knot; reduction may
  // shrink it but must not confirm.
  LinkDiagram d = closure_of("3 | 1 1 1 -2 1 -2");
  LinkDiagram r = reduce_r1_r2(d);
  CHECK(component_count(r) == 1);
  CHECK(verify_unknot(d) == UnknotVerdict::inconclusive);
}

TEST_CASE("crossing switch gadget preserves writhe and costs two") {
  LinkDiagram trefoil = closure_of("2 | 1 1 1");
  LinkDiagram switched = crossing_switch_gadget(trefoil, 0);
  CHECK(switched.crossing_count() == 5);  // flipped crossing + two curls
  CHECK(writhe(switched) == writhe(trefoil));
  CHECK(component_count(switched) == 1);
  // Switching one trefoil crossing unknots it.
  CHECK(verify_unknot(switched) == UnknotVerdict::confirmed);
}

TEST_CASE("crossing switch gadget twice restores the sign pattern") {
  LinkDiagram trefoil = closure_of("2 | 1 1 1");
  LinkDiagram twice = crossing_switch_gadget(crossing_switch_gadget(trefoil, 0), 0);
  CHECK(writhe(twice) == writhe(trefoil));
  // Four curls cancel under reduction; what remains is the trefoil again.
  LinkDiagram reduced = reduce_r1_r2(twice);
  CHECK(canonical_key(reduced) == canonical_key(trefoil));
}

TEST_CASE("crossing switch gadget on negative crossings") {
  LinkDiagram neg = closure_of("2 | -1 -1 -1");
  LinkDiagram switched = crossing_switch_gadget(neg, 1);
  CHECK(writhe(switched) == writhe(neg));
  CHECK(verify_unknot(switched) == UnknotVerdict::confirmed);
  CHECK_THROWS_WITH_AS(crossing_switch_gadget(neg, 5), doctest::Contains("IndexOutOfRange"), Error);
}
