#pragma once

#include <utility>
#include <vector>

#include "knots/diagram.hpp"

namespace knots {

// Oriented smoothing of crossing k: the crossing disappears and the strands
// rejoin respecting orientation. c drops by 1, the component count changes by
// exactly +-1, and the writhe changes by -sign(k).
LinkDiagram smooth_crossing(const LinkDiagram& d, int k);

// Joins two distinct free loops into one; counts as one reconnection.
LinkDiagram merge_circles(const LinkDiagram& d, int i, int j);

// Flips the sign of crossing k and appends a compensating pair of curls of
// the original sign on the outgoing under-strand edge, so the total writhe is
// unchanged. The move costs two reconnections.
LinkDiagram crossing_switch_gadget(const LinkDiagram& d, int k);

// Greedy Reidemeister-1 curl removal and Reidemeister-2 cancellation to a
// fixed point. Preserves components and knot type.
LinkDiagram reduce_r1_r2(const LinkDiagram& d);

enum class UnknotVerdict { confirmed, inconclusive };

// confirmed iff R1/R2 reduction reaches zero crossings and one component.
// Never confirms falsely.
UnknotVerdict verify_unknot(const LinkDiagram& d);

namespace detail {

enum class RemovalMode { seifert_smooth, pass_through };

// Removes a set of crossings, regluing the incident strands per mode:
// seifert_smooth joins under-in to over-out (the oriented smoothing),
// pass_through joins under-in to under-out (the crossing never happened).
// Chains of glued edges that close up become free loops.
LinkDiagram remove_crossings(const LinkDiagram& d, const std::vector<std::pair<int, RemovalMode>>& removals);

}  // namespace detail

}  // namespace knots
