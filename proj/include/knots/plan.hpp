#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knots/diagram.hpp"
#include "knots/moves.hpp"

namespace knots {

// Unknotting plan realized by smoothings only: keep a spanning tree of the
// Seifert graph (s - 1 crossings) and smooth the remaining c - s + 1.
struct ReconnectionPlan {
  std::vector<int> keep;          // kept crossing indices, ascending
  std::vector<int> smooth_order;  // smoothed crossing indices, ascending
  int claimed_cost = 0;           // c - s + 1
};

enum class MoveKind { smooth, merge, switch_gadget };

struct CascadeStep {
  MoveKind kind = MoveKind::smooth;
  int site = 0;  // crossing index in the original diagram (smooth/switch) or merged loop pair marker
  int components_after = 0;
  int writhe_after = 0;
  int crossings_after = 0;
};

struct CascadeTrace {
  std::vector<CascadeStep> steps;
  int total_reconnections = 0;  // smooth + merge + 2 * switch_gadget
  LinkDiagram final;
  bool budget_exceeded = false;
};

enum class CascadePolicy { random, planned, greedy_split };

ReconnectionPlan plan_unknotting(const LinkDiagram& d);

// Executes the plan's smoothings in order. The final diagram has one
// component and s - 1 nugatory crossings; verify_unknot confirms it.
CascadeTrace apply_plan(const LinkDiagram& d, const ReconnectionPlan& p);

// random: smooths remaining crossings in seeded uniform order, then merges
//   free loops down to one (mt19937_64; index = next() % remaining).
// planned: plan_unknotting + apply_plan, then a free R1/R2 reduction of the
//   final state down to a single loop.
// greedy-split: each step smooths the crossing maximizing the component count
//   after the move (ties to the lowest index), then merges.
CascadeTrace cascade(const LinkDiagram& d, CascadePolicy policy, std::uint64_t seed, int max_steps);

}  // namespace knots
