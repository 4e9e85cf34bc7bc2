#include "knots/search.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "knots/errors.hpp"
#include "knots/moves.hpp"

#ifdef KNOTS_HAVE_OPENMP
#include <omp.h>
#endif

namespace knots {

namespace {

struct Move {
  MoveKind kind;
  int site;  // crossing index in the parent's reduced diagram; unused for merge
};

struct Node {
  LinkDiagram d;
  std::int64_t parent;  // index into the node arena, -1 for the root
  Move via{MoveKind::smooth, 0};
};

bool is_goal(const LinkDiagram& d) { return d.crossings.empty() && d.free_loops == 1; }

// Children of a reduced state: one smoothing per crossing plus one merge when
// at least two free loops exist (free loops are interchangeable).
std::vector<std::pair<Move, LinkDiagram>> expand(const LinkDiagram& d) {
  std::vector<std::pair<Move, LinkDiagram>> out;
  out.reserve(static_cast<std::size_t>(d.crossing_count()) + 1);
  for (int k = 0; k < d.crossing_count(); ++k) {
    out.emplace_back(Move{MoveKind::smooth, k}, reduce_r1_r2(smooth_crossing(d, k)));
  }
  if (d.free_loops >= 2) {
    out.emplace_back(Move{MoveKind::merge, 0}, merge_circles(d, 0, 1));
  }
  return out;
}

CascadeTrace replay_witness(const std::vector<Node>& arena, std::int64_t goal_index) {
  std::vector<std::int64_t> path;
  for (std::int64_t i = goal_index; i >= 0; i = arena[static_cast<std::size_t>(i)].parent) path.push_back(i);
  std::reverse(path.begin(), path.end());

  CascadeTrace trace;
  LinkDiagram cur = arena[static_cast<std::size_t>(path.front())].d;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Move& mv = arena[static_cast<std::size_t>(path[i])].via;
    if (mv.kind == MoveKind::smooth) {
      cur = reduce_r1_r2(smooth_crossing(cur, mv.site));
    } else {
      cur = merge_circles(cur, 0, 1);
    }
    require_internal(canonical_key(cur) == canonical_key(arena[static_cast<std::size_t>(path[i])].d),
                     "witness replay must reproduce the search states");
    CascadeStep step;
    step.kind = mv.kind;
    step.site = mv.site;
    step.components_after = cur.n_components;
    step.writhe_after = writhe(cur);
    step.crossings_after = cur.crossing_count();
    trace.steps.push_back(step);
    trace.total_reconnections += 1;
  }
  trace.final = cur;
  require_internal(is_goal(trace.final), "witness must end at a single free loop");
  return trace;
}

}  // namespace

SearchResult min_reconnections_search_serial(const LinkDiagram& d, std::uint64_t budget) {
  std::vector<Node> arena;
  std::unordered_set<std::string> visited;
  std::deque<std::pair<std::int64_t, int>> queue;  // (node, depth)

  LinkDiagram root = reduce_r1_r2(d);
  arena.push_back(Node{root, -1, {}});
  visited.insert(canonical_key(root));
  SearchResult result;
  if (is_goal(root)) {
    result.min_moves = 0;
    result.witness.final = root;
    return result;
  }
  queue.emplace_back(0, 0);

  while (!queue.empty()) {
    auto [idx, depth] = queue.front();
    queue.pop_front();
    if (result.states_expanded++ >= budget) fail(ErrorKind::BudgetExceeded, "search budget exhausted");
    LinkDiagram parent = arena[static_cast<std::size_t>(idx)].d;
    for (auto& [mv, child] : expand(parent)) {
      std::string key = canonical_key(child);
      if (!visited.insert(std::move(key)).second) continue;
      arena.push_back(Node{child, idx, mv});
      std::int64_t child_idx = static_cast<std::int64_t>(arena.size()) - 1;
      if (is_goal(child)) {
        result.min_moves = depth + 1;
        result.witness = replay_witness(arena, child_idx);
        return result;
      }
      queue.emplace_back(child_idx, depth + 1);
    }
  }
  fail(ErrorKind::Internal, "search exhausted the state space without reaching one loop");
}

SearchResult min_reconnections_search(const LinkDiagram& d, std::uint64_t budget) {
#ifndef KNOTS_HAVE_OPENMP
  return min_reconnections_search_serial(d, budget);
#else
  std::vector<Node> arena;
  std::unordered_set<std::string> visited;

  LinkDiagram root = reduce_r1_r2(d);
  arena.push_back(Node{root, -1, {}});
  visited.insert(canonical_key(root));
  SearchResult result;
  if (is_goal(root)) {
    result.min_moves = 0;
    result.witness.final = root;
    return result;
  }

  std::vector<std::int64_t> frontier{0};
  int depth = 0;
  while (!frontier.empty()) {
    if (result.states_expanded + frontier.size() > budget) fail(ErrorKind::BudgetExceeded, "search budget exhausted");
    result.states_expanded += frontier.size();
    ++depth;

    // Expansion buffers are keyed by frontier slot, so the merge order (and
    // therefore parent assignment) is independent of the thread schedule.
    std::vector<std::vector<std::pair<Move, LinkDiagram>>> buffers(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      buffers[i] = expand(arena[static_cast<std::size_t>(frontier[i])].d);
    }
    // Keys are also computable in parallel; keep them alongside the children.
    std::vector<std::vector<std::string>> keys(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < buffers.size(); ++i) {
      keys[i].reserve(buffers[i].size());
      for (auto& [mv, child] : buffers[i]) {
        (void)mv;
        keys[i].push_back(canonical_key(child));
      }
    }

    std::vector<std::int64_t> next;
    for (std::size_t i = 0; i < buffers.size(); ++i) {
      for (std::size_t j = 0; j < buffers[i].size(); ++j) {
        if (!visited.insert(keys[i][j]).second) continue;
        arena.push_back(Node{std::move(buffers[i][j].second), frontier[i], buffers[i][j].first});
        std::int64_t child_idx = static_cast<std::int64_t>(arena.size()) - 1;
        if (is_goal(arena.back().d)) {
          result.min_moves = depth;
          result.witness = replay_witness(arena, child_idx);
          return result;
        }
        next.push_back(child_idx);
      }
    }
    frontier = std::move(next);
  }
  fail(ErrorKind::Internal, "search exhausted the state space without reaching one loop");
#endif
}

}  // namespace knots
