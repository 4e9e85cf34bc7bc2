#include "knots/plan.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "knots/errors.hpp"
#include "knots/seifert.hpp"

namespace knots {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

// Tracks original crossing indices across smoothings.
struct IndexedDiagram {
  LinkDiagram d;
  std::vector<int> original;  // original[i] = original index of current crossing i

  explicit IndexedDiagram(const LinkDiagram& start) : d(start), original(static_cast<std::size_t>(start.crossing_count())) {
    std::iota(original.begin(), original.end(), 0);
  }

  void smooth_original(int orig) {
    auto it = std::find(original.begin(), original.end(), orig);
    require_internal(it != original.end(), "original crossing already removed");
    int cur = static_cast<int>(it - original.begin());
    d = smooth_crossing(d, cur);
    original.erase(it);
  }
};

CascadeStep record_step(MoveKind kind, int site, const LinkDiagram& d) {
  CascadeStep s;
  s.kind = kind;
  s.site = site;
  s.components_after = d.n_components;
  s.writhe_after = writhe(d);
  s.crossings_after = d.crossing_count();
  return s;
}

}  // namespace

ReconnectionPlan plan_unknotting(const LinkDiagram& d) {
  if (!is_connected(d)) fail(ErrorKind::DisconnectedDiagram, "plan requires a connected diagram");
  SeifertGraph g = seifert_graph(d);
  UnionFind uf(g.vertices);
  ReconnectionPlan p;
  // Kruskal over crossings in ascending index order: deterministic tree.
  for (const SeifertGraphEdge& e : g.edges) {
    if (uf.unite(e.u, e.v)) {
      p.keep.push_back(e.crossing);
    } else {
      p.smooth_order.push_back(e.crossing);
    }
  }
  p.claimed_cost = static_cast<int>(p.smooth_order.size());
  require_internal(p.claimed_cost == d.crossing_count() - seifert_circles(d).count + 1,
                   "plan cost must equal c - s + 1");
  return p;
}

CascadeTrace apply_plan(const LinkDiagram& d, const ReconnectionPlan& p) {
  const int c = d.crossing_count();
  std::vector<bool> seen(static_cast<std::size_t>(c), false);
  auto mark = [&](int k) {
    if (k < 0 || k >= c || seen[static_cast<std::size_t>(k)]) fail(ErrorKind::InvalidPlan, "plan does not partition the crossings");
    seen[static_cast<std::size_t>(k)] = true;
  };
  for (int k : p.keep) mark(k);
  for (int k : p.smooth_order) mark(k);
  if (static_cast<int>(p.keep.size() + p.smooth_order.size()) != c)
    fail(ErrorKind::InvalidPlan, "plan does not cover all crossings");

  CascadeTrace trace;
  IndexedDiagram state(d);
  for (int orig : p.smooth_order) {
    state.smooth_original(orig);
    trace.steps.push_back(record_step(MoveKind::smooth, orig, state.d));
    trace.total_reconnections += 1;
  }
  trace.final = state.d;
  return trace;
}

CascadeTrace cascade(const LinkDiagram& d, CascadePolicy policy, std::uint64_t seed, int max_steps) {
  CascadeTrace trace;
  if (policy == CascadePolicy::planned) {
    ReconnectionPlan p = plan_unknotting(d);
    trace = apply_plan(d, p);
    // The remaining kept crossings are nugatory; the final isotopy to a
    // single free loop costs nothing.
    trace.final = reduce_r1_r2(trace.final);
    require_internal(trace.final.crossings.empty() && trace.final.free_loops == 1,
                     "planned cascade must end at one free loop");
    trace.budget_exceeded = static_cast<int>(trace.steps.size()) > max_steps;
    return trace;
  }

  std::mt19937_64 rng(seed);
  IndexedDiagram state(d);
  auto budget_left = [&] { return static_cast<int>(trace.steps.size()) < max_steps; };

  while (state.d.crossing_count() > 0 && budget_left()) {
    int pick;
    if (policy == CascadePolicy::random) {
      pick = static_cast<int>(rng() % static_cast<std::uint64_t>(state.d.crossing_count()));
    } else {
      // greedy-split: maximize the component count after the move.
      pick = 0;
      int best_mu = -1;
      for (int k = 0; k < state.d.crossing_count(); ++k) {
        LinkDiagram next = smooth_crossing(state.d, k);
        if (next.n_components > best_mu) {
          best_mu = next.n_components;
          pick = k;
        }
      }
    }
    int orig = state.original[static_cast<std::size_t>(pick)];
    state.smooth_original(orig);
    trace.steps.push_back(record_step(MoveKind::smooth, orig, state.d));
    trace.total_reconnections += 1;
  }
  while (state.d.free_loops > 1 && budget_left()) {
    state.d = merge_circles(state.d, 0, 1);
    trace.steps.push_back(record_step(MoveKind::merge, 0, state.d));
    trace.total_reconnections += 1;
  }
  trace.final = state.d;
  trace.budget_exceeded = !(state.d.crossing_count() == 0 && state.d.free_loops == 1);
  return trace;
}

}  // namespace knots
