#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "knots/diagram.hpp"
#include "knots/plan.hpp"

namespace knots {

// Breadth-first search over smooth and merge moves, every state R1/R2-reduced
// before expansion, until a single free loop remains. The result is an upper
// bound on the reconnection number (moves are diagram-local) and equals
// c - s + 1 on positive diagrams.
//
// budget caps the number of states expanded; exceeding it throws
// ErrorKind::BudgetExceeded.

struct SearchResult {
  int min_moves = 0;
  std::uint64_t states_expanded = 0;
  CascadeTrace witness;  // replayed optimal move sequence over reduced states
};

// OpenMP level-parallel frontier expansion (falls back to serial when built
// without OpenMP). Deterministic: results and witnesses do not depend on the
// thread count.
SearchResult min_reconnections_search(const LinkDiagram& d, std::uint64_t budget);

// Plain queue BFS. Reference implementation kept for testing and benchmarks;
// must agree with the parallel kernel on every input.
SearchResult min_reconnections_search_serial(const LinkDiagram& d, std::uint64_t budget);

}  // namespace knots
