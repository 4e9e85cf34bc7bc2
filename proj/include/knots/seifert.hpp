#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "knots/braid.hpp"
#include "knots/diagram.hpp"

namespace knots {

// Circles of the all-crossings oriented smoothing. Free loops contribute one
// circle each but have no membership entries (they carry no edges).
struct SeifertCircles {
  int count = 0;
  std::unordered_map<EdgeId, int> membership;  // edge -> circle index
};

struct SeifertGraphEdge {
  int u = 0;
  int v = 0;
  int crossing = 0;
  int sign = 0;
};

// One vertex per Seifert circle, one edge per crossing joining the two
// circles that meet there.
struct SeifertGraph {
  int vertices = 0;
  std::vector<SeifertGraphEdge> edges;
};

struct GenusReport {
  int c = 0;
  int s = 0;
  int mu = 0;
  int genus = 0;
  int euler = 0;
};

// Seifert pairing matrix of the disk-and-band surface of a braid closure.
// dim = c - s + 1; entries bounded by 1 in absolute value.
struct SeifertMatrix {
  int dim = 0;
  std::vector<std::int64_t> entries;  // row-major

  std::int64_t at(int i, int j) const { return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)]; }
  std::int64_t& at(int i, int j) { return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)]; }
  SeifertMatrix transposed() const;
};

SeifertCircles seifert_circles(const LinkDiagram& d);
SeifertGraph seifert_graph(const LinkDiagram& d);

// Genus of the Seifert surface of a connected diagram, computed by the
// crossing/circle count formula and cross-checked against the Euler
// characteristic route.
GenusReport seifert_genus(const LinkDiagram& d);

// Seifert matrix of the closure of b. Requires every generator column
// 1..n-1 to occur in the word (otherwise the closure splits).
SeifertMatrix seifert_matrix(const BraidWord& b);

}  // namespace knots
