#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace knots {

// Oriented link diagrams as lists of crossing quadruples over numbered edges.
//
// PD convention: a crossing is the 4-tuple (a, b, c, d) of edge ids listed
// counterclockwise starting from the incoming under-strand edge a. Edge c is
// the outgoing under-strand. The over-strand occupies b and d; which of them
// is incoming is resolved at construction time and recorded in the sign:
//
//   sign = +1  iff the over-strand enters at b (its direction is then the
//              counterclockwise quarter-turn of the under-strand direction).
//
// In a diagram with c crossings the edge ids are exactly {1, ..., 2c}, each id
// occurring once in an incoming role and once in an outgoing role. Orientation
// of parsed diagrams is inferred from sequential edge numbering along each
// component, wrapping at the component's maximum edge id. Crossingless circles
// are carried as a free-loop count, not as degenerate crossings.
//
// Planarity is not verified: any 4-valent combinatorial structure with a
// consistent orientation is accepted.

using EdgeId = int;

struct Crossing {
  std::array<EdgeId, 4> quad{};  // (a, b, c, d), counterclockwise from under-in
  int sign = 0;                  // +1 or -1

  EdgeId under_in() const { return quad[0]; }
  EdgeId under_out() const { return quad[2]; }
  EdgeId over_in() const { return sign > 0 ? quad[1] : quad[3]; }
  EdgeId over_out() const { return sign > 0 ? quad[3] : quad[1]; }

  bool operator==(const Crossing& other) const { return quad == other.quad && sign == other.sign; }
};

// Where an edge meets a crossing: slot 0..3 = position in the quadruple.
struct EdgeEnd {
  int crossing = -1;
  int slot = -1;
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;

  // Derived at construction.
  int n_components = 0;                      // edge cycles + free loops
  std::vector<std::vector<EdgeId>> cycles;   // edge-succession cycles, in component order

  LinkDiagram() = default;

  // Builds and validates a diagram from resolved crossings (signs already
  // assigned). Edge ids must be consistent but need not be canonical.
  static LinkDiagram from_crossings(std::vector<Crossing> crossings, int free_loops);

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  bool empty() const { return crossings.empty() && free_loops == 0; }

  // Edge id of the strand continuation after traversing `edge` into a crossing.
  EdgeId next_edge(EdgeId edge) const;
  // The (crossing, slot) where the edge is incoming / outgoing.
  EdgeEnd head(EdgeId edge) const;
  EdgeEnd tail(EdgeId edge) const;

  bool operator==(const LinkDiagram& other) const {
    return crossings == other.crossings && free_loops == other.free_loops;
  }

 private:
  std::vector<EdgeEnd> heads_;  // indexed by edge id
  std::vector<EdgeEnd> tails_;
  friend LinkDiagram validate_and_finish(std::vector<Crossing>, int);
};

struct DiagramStats {
  int c = 0;
  int mu = 0;
  int writhe = 0;
  bool positive = false;
  bool connected = false;
};

// --- Parsing and serialization -------------------------------------------

// Grammar: a bracketed list of 4-tuples of positive integers, with an
// optional trailing "+ L<k>" declaring k free loops.
//   [[1,4,2,5],[3,6,4,1],[5,2,6,3]]
//   [] + L1
LinkDiagram parse_pd(const std::string& text);
std::string serialize_pd(const LinkDiagram& d);

// --- Elementary diagram quantities ----------------------------------------

int crossing_sign(const LinkDiagram& d, int k);
int writhe(const LinkDiagram& d);
int component_count(const LinkDiagram& d);
bool is_positive(const LinkDiagram& d);
bool is_connected(const LinkDiagram& d);
LinkDiagram mirror(const LinkDiagram& d);
DiagramStats diagram_stats(const LinkDiagram& d);

// Relabels edges to the canonical numbering: components ordered by smallest
// incoming label, edges numbered sequentially along the orientation. The
// result serializes to PD text that parses back to the same diagram.
LinkDiagram canonical_renumber(const std::vector<Crossing>& crossings, int free_loops);

// Label-independent identity key: equal keys iff the diagrams differ only by
// edge relabeling and crossing order. Used for search deduplication and
// structural equality checks.
std::string canonical_key(const LinkDiagram& d);

}  // namespace knots
