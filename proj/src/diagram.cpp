#include "knots/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "knots/errors.hpp"

namespace knots {

namespace {

bool is_in_slot(const Crossing& x, int slot) {
  if (slot == 0) return true;
  if (slot == 2) return false;
  return (x.sign > 0) ? slot == 1 : slot == 3;
}

}  // namespace

LinkDiagram validate_and_finish(std::vector<Crossing> crossings, int free_loops) {
  if (free_loops < 0) fail(ErrorKind::InvalidEdgeSet, "negative free loop count");
  LinkDiagram d;
  d.crossings = std::move(crossings);
  d.free_loops = free_loops;

  const int c = d.crossing_count();
  const int n_edges = 2 * c;
  d.heads_.assign(static_cast<std::size_t>(n_edges) + 1, EdgeEnd{});
  d.tails_.assign(static_cast<std::size_t>(n_edges) + 1, EdgeEnd{});

  std::vector<int> in_count(static_cast<std::size_t>(n_edges) + 1, 0);
  std::vector<int> out_count(static_cast<std::size_t>(n_edges) + 1, 0);
  for (int k = 0; k < c; ++k) {
    const Crossing& x = d.crossings[k];
    if (x.sign != 1 && x.sign != -1) fail(ErrorKind::OrientationConflict, "crossing without resolved sign");
    for (int slot = 0; slot < 4; ++slot) {
      EdgeId e = x.quad[static_cast<std::size_t>(slot)];
      if (e < 1 || e > n_edges) fail(ErrorKind::InvalidEdgeSet, "edge id outside {1..2c}");
      if (is_in_slot(x, slot)) {
        ++in_count[static_cast<std::size_t>(e)];
        d.heads_[static_cast<std::size_t>(e)] = EdgeEnd{k, slot};
      } else {
        ++out_count[static_cast<std::size_t>(e)];
        d.tails_[static_cast<std::size_t>(e)] = EdgeEnd{k, slot};
      }
    }
  }
  for (EdgeId e = 1; e <= n_edges; ++e) {
    if (in_count[static_cast<std::size_t>(e)] + out_count[static_cast<std::size_t>(e)] != 2)
      fail(ErrorKind::InvalidEdgeSet, "edge id must occur exactly twice");
    if (in_count[static_cast<std::size_t>(e)] != 1)
      fail(ErrorKind::OrientationConflict, "edge must be incoming exactly once");
  }

  // Edge-succession cycles.
  std::vector<bool> seen(static_cast<std::size_t>(n_edges) + 1, false);
  for (EdgeId e0 = 1; e0 <= n_edges; ++e0) {
    if (seen[static_cast<std::size_t>(e0)]) continue;
    std::vector<EdgeId> cycle;
    EdgeId e = e0;
    do {
      seen[static_cast<std::size_t>(e)] = true;
      cycle.push_back(e);
      e = d.next_edge(e);
    } while (e != e0);
    d.cycles.push_back(std::move(cycle));
  }
  d.n_components = static_cast<int>(d.cycles.size()) + d.free_loops;
  return d;
}

LinkDiagram LinkDiagram::from_crossings(std::vector<Crossing> crossings, int free_loops) {
  return validate_and_finish(std::move(crossings), free_loops);
}

EdgeId LinkDiagram::next_edge(EdgeId edge) const {
  EdgeEnd end = head(edge);
  const Crossing& x = crossings[static_cast<std::size_t>(end.crossing)];
  return (end.slot == 0) ? x.under_out() : x.over_out();
}

EdgeEnd LinkDiagram::head(EdgeId edge) const {
  require_internal(edge >= 1 && edge <= 2 * crossing_count(), "edge id out of range");
  return heads_[static_cast<std::size_t>(edge)];
}

EdgeEnd LinkDiagram::tail(EdgeId edge) const {
  require_internal(edge >= 1 && edge <= 2 * crossing_count(), "edge id out of range");
  return tails_[static_cast<std::size_t>(edge)];
}

// --- PD parsing ------------------------------------------------------------

namespace {

struct PdText {
  std::vector<std::array<EdgeId, 4>> quads;
  int free_loops = 0;
};

PdText scan_pd(const std::string& text) {
  PdText out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (i >= text.size() || text[i] != ch)
      fail(ErrorKind::MalformedCode, std::string("expected '") + ch + "' at position " + std::to_string(i));
    ++i;
  };
  auto parse_int = [&]() -> long {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail(ErrorKind::MalformedCode, "expected integer at position " + std::to_string(start));
    return std::stol(text.substr(start, i - start));
  };

  expect('[');
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      expect('[');
      std::array<EdgeId, 4> quad{};
      for (int q = 0; q < 4; ++q) {
        if (q > 0) expect(',');
        long v = parse_int();
        if (v < 1 || v > 1000000) fail(ErrorKind::MalformedCode, "edge id out of supported range");
        quad[static_cast<std::size_t>(q)] = static_cast<EdgeId>(v);
      }
      expect(']');
      out.quads.push_back(quad);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(']');
      break;
    }
  }

  skip_ws();
  if (i < text.size() && text[i] == '+') {
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != 'L') fail(ErrorKind::MalformedCode, "expected L<k> after '+'");
    ++i;
    long loops = parse_int();
    if (loops < 0) fail(ErrorKind::MalformedCode, "negative free loop count");
    out.free_loops = static_cast<int>(loops);
  }
  skip_ws();
  if (i != text.size()) fail(ErrorKind::MalformedCode, "trailing characters after PD code");
  return out;
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  PdText pd = scan_pd(text);
  const int c = static_cast<int>(pd.quads.size());
  const int n_edges = 2 * c;

  // Occurrence table and edge-set validation.
  struct Slot {
    int crossing;
    int slot;
  };
  std::vector<std::vector<Slot>> occ(static_cast<std::size_t>(n_edges) + 1);
  for (int k = 0; k < c; ++k) {
    for (int s = 0; s < 4; ++s) {
      EdgeId e = pd.quads[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
      if (e > n_edges)
        fail(ErrorKind::InvalidEdgeSet, "edge " + std::to_string(e) + " exceeds 2c = " + std::to_string(n_edges));
      occ[static_cast<std::size_t>(e)].push_back(Slot{k, s});
    }
  }
  for (EdgeId e = 1; e <= n_edges; ++e) {
    if (occ[static_cast<std::size_t>(e)].size() != 2)
      fail(ErrorKind::InvalidEdgeSet, "edge " + std::to_string(e) + " must occur exactly twice");
  }

  // Role resolution. Under-strand slots are fixed (a incoming, c outgoing);
  // each crossing has a binary choice for the over-strand direction. Roles
  // propagate through the constraint that every edge is incoming exactly once.
  // role: 0 unknown, +1 incoming, -1 outgoing, per (crossing, slot).
  std::vector<std::array<int, 4>> role(static_cast<std::size_t>(c), {0, 0, 0, 0});
  std::vector<int> over_in_slot(static_cast<std::size_t>(c), 0);  // 0 unknown, else 1 or 3

  std::vector<Slot> worklist;
  auto assign = [&](int k, int s, int r) {
    int& cur = role[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
    if (cur == r) return;
    if (cur != 0) fail(ErrorKind::OrientationConflict, "contradictory edge roles at crossing " + std::to_string(k));
    cur = r;
    worklist.push_back(Slot{k, s});
  };

  auto propagate = [&] {
    while (!worklist.empty()) {
      Slot s = worklist.back();
      worklist.pop_back();
      int r = role[static_cast<std::size_t>(s.crossing)][static_cast<std::size_t>(s.slot)];
      // The edge's other occurrence has the opposite role.
      EdgeId e = pd.quads[static_cast<std::size_t>(s.crossing)][static_cast<std::size_t>(s.slot)];
      for (const Slot& o : occ[static_cast<std::size_t>(e)]) {
        if (o.crossing == s.crossing && o.slot == s.slot) continue;
        assign(o.crossing, o.slot, -r);
      }
      // Self-loop edge (both occurrences at the same slot list entry twice)
      // is handled by the loop above since occ stores both occurrences.
      // An over-slot role fixes the partner over-slot.
      if (s.slot == 1 || s.slot == 3) {
        int partner = 4 - s.slot;  // 1 <-> 3
        assign(s.crossing, partner, -r);
        over_in_slot[static_cast<std::size_t>(s.crossing)] = (r == 1) ? s.slot : partner;
      }
    }
  };

  for (int k = 0; k < c; ++k) {
    assign(k, 0, 1);
    assign(k, 2, -1);
  }
  propagate();

  // Remaining crossings belong to components that never pass under; their
  // orientation is chosen by the sequential-numbering convention: prefer the
  // over-direction whose outgoing edge is incoming edge + 1, otherwise wrap
  // from the larger id to the smaller.
  for (int k = 0; k < c; ++k) {
    if (over_in_slot[static_cast<std::size_t>(k)] != 0) continue;
    if (role[static_cast<std::size_t>(k)][1] != 0) continue;  // resolved via propagation
    EdgeId b = pd.quads[static_cast<std::size_t>(k)][1];
    EdgeId dd = pd.quads[static_cast<std::size_t>(k)][3];
    int in_slot;
    if (b == dd) {
      in_slot = 1;  // degenerate over-loop; deterministic choice
    } else if (dd == b + 1) {
      in_slot = 1;
    } else if (b == dd + 1) {
      in_slot = 3;
    } else if (b > dd) {
      in_slot = 1;  // wrap b -> dd
    } else {
      in_slot = 3;  // wrap dd -> b
    }
    assign(k, in_slot, 1);
    propagate();
  }

  std::vector<Crossing> crossings(static_cast<std::size_t>(c));
  for (int k = 0; k < c; ++k) {
    int in_slot = over_in_slot[static_cast<std::size_t>(k)];
    if (in_slot == 0) {
      // b == dd self-loop chosen above never reaches here; anything else is a bug.
      fail(ErrorKind::OrientationConflict, "unresolved over-strand at crossing " + std::to_string(k));
    }
    crossings[static_cast<std::size_t>(k)].quad = pd.quads[static_cast<std::size_t>(k)];
    crossings[static_cast<std::size_t>(k)].sign = (in_slot == 1) ? 1 : -1;
  }
  return validate_and_finish(std::move(crossings), pd.free_loops);
}

std::string serialize_pd(const LinkDiagram& d) {
  std::ostringstream out;
  out << "[";
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    if (k > 0) out << ",";
    const auto& q = d.crossings[k].quad;
    out << "[" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << "]";
  }
  out << "]";
  if (d.free_loops > 0) out << " + L" << d.free_loops;
  return out.str();
}

// --- Elementary quantities ---------------------------------------------------

int crossing_sign(const LinkDiagram& d, int k) {
  if (k < 0 || k >= d.crossing_count()) fail(ErrorKind::IndexOutOfRange, "crossing index " + std::to_string(k));
  return d.crossings[static_cast<std::size_t>(k)].sign;
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const Crossing& x : d.crossings) w += x.sign;
  return w;
}

int component_count(const LinkDiagram& d) { return d.n_components; }

bool is_positive(const LinkDiagram& d) {
  return std::all_of(d.crossings.begin(), d.crossings.end(), [](const Crossing& x) { return x.sign > 0; });
}

bool is_connected(const LinkDiagram& d) {
  if (d.crossings.empty()) return d.free_loops == 1;
  if (d.free_loops != 0) return false;
  // Union crossings along edges of the projected 4-valent graph.
  const int c = d.crossing_count();
  std::vector<int> parent(static_cast<std::size_t>(c));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[static_cast<std::size_t>(v)] == v ? v : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]); };
  for (EdgeId e = 1; e <= 2 * c; ++e) {
    int u = find(d.head(e).crossing);
    int v = find(d.tail(e).crossing);
    parent[static_cast<std::size_t>(u)] = v;
  }
  for (int k = 1; k < c; ++k) {
    if (find(k) != find(0)) return false;
  }
  return true;
}

LinkDiagram mirror(const LinkDiagram& d) {
  // Switching over/under at every crossing. The quadruple is re-rooted at the
  // new incoming under-strand (the old over-in edge); the sign flips.
  std::vector<Crossing> out;
  out.reserve(d.crossings.size());
  for (const Crossing& x : d.crossings) {
    Crossing m;
    const auto& q = x.quad;
    if (x.sign > 0) {
      m.quad = {q[1], q[2], q[3], q[0]};
      m.sign = -1;
    } else {
      m.quad = {q[3], q[0], q[1], q[2]};
      m.sign = 1;
    }
    out.push_back(m);
  }
  return LinkDiagram::from_crossings(std::move(out), d.free_loops);
}

DiagramStats diagram_stats(const LinkDiagram& d) {
  DiagramStats s;
  s.c = d.crossing_count();
  s.mu = d.n_components;
  s.writhe = writhe(d);
  s.positive = is_positive(d);
  s.connected = is_connected(d);
  return s;
}

// --- Canonical renumbering ----------------------------------------------------

LinkDiagram canonical_renumber(const std::vector<Crossing>& crossings, int free_loops) {
  // Works on structurally consistent crossings with arbitrary distinct edge
  // labels; produces the sequential per-component numbering.
  std::unordered_map<EdgeId, EdgeEnd> head, tail;
  for (int k = 0; k < static_cast<int>(crossings.size()); ++k) {
    const Crossing& x = crossings[static_cast<std::size_t>(k)];
    for (int slot = 0; slot < 4; ++slot) {
      EdgeId e = x.quad[static_cast<std::size_t>(slot)];
      if (is_in_slot(x, slot)) {
        require_internal(!head.count(e), "duplicate incoming role");
        head[e] = EdgeEnd{k, slot};
      } else {
        require_internal(!tail.count(e), "duplicate outgoing role");
        tail[e] = EdgeEnd{k, slot};
      }
    }
  }
  auto next_of = [&](EdgeId e) -> EdgeId {
    EdgeEnd h = head.at(e);
    const Crossing& x = crossings[static_cast<std::size_t>(h.crossing)];
    return (h.slot == 0) ? x.under_out() : x.over_out();
  };

  // Collect cycles, keyed by their smallest old label for deterministic order.
  std::map<EdgeId, std::vector<EdgeId>> components;
  std::unordered_map<EdgeId, bool> seen;
  for (const auto& [e0, end] : head) {
    (void)end;
    if (seen[e0]) continue;
    std::vector<EdgeId> cycle;
    EdgeId e = e0;
    EdgeId smallest = e0;
    do {
      seen[e] = true;
      cycle.push_back(e);
      smallest = std::min(smallest, e);
      e = next_of(e);
    } while (e != e0);
    // Rotate so the cycle starts at the chosen start edge.
    // Components with an under-passage start at their smallest label. A
    // component that only ever passes over carries no orientation in the PD
    // text, so its numbering must make the parse heuristic recover the
    // intended direction: start at the over-in edge of its smallest crossing.
    bool has_under = false;
    for (EdgeId ce : cycle) {
      int slot = head.at(ce).slot;
      if (slot == 0) has_under = true;
      int tslot = tail.at(ce).slot;
      if (tslot == 2) has_under = true;
    }
    EdgeId start = smallest;
    if (!has_under) {
      int best_crossing = -1;
      EdgeId best_edge = 0;
      for (EdgeId ce : cycle) {
        EdgeEnd h = head.at(ce);
        if (best_crossing < 0 || h.crossing < best_crossing) {
          best_crossing = h.crossing;
          best_edge = ce;
        }
      }
      start = best_edge;
    }
    auto it = std::find(cycle.begin(), cycle.end(), start);
    std::rotate(cycle.begin(), it, cycle.end());
    components[smallest] = std::move(cycle);
  }

  std::unordered_map<EdgeId, EdgeId> relabel;
  EdgeId next_id = 1;
  for (auto& [key, cycle] : components) {
    (void)key;
    for (EdgeId e : cycle) relabel[e] = next_id++;
  }

  std::vector<Crossing> out = crossings;
  for (Crossing& x : out) {
    for (auto& e : x.quad) e = relabel.at(e);
  }
  return LinkDiagram::from_crossings(std::move(out), free_loops);
}

// --- Canonical key ---------------------------------------------------------

namespace {

// Deterministic traversal labeling from a root crossing. Crossings and edges
// are labeled in discovery order; the resulting string depends only on the
// structure, not on the input labels.
std::string traversal_string(const LinkDiagram& d, const std::vector<int>& piece, int root) {
  std::unordered_map<int, int> crossing_label;
  std::unordered_map<EdgeId, int> edge_label;
  std::vector<int> order;
  crossing_label[root] = 0;
  order.push_back(root);
  int next_edge_label = 0;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int k = order[qi];
    const Crossing& x = d.crossings[static_cast<std::size_t>(k)];
    for (int slot = 0; slot < 4; ++slot) {
      EdgeId e = x.quad[static_cast<std::size_t>(slot)];
      if (!edge_label.count(e)) edge_label[e] = next_edge_label++;
      // Neighbor through this edge.
      EdgeEnd other = is_in_slot(x, slot) ? d.tail(e) : d.head(e);
      if (!crossing_label.count(other.crossing)) {
        crossing_label[other.crossing] = static_cast<int>(order.size());
        order.push_back(other.crossing);
      }
    }
  }
  require_internal(order.size() == piece.size(), "traversal must cover the connected piece");
  std::ostringstream out;
  for (int k : order) {
    const Crossing& x = d.crossings[static_cast<std::size_t>(k)];
    out << (x.sign > 0 ? '+' : '-');
    for (int slot = 0; slot < 4; ++slot) out << edge_label.at(x.quad[static_cast<std::size_t>(slot)]) << '.';
    out << ';';
  }
  return out.str();
}

}  // namespace

std::string canonical_key(const LinkDiagram& d) {
  // Connected pieces of the projected graph, canonicalized independently.
  const int c = d.crossing_count();
  std::vector<int> piece_of(static_cast<std::size_t>(c), -1);
  std::vector<std::vector<int>> pieces;
  for (int k0 = 0; k0 < c; ++k0) {
    if (piece_of[static_cast<std::size_t>(k0)] >= 0) continue;
    std::vector<int> piece;
    std::vector<int> stack{k0};
    piece_of[static_cast<std::size_t>(k0)] = static_cast<int>(pieces.size());
    while (!stack.empty()) {
      int k = stack.back();
      stack.pop_back();
      piece.push_back(k);
      const Crossing& x = d.crossings[static_cast<std::size_t>(k)];
      for (int slot = 0; slot < 4; ++slot) {
        EdgeId e = x.quad[static_cast<std::size_t>(slot)];
        for (int nb : {d.head(e).crossing, d.tail(e).crossing}) {
          if (piece_of[static_cast<std::size_t>(nb)] < 0) {
            piece_of[static_cast<std::size_t>(nb)] = static_cast<int>(pieces.size());
            stack.push_back(nb);
          }
        }
      }
    }
    pieces.push_back(std::move(piece));
  }

  std::vector<std::string> piece_keys;
  piece_keys.reserve(pieces.size());
  for (const auto& piece : pieces) {
    std::string best;
    for (int root : piece) {
      std::string s = traversal_string(d, piece, root);
      if (best.empty() || s < best) best = s;
    }
    piece_keys.push_back(std::move(best));
  }
  std::sort(piece_keys.begin(), piece_keys.end());
  std::ostringstream out;
  for (const auto& s : piece_keys) out << s << '|';
  out << "L" << d.free_loops;
  return out.str();
}

}  // namespace knots
