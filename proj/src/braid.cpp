#include "knots/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "knots/errors.hpp"

namespace knots {

BraidWord BraidWord::mirrored() const {
  BraidWord m = *this;
  for (int& l : m.letters) l = -l;
  return m;
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : letters) {
    int i = std::abs(l) - 1;
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
  }
  return perm;
}

BraidWord parse_braid_word(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) fail(ErrorKind::MalformedWord, "missing '|' separator");
  BraidWord b;
  {
    std::istringstream head(text.substr(0, bar));
    if (!(head >> b.strands)) fail(ErrorKind::MalformedWord, "missing strand count");
    std::string rest;
    if (head >> rest) fail(ErrorKind::MalformedWord, "unexpected token before '|'");
    if (b.strands < 1) fail(ErrorKind::MalformedWord, "strand count must be >= 1");
  }
  std::istringstream body(text.substr(bar + 1));
  std::string tok;
  while (body >> tok) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      fail(ErrorKind::MalformedWord, "bad letter '" + tok + "'");
    }
    if (pos != tok.size()) fail(ErrorKind::MalformedWord, "bad letter '" + tok + "'");
    if (v == 0 || std::abs(v) > b.strands - 1)
      fail(ErrorKind::GeneratorOutOfRange,
           "generator " + std::to_string(v) + " needs at least " + std::to_string(std::abs(v) + 1) + " strands");
    b.letters.push_back(v);
  }
  return b;
}

std::string serialize_braid_word(const BraidWord& b) {
  std::ostringstream out;
  out << b.strands << " |";
  for (int l : b.letters) out << " " << l;
  return out.str();
}

LinkDiagram braid_closure(const BraidWord& b) {
  const int n = b.strands;
  const int m = b.length();

  // Events per position: word steps whose letter touches that position.
  std::vector<std::vector<int>> events(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t < m; ++t) {
    int i = std::abs(b.letters[static_cast<std::size_t>(t)]);
    events[static_cast<std::size_t>(i)].push_back(t);
    events[static_cast<std::size_t>(i) + 1].push_back(t);
  }

  // Segments: one per (position, consecutive event pair), cyclically through
  // the closure arc. Segment j on position p runs from events[p][j] down to
  // events[p][j+1] (wrapping). Ids are assigned position-major.
  std::vector<int> seg_base(static_cast<std::size_t>(n) + 2, 0);
  int free_loops = 0;
  int next_id = 1;
  for (int p = 1; p <= n; ++p) {
    seg_base[static_cast<std::size_t>(p)] = next_id;
    if (events[static_cast<std::size_t>(p)].empty()) {
      ++free_loops;
    } else {
      next_id += static_cast<int>(events[static_cast<std::size_t>(p)].size());
    }
  }

  // Segment on position p that starts at step t / ends at step t.
  auto seg_starting = [&](int p, int t) -> EdgeId {
    const auto& ev = events[static_cast<std::size_t>(p)];
    auto it = std::lower_bound(ev.begin(), ev.end(), t);
    require_internal(it != ev.end() && *it == t, "missing braid event");
    return seg_base[static_cast<std::size_t>(p)] + static_cast<int>(it - ev.begin());
  };
  auto seg_ending = [&](int p, int t) -> EdgeId {
    const auto& ev = events[static_cast<std::size_t>(p)];
    auto it = std::lower_bound(ev.begin(), ev.end(), t);
    require_internal(it != ev.end() && *it == t, "missing braid event");
    int j = static_cast<int>(it - ev.begin());
    int prev = (j + static_cast<int>(ev.size()) - 1) % static_cast<int>(ev.size());
    return seg_base[static_cast<std::size_t>(p)] + prev;
  };

  std::vector<Crossing> crossings;
  crossings.reserve(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    int letter = b.letters[static_cast<std::size_t>(t)];
    int i = std::abs(letter);
    EdgeId in_left = seg_ending(i, t);        // segment arriving on position i
    EdgeId in_right = seg_ending(i + 1, t);   // segment arriving on position i+1
    EdgeId out_left = seg_starting(i, t);
    EdgeId out_right = seg_starting(i + 1, t);
    Crossing x;
    if (letter > 0) {
      // Left strand over: under-in arrives on the right.
      x.quad = {in_right, in_left, out_left, out_right};
      x.sign = 1;
    } else {
      x.quad = {in_left, out_left, out_right, in_right};
      x.sign = -1;
    }
    crossings.push_back(x);
  }

  return canonical_renumber(crossings, free_loops);
}

BraidWord torus_braid(int p, int q) {
  if (p < 2 || q < 2) fail(ErrorKind::DegenerateParameters, "torus braid requires p, q >= 2");
  BraidWord b;
  b.strands = p;
  b.letters.reserve(static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(q));
  for (int rep = 0; rep < q; ++rep) {
    for (int i = 1; i < p; ++i) b.letters.push_back(i);
  }
  return b;
}

}  // namespace knots
