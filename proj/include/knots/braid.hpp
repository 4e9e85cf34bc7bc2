#pragma once

#include <string>
#include <vector>

#include "knots/diagram.hpp"

namespace knots {

// Braid word on n strands. Letter +i / -i is the generator sigma_i^{+-1},
// 1 <= i <= n-1; the strand at position i crosses over (+) or under (-) the
// strand at position i+1. The empty word is the identity braid.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  BraidWord mirrored() const;

  // Strand permutation of the braid (position -> position, 0-based).
  std::vector<int> permutation() const;
};

// Grammar: "<n> | <letter> <letter> ...", letters signed decimal, possibly none.
BraidWord parse_braid_word(const std::string& text);
std::string serialize_braid_word(const BraidWord& b);

// Standard closure: one crossing per letter, crossing sign = letter sign,
// strands that no letter touches close into free loops. Edge numbering follows
// the diagram-core convention.
LinkDiagram braid_closure(const BraidWord& b);

// (sigma_1 ... sigma_{p-1})^q on p strands; the closure is the (p,q) torus
// link with (p-1)q crossings and p Seifert circles.
BraidWord torus_braid(int p, int q);

}  // namespace knots
