#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knots/braid.hpp"
#include "knots/diagram.hpp"
#include "knots/laurent.hpp"
#include "knots/seifert.hpp"

namespace knots {

// det(Theta - t Theta^T) in exact integer Laurent arithmetic. The 0x0 matrix
// yields 1. Defined up to a unit +-t^k across surface choices; compare with
// equal_up_to_unit or normalize_laurent.
LaurentPoly alexander_polynomial(const SeifertMatrix& m);

// Signature of the symmetric matrix Theta + Theta^T, computed exactly by
// symmetric elimination in rational arithmetic. Zero-diagonal rows are
// handled by hyperbolic 2x2 blocks contributing 0.
int signature(const SeifertMatrix& m);

// Independent Alexander oracle via the reduced Burau representation:
// delta(t) * (1 + t + ... + t^{n-1}) = +-t^k det(rho(b) - I). Test-side
// validation of the Seifert matrix route.
LaurentPoly burau_alexander_oracle(const BraidWord& b);

struct BoundCertificate {
  std::string kind;  // "signature", "components", "crossings-minus-circles", "double-unknotting", "positivity"
  int value = 0;
};

struct ReconnectionBounds {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  std::vector<BoundCertificate> certificates;
};

// Interval (or exact value) for the reconnection number of the diagram.
// lower = max(|sigma| when a braid presentation is supplied, mu - 1, 0);
// upper = min(c - s + 1, 2u when an unknotting number is supplied). Positive
// diagrams collapse to the exact value c - s + 1.
ReconnectionBounds reconnection_bounds(const LinkDiagram& d, const std::optional<BraidWord>& b,
                                       std::optional<int> unknotting);

// c - s + 1 for connected positive diagrams.
int reconnection_number_positive(const LinkDiagram& d);

}  // namespace knots
