#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knots {

// Integer Laurent polynomial in one variable t. coeffs[i] is the coefficient
// of t^(min_exp + i). The zero polynomial is the empty coefficient vector.
// All arithmetic is exact; int64 overflow throws ErrorKind::Overflow.
struct LaurentPoly {
  int min_exp = 0;
  std::vector<std::int64_t> coeffs;

  LaurentPoly() = default;
  LaurentPoly(int min_exp_, std::vector<std::int64_t> coeffs_);

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(std::int64_t c);
  // c * t^e
  static LaurentPoly monomial(std::int64_t c, int e);

  bool is_zero() const { return coeffs.empty(); }
  int max_exp() const;  // requires nonzero
  std::int64_t coeff(int exp) const;
  std::int64_t leading() const;   // coefficient of t^max_exp; requires nonzero
  std::int64_t trailing() const;  // coefficient of t^min_exp; requires nonzero

  // Removes zero coefficients at both ends, keeping the representation canonical.
  void trim();

  std::int64_t eval_at_one() const;
  std::int64_t eval_at_minus_one() const;

  // Substitutes t -> 1/t.
  LaurentPoly reciprocal_substitution() const;

  bool operator==(const LaurentPoly& other) const;

  std::string to_string() const;  // e.g. "t^2 - t + 1" or "t^-1 + 2"
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);

// Exact division: throws ErrorKind::Internal if b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Multiplies by +-t^k so that min_exp = 0 and the leading coefficient is
// positive. Zero maps to zero.
LaurentPoly normalize_laurent(const LaurentPoly& p);

// Equality up to a unit +-t^k.
bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace knots
