#include "knots/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "knots/errors.hpp"

namespace knots {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in Laurent addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in Laurent multiplication");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(int min_exp_, std::vector<std::int64_t> coeffs_) : min_exp(min_exp_), coeffs(std::move(coeffs_)) {
  trim();
}

LaurentPoly LaurentPoly::constant(std::int64_t c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(std::int64_t c, int e) { return LaurentPoly(e, {c}); }

int LaurentPoly::max_exp() const {
  require_internal(!is_zero(), "max_exp of zero polynomial");
  return min_exp + static_cast<int>(coeffs.size()) - 1;
}

std::int64_t LaurentPoly::coeff(int exp) const {
  if (is_zero()) return 0;
  int i = exp - min_exp;
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
  return coeffs[i];
}

std::int64_t LaurentPoly::leading() const {
  require_internal(!is_zero(), "leading of zero polynomial");
  return coeffs.back();
}

std::int64_t LaurentPoly::trailing() const {
  require_internal(!is_zero(), "trailing of zero polynomial");
  return coeffs.front();
}

void LaurentPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::size_t lead_zeros = 0;
  while (lead_zeros < coeffs.size() && coeffs[lead_zeros] == 0) ++lead_zeros;
  if (lead_zeros > 0) {
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
    min_exp += static_cast<int>(lead_zeros);
  }
  if (coeffs.empty()) min_exp = 0;
}

std::int64_t LaurentPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (std::int64_t c : coeffs) s = checked_add(s, c);
  return s;
}

std::int64_t LaurentPoly::eval_at_minus_one() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    int exp = min_exp + static_cast<int>(i);
    s = checked_add(s, (exp % 2 == 0) ? coeffs[i] : -coeffs[i]);
  }
  return s;
}

LaurentPoly LaurentPoly::reciprocal_substitution() const {
  if (is_zero()) return LaurentPoly();
  std::vector<std::int64_t> rev(coeffs.rbegin(), coeffs.rend());
  return LaurentPoly(-max_exp(), std::move(rev));
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  return min_exp == other.min_exp && coeffs == other.coeffs;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    std::int64_t c = coeffs[i];
    if (c == 0) continue;
    int exp = min_exp + i;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1 || exp == 0) out << mag;
    if (exp != 0) {
      out << "t";
      if (exp != 1) out << "^" << exp;
    }
    first = false;
  }
  return out.str();
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.min_exp, b.min_exp);
  int hi = std::max(a.max_exp(), b.max_exp());
  std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (int e = lo; e <= hi; ++e) out[static_cast<std::size_t>(e - lo)] = checked_add(a.coeff(e), b.coeff(e));
  return LaurentPoly(lo, std::move(out));
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<std::int64_t> out(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return LaurentPoly(a.min_exp + b.min_exp, std::move(out));
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  require_internal(!b.is_zero(), "division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  // Long division on the coefficient sequences, highest degree first.
  std::vector<std::int64_t> rem = a.coeffs;
  const std::vector<std::int64_t>& div = b.coeffs;
  if (rem.size() < div.size()) fail(ErrorKind::Internal, "inexact Laurent division");
  std::vector<std::int64_t> quot(rem.size() - div.size() + 1, 0);
  for (int qi = static_cast<int>(quot.size()) - 1; qi >= 0; --qi) {
    std::int64_t top = rem[static_cast<std::size_t>(qi) + div.size() - 1];
    if (top % b.leading() != 0) fail(ErrorKind::Internal, "inexact Laurent division");
    std::int64_t q = top / b.leading();
    quot[static_cast<std::size_t>(qi)] = q;
    if (q != 0) {
      for (std::size_t j = 0; j < div.size(); ++j) {
        rem[static_cast<std::size_t>(qi) + j] = checked_add(rem[static_cast<std::size_t>(qi) + j], checked_mul(-q, div[j]));
      }
    }
  }
  for (std::int64_t r : rem) {
    if (r != 0) fail(ErrorKind::Internal, "inexact Laurent division");
  }
  return LaurentPoly(a.min_exp - b.min_exp, std::move(quot));
}

LaurentPoly normalize_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return LaurentPoly();
  LaurentPoly r = p;
  r.min_exp = 0;
  if (r.leading() < 0) {
    for (auto& c : r.coeffs) c = -c;
  }
  return r;
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) { return normalize_laurent(a) == normalize_laurent(b); }

}  // namespace knots
