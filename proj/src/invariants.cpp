#include "knots/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "knots/errors.hpp"

namespace knots {

namespace {

std::int64_t checked_mul64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow");
  return r;
}

// Fraction-free Bareiss elimination over Z[t]. Entries must be ordinary
// polynomials (min_exp >= 0); divisions are exact by construction.
LaurentPoly polynomial_determinant(std::vector<std::vector<LaurentPoly>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return LaurentPoly::constant(1);
  int det_sign = 1;
  LaurentPoly prev_pivot = LaurentPoly::constant(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return LaurentPoly::zero();
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
      det_sign = -det_sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly num = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = exact_div(num, prev_pivot);
      }
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = LaurentPoly::zero();
    }
    prev_pivot = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  LaurentPoly det = a[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 1];
  return det_sign < 0 ? -det : det;
}

}  // namespace

LaurentPoly alexander_polynomial(const SeifertMatrix& m) {
  const int n = m.dim;
  std::vector<std::vector<LaurentPoly>> a(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Theta_ij - t * Theta_ji
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          LaurentPoly::constant(m.at(i, j)) - LaurentPoly::monomial(m.at(j, i), 1);
    }
  }
  return polynomial_determinant(std::move(a));
}

// --- Exact signature ---------------------------------------------------------

namespace {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t n, std::int64_t d = 1) {
    require_internal(d != 0, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Rational{n, d};
  }
  bool is_zero() const { return num == 0; }
  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
};

Rational operator*(const Rational& a, const Rational& b) {
  std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
  std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
  return Rational::of(checked_mul64(a.num / (g1 ? g1 : 1), b.num / (g2 ? g2 : 1)),
                      checked_mul64(a.den / (g2 ? g2 : 1), b.den / (g1 ? g1 : 1)));
}

Rational operator-(const Rational& a, const Rational& b) {
  std::int64_t g = std::gcd(a.den, b.den);
  std::int64_t lcm = checked_mul64(a.den / g, b.den);
  std::int64_t lhs = checked_mul64(a.num, lcm / a.den);
  std::int64_t rhs = checked_mul64(b.num, lcm / b.den);
  std::int64_t diff;
  if (__builtin_sub_overflow(lhs, rhs, &diff)) fail(ErrorKind::Overflow, "integer overflow");
  return Rational::of(diff, lcm);
}

Rational operator+(const Rational& a, const Rational& b) { return a - Rational{-b.num, b.den}; }

Rational operator/(const Rational& a, const Rational& b) {
  require_internal(!b.is_zero(), "division by zero rational");
  return a * Rational::of(b.den, b.num);
}

}  // namespace

int signature(const SeifertMatrix& m) {
  const int n = m.dim;
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational::of(m.at(i, j) + m.at(j, i));

  std::vector<int> alive(static_cast<std::size_t>(n));
  std::iota(alive.begin(), alive.end(), 0);
  int pos = 0, neg = 0;

  auto at = [&](int i, int j) -> Rational& { return s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };

  while (!alive.empty()) {
    // Symmetric pivoting: prefer a nonzero diagonal entry.
    int pivot = -1;
    for (int i : alive) {
      if (!at(i, i).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot >= 0) {
      Rational p = at(pivot, pivot);
      (p.sign() > 0 ? pos : neg)++;
      std::vector<int> rest;
      for (int i : alive)
        if (i != pivot) rest.push_back(i);
      for (int i : rest) {
        for (int j : rest) at(i, j) = at(i, j) - at(i, pivot) * at(pivot, j) / p;
      }
      alive = std::move(rest);
      continue;
    }
    // All diagonal entries are zero: find an off-diagonal hyperbolic pair.
    int hi = -1, hj = -1;
    for (std::size_t ii = 0; ii < alive.size() && hi < 0; ++ii) {
      for (std::size_t jj = ii + 1; jj < alive.size(); ++jj) {
        if (!at(alive[ii], alive[jj]).is_zero()) {
          hi = alive[ii];
          hj = alive[jj];
          break;
        }
      }
    }
    if (hi < 0) break;  // zero block, contributes nothing
    Rational bval = at(hi, hj);
    ++pos;
    ++neg;
    std::vector<int> rest;
    for (int i : alive)
      if (i != hi && i != hj) rest.push_back(i);
    for (int i : rest) {
      for (int j : rest) {
        at(i, j) = at(i, j) - (at(i, hi) * at(hj, j) + at(i, hj) * at(hi, j)) / bval;
      }
    }
    alive = std::move(rest);
  }
  return pos - neg;
}

// --- Burau oracle --------------------------------------------------------------

namespace {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

PolyMatrix identity_matrix(int n) {
  PolyMatrix m(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = LaurentPoly::constant(1);
  return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const int n = static_cast<int>(a.size());
  PolyMatrix out(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const LaurentPoly& aik = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const LaurentPoly& bkj = b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        if (bkj.is_zero()) continue;
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + aik * bkj;
      }
    }
  }
  return out;
}

// Reduced Burau matrix of sigma_i^{+-1} acting on an (n-1)-dimensional space.
PolyMatrix reduced_burau_generator(int n, int letter) {
  const int dim = n - 1;
  PolyMatrix m = identity_matrix(dim);
  int i = std::abs(letter);  // 1-based row index
  int r = i - 1;             // 0-based
  if (letter > 0) {
    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = LaurentPoly::monomial(-1, 1);
    if (i >= 2) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r) - 1] = LaurentPoly::monomial(1, 1);
    if (i <= n - 2) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r) + 1] = LaurentPoly::constant(1);
  } else {
    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = LaurentPoly::monomial(-1, -1);
    if (i >= 2) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r) - 1] = LaurentPoly::constant(1);
    if (i <= n - 2) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r) + 1] = LaurentPoly::monomial(1, -1);
  }
  return m;
}

}  // namespace

LaurentPoly burau_alexander_oracle(const BraidWord& b) {
  const int n = b.strands;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int l : b.letters) used[static_cast<std::size_t>(std::abs(l))] = true;
  for (int i = 1; i < n; ++i) {
    if (!used[static_cast<std::size_t>(i)])
      fail(ErrorKind::DisconnectedClosure, "generator " + std::to_string(i) + " never occurs; closure splits");
  }
  const int dim = n - 1;
  if (dim == 0) return LaurentPoly::constant(1);  // unknot as the 1-strand closure

  PolyMatrix rho = identity_matrix(dim);
  for (int l : b.letters) rho = multiply(rho, reduced_burau_generator(n, l));
  for (int i = 0; i < dim; ++i) {
    rho[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        rho[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] - LaurentPoly::constant(1);
  }
  // Shift each row into Z[t]; this only changes the determinant by a unit.
  for (auto& row : rho) {
    int min_exp = 0;
    for (const auto& p : row) {
      if (!p.is_zero()) min_exp = std::min(min_exp, p.min_exp);
    }
    if (min_exp < 0) {
      for (auto& p : row) {
        if (!p.is_zero()) p.min_exp -= min_exp;
      }
    }
  }
  LaurentPoly det = polynomial_determinant(std::move(rho));
  if (det.is_zero()) return LaurentPoly::zero();

  std::vector<std::int64_t> ones(static_cast<std::size_t>(n), 1);
  LaurentPoly cyclotomic_like(0, std::move(ones));  // 1 + t + ... + t^{n-1}
  return normalize_laurent(exact_div(normalize_laurent(det), cyclotomic_like));
}

// --- Reconnection bounds ---------------------------------------------------------

ReconnectionBounds reconnection_bounds(const LinkDiagram& d, const std::optional<BraidWord>& b,
                                       std::optional<int> unknotting) {
  if (!is_connected(d)) fail(ErrorKind::DisconnectedDiagram, "bounds require a connected diagram");
  if (b) {
    LinkDiagram closure = braid_closure(*b);
    if (canonical_key(closure) != canonical_key(d))
      fail(ErrorKind::MismatchedBraid, "braid closure does not match the diagram");
  }

  const int c = d.crossing_count();
  const int s = seifert_circles(d).count;
  const int mu = d.n_components;
  const int universal_upper = c - s + 1;

  ReconnectionBounds out;
  out.lower = 0;
  if (mu - 1 > out.lower) out.lower = mu - 1;
  out.certificates.push_back(BoundCertificate{"components", mu - 1});
  if (b) {
    int sigma = signature(seifert_matrix(*b));
    int abs_sigma = sigma < 0 ? -sigma : sigma;
    out.certificates.push_back(BoundCertificate{"signature", abs_sigma});
    if (abs_sigma > out.lower) out.lower = abs_sigma;
  }

  out.upper = universal_upper;
  out.certificates.push_back(BoundCertificate{"crossings-minus-circles", universal_upper});
  if (unknotting) {
    if (*unknotting < 0) fail(ErrorKind::DegenerateParameters, "unknotting number must be >= 0");
    out.certificates.push_back(BoundCertificate{"double-unknotting", 2 * *unknotting});
    out.upper = std::min(out.upper, 2 * *unknotting);
  }

  if (is_positive(d)) {
    out.exact = universal_upper;
    out.lower = universal_upper;
    out.upper = universal_upper;
    out.certificates.push_back(BoundCertificate{"positivity", universal_upper});
  } else if (out.lower == out.upper) {
    out.exact = out.lower;
  }
  require_internal(out.lower <= out.upper, "bounds must satisfy lower <= upper");
  return out;
}

int reconnection_number_positive(const LinkDiagram& d) {
  if (!is_connected(d)) fail(ErrorKind::DisconnectedDiagram, "requires a connected diagram");
  if (!is_positive(d)) fail(ErrorKind::NotPositive, "requires a positive diagram");
  return d.crossing_count() - seifert_circles(d).count + 1;
}

}  // namespace knots
