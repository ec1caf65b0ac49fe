#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "positroid/errors.hpp"

namespace positroid {

namespace detail {
template <typename Real>
Real fabs_(const Real& x) {
  using std::abs;
  return abs(x);
}
}  // namespace detail

// Univariate polynomial with floating coefficients stored in DESCENDING
// degree order: c[0] x^deg + ... + c[deg].
template <typename Real>
struct RealPoly {
  std::vector<Real> c;

  RealPoly() = default;
  explicit RealPoly(std::vector<Real> coeffs) : c(std::move(coeffs)) { strip(); }

  int degree() const { return static_cast<int>(c.size()) - 1; }

  Real eval(const Real& x) const {
    Real acc = 0;
    for (const Real& ci : c) acc = acc * x + ci;
    return acc;
  }

  RealPoly derivative() const {
    if (c.size() <= 1) return RealPoly(std::vector<Real>{});
    std::vector<Real> d(c.size() - 1);
    int n = degree();
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      d[i] = c[i] * Real(static_cast<int>(n - static_cast<int>(i)));
    return RealPoly(std::move(d));
  }

  Real max_abs_coeff() const {
    Real m = 0;
    for (const Real& ci : c) m = std::max(m, detail::fabs_(ci));
    return m;
  }

  void strip() {
    std::size_t i = 0;
    while (i < c.size() && c[i] == Real(0)) ++i;
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
  }

  // Synthetic division by (x - r): returns quotient, writes remainder.
  RealPoly deflate(const Real& r, Real* remainder = nullptr) const {
    if (c.empty()) throw Error("deflate: zero polynomial");
    std::vector<Real> q;
    q.reserve(c.size() - 1);
    Real acc = c[0];
    for (std::size_t i = 1; i < c.size(); ++i) {
      q.push_back(acc);
      acc = acc * r + c[i];
    }
    if (remainder) *remainder = acc;
    return RealPoly(std::move(q));
  }
};

namespace detail {

// Remainder of a by b, coefficients descending. b must be nonzero.
template <typename Real>
std::vector<Real> poly_rem(std::vector<Real> a, const std::vector<Real>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Real f = a[0] / b[0];
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
    a.erase(a.begin());
  }
  return a;
}

template <typename Real>
void chop_small(std::vector<Real>& v, const Real& eps) {
  std::size_t i = 0;
  while (i < v.size() && fabs_(v[i]) <= eps) ++i;
  v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i));
}

template <typename Real>
Real scale_of(const std::vector<Real>& v) {
  Real m = 0;
  for (const Real& x : v) m = std::max(m, fabs_(x));
  return m;
}

template <typename Real>
int sign_changes(const std::vector<std::vector<Real>>& sturm, const Real& x) {
  int changes = 0, prev = 0;
  for (const auto& p : sturm) {
    Real acc = 0;
    for (const Real& ci : p) acc = acc * x + ci;
    int s = acc > Real(0) ? 1 : (acc < Real(0) ? -1 : 0);
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

}  // namespace detail

// Distinct real roots of p in [lo, hi] with multiplicities, ascending.
// Sturm isolation on the square-free part, bisection, then Newton polish.
// tol is relative: a root x is resolved to width tol * max(1, |x|).
template <typename Real>
std::vector<std::pair<Real, int>> real_roots(const RealPoly<Real>& poly,
                                             Real lo, Real hi,
                                             Real tol = Real(1e-12)) {
  using detail::fabs_;
  if (poly.degree() < 1) return {};
  if (!(lo < hi)) throw Error("real_roots: empty interval");

  // Square-free part via a tolerance-cut Euclidean gcd with the derivative.
  std::vector<Real> p = poly.c, q = poly.derivative().c;
  Real scale = std::max(detail::scale_of(p), Real(1));
  const Real eps_cut = scale * Real(1e-13);
  std::vector<Real> a = p, b = q;
  while (true) {
    detail::chop_small(b, detail::scale_of(b) * Real(1e-12) + Real(1e-300));
    if (b.empty() || b.size() == 1) break;
    auto r = detail::poly_rem(a, b);
    detail::chop_small(r, std::max(detail::scale_of(a), detail::scale_of(b)) * Real(1e-12));
    if (r.empty() || detail::scale_of(r) <= eps_cut) break;
    a = b;
    b = r;
  }
  std::vector<Real> sqfree;
  if (b.empty() || b.size() == 1) {
    sqfree = p;  // gcd is constant: p already square-free
  } else {
    // divide p by gcd (stored in b after the loop exit on small remainder)
    std::vector<Real> g = b;
    std::vector<Real> quo;
    std::vector<Real> rem = p;
    while (rem.size() >= g.size()) {
      Real f = rem[0] / g[0];
      quo.push_back(f);
      for (std::size_t i = 0; i < g.size(); ++i) rem[i] -= f * g[i];
      rem.erase(rem.begin());
    }
    sqfree = quo;
  }
  RealPoly<Real> sf{std::vector<Real>(sqfree)};
  if (sf.degree() < 1) return {};

  // Sturm chain of the square-free polynomial.
  std::vector<std::vector<Real>> chain;
  chain.push_back(sf.c);
  chain.push_back(sf.derivative().c);
  while (chain.back().size() > 1) {
    auto r = detail::poly_rem(chain[chain.size() - 2], chain.back());
    detail::chop_small(r, detail::scale_of(chain.back()) * Real(1e-12));
    if (r.empty()) break;
    for (Real& x : r) x = -x;
    chain.push_back(std::move(r));
  }

  auto count = [&](const Real& x0, const Real& x1) {
    return detail::sign_changes(chain, x0) - detail::sign_changes(chain, x1);
  };

  std::vector<std::pair<Real, Real>> stack{{lo, hi}};
  std::vector<Real> found;
  while (!stack.empty()) {
    auto [x0, x1] = stack.back();
    stack.pop_back();
    int n = count(x0, x1);
    if (n <= 0) continue;
    Real width_tol = tol * std::max(Real(1), std::max(fabs_(x0), fabs_(x1)));
    if (n == 1 || x1 - x0 < width_tol) {
      // bisect down to tolerance on a single-root (or unresolvable) interval
      Real a0 = x0, b0 = x1;
      for (int it = 0; it < 200 && b0 - a0 > width_tol; ++it) {
        Real mid = (a0 + b0) / Real(2);
        if (count(a0, mid) >= 1)
          b0 = mid;
        else
          a0 = mid;
      }
      Real x = (a0 + b0) / Real(2);
      // Newton polish on the square-free part
      RealPoly<Real> d = sf.derivative();
      for (int it = 0; it < 60; ++it) {
        Real fx = sf.eval(x), dx = d.eval(x);
        if (fabs_(dx) == Real(0)) break;
        Real step = fx / dx;
        Real xn = x - step;
        if (xn < lo || xn > hi) break;
        x = xn;
        if (fabs_(step) <= tol * std::max(Real(1), fabs_(x)) / Real(4)) break;
      }
      x = std::min(std::max(x, a0 - width_tol), b0 + width_tol);
      found.push_back(x);
      continue;
    }
    Real mid = (x0 + x1) / Real(2);
    stack.push_back({x0, mid});
    stack.push_back({mid, x1});
  }
  std::sort(found.begin(), found.end());

  // multiplicity by repeated deflation of the original polynomial
  std::vector<std::pair<Real, int>> out;
  for (const Real& r : found) {
    RealPoly<Real> cur = poly;
    int mult = 0;
    Real tol_val = std::max(cur.max_abs_coeff(), Real(1)) *
                   std::max(Real(1), fabs_(r));
    for (int j = 0; j <= poly.degree(); ++j) {
      Real rem = 0;
      RealPoly<Real> next = cur.deflate(r, &rem);
      if (fabs_(rem) > tol_val * Real(1e-7)) break;
      ++mult;
      cur = next;
      if (cur.degree() < 1) break;
    }
    out.push_back({r, std::max(mult, 1)});
  }
  return out;
}

}  // namespace positroid
