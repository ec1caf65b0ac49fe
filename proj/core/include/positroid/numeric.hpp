#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "positroid/errors.hpp"
#include "positroid/rational.hpp"

namespace positroid {

// value = mant * exp(shift); keeps tau-scale quantities representable
template <class Real>
struct Scaled {
  Real mant{};
  Real shift{};

  bool is_zero() const { return mant == Real(0); }
  int sign() const { return mant > Real(0) ? 1 : (mant < Real(0) ? -1 : 0); }

  Real value() const {
    using std::exp;
    return mant * exp(shift);
  }
};

template <class Real>
Real scaled_ratio(const Scaled<Real>& a, const Scaled<Real>& b) {
  using std::exp;
  if (b.is_zero()) throw Error("scaled_ratio: division by zero");
  return (a.mant / b.mant) * exp(a.shift - b.shift);
}

template <class Real>
Real scaled_rel_diff(const Scaled<Real>& a, const Scaled<Real>& b) {
  using std::exp;
  using std::fabs;
  Real scale = fabs(b.mant);
  if (scale == Real(0)) {
    if (a.mant == Real(0)) return Real(0);
    return fabs(a.mant) * exp(a.shift - b.shift);
  }
  return fabs(a.mant * exp(a.shift - b.shift) - b.mant) / scale;
}

// dense LU determinant with partial pivoting, in place
template <class Real>
Real lu_det(std::vector<std::vector<Real>>& m) {
  using std::fabs;
  std::size_t n = m.size();
  Real det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (fabs(m[r][c]) > fabs(m[best][c])) best = r;
    if (m[best][c] == Real(0)) return Real(0);
    if (best != c) {
      std::swap(m[best], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Real f = m[r][c] / m[c][c];
      if (f == Real(0)) continue;
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

// solve m x = b in place, throws on singular m
template <class Real>
std::vector<Real> lu_solve(std::vector<std::vector<Real>> m, std::vector<Real> b) {
  using std::fabs;
  std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (fabs(m[r][c]) > fabs(m[best][c])) best = r;
    if (m[best][c] == Real(0)) throw Error("lu_solve: singular matrix");
    if (best != c) {
      std::swap(m[best], m[c]);
      std::swap(b[best], b[c]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      Real f = m[r][c] / m[c][c];
      if (f == Real(0)) continue;
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<Real> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Real s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= m[i][j] * x[j];
    x[i] = s / m[i][i];
  }
  return x;
}

inline long binomial_long(int n, int r) {
  if (r < 0 || r > n) return 0;
  long v = 1;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

// log-derivative sequence from normalized derivatives p[m] = f^(m)/f,
// l[m] = (log f)^(m); p[0] must be 1
template <class Real>
std::vector<Real> log_derivatives(const std::vector<Real>& p) {
  std::vector<Real> l(p.size(), Real(0));
  for (std::size_t m = 1; m < p.size(); ++m) {
    Real s = p[m];
    for (std::size_t i = 0; i + 2 <= m; ++i)
      s -= Real(binomial_long(static_cast<int>(m - 1), static_cast<int>(i))) * l[i + 1] *
           p[m - 1 - i];
    l[m] = s;
  }
  return l;
}

template <class Real>
Real to_real(const Rational& q) {
  return q.template to<Real>();
}

}  // namespace positroid
