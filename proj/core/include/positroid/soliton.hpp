#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "positroid/le.hpp"
#include "positroid/matrix.hpp"
#include "positroid/network.hpp"
#include "positroid/numeric.hpp"
#include "positroid/poly.hpp"

namespace positroid {

template <class Real>
struct Times {
  Real x{};
  Real y{};
  Real t{};
  std::vector<Real> higher;  // coefficients of the fourth and later flows
};

template <class Real>
Real theta(Real kappa, const Times<Real>& tm) {
  Real th = kappa * tm.x + kappa * kappa * tm.y + kappa * kappa * kappa * tm.t;
  Real p = kappa * kappa * kappa;
  for (const Real& c : tm.higher) {
    p *= kappa;
    th += c * p;
  }
  return th;
}

// exp(theta_j - M) for all phases at one time, M = max theta
template <class Real>
struct PhaseBasis {
  std::vector<Real> theta;
  std::vector<Real> E;
  Real M{};
};

template <class Real>
PhaseBasis<Real> phase_basis(const std::vector<Real>& kappa, const Times<Real>& tm) {
  using std::exp;
  PhaseBasis<Real> pb;
  pb.theta.reserve(kappa.size());
  for (const Real& q : kappa) pb.theta.push_back(theta(q, tm));
  pb.M = pb.theta.empty() ? Real(0) : *std::max_element(pb.theta.begin(), pb.theta.end());
  pb.E.reserve(kappa.size());
  for (const Real& th : pb.theta) pb.E.push_back(exp(th - pb.M));
  return pb;
}

template <class Real>
Scaled<Real> combine(const std::vector<Real>& coef, const PhaseBasis<Real>& pb) {
  Real s(0);
  for (std::size_t j = 0; j < coef.size(); ++j)
    if (coef[j] != Real(0)) s += coef[j] * pb.E[j];
  return {s, pb.M};
}

struct SolitonData {
  LeTableau tableau;
  RatMatrix A;
  std::vector<int> pivots;
  std::vector<Rational> kappa;

  int k() const { return tableau.diagram.k; }
  int n() const { return tableau.diagram.n; }

  std::vector<int> empty_rows() const {
    std::vector<int> out;
    for (int r = 1; r <= k(); ++r)
      if (tableau.diagram.row_empty(r)) out.push_back(r);
    return out;
  }
  int reduced_degree() const { return k() - static_cast<int>(empty_rows().size()); }

  template <class Real>
  std::vector<Real> kappa_real() const {
    std::vector<Real> out;
    out.reserve(kappa.size());
    for (const Rational& q : kappa) out.push_back(q.template to<Real>());
    return out;
  }

  void validate() const {
    tableau.validate();
    if (static_cast<int>(kappa.size()) != n())
      throw Error("SolitonData: phase count must equal n");
    for (std::size_t j = 1; j < kappa.size(); ++j)
      if (!(kappa[j - 1] < kappa[j]))
        throw Error("SolitonData: phases must be strictly increasing");
  }
};

SolitonData make_soliton_data(const LeTableau& t, std::vector<Rational> kappa);

// tau as an explicit positive combination of exponentials, one term per
// column subset with a nonzero maximal minor
struct TauTerm {
  std::vector<int> cols;  // 1-based, ascending
  Rational coef;          // minor times Vandermonde, positive
};

class TauMinorSum {
 public:
  explicit TauMinorSum(const SolitonData& data);

  const std::vector<TauTerm>& terms() const { return terms_; }
  const SolitonData& data() const { return *data_; }

  template <class Real>
  struct Eval {
    Real shift{};
    std::vector<Real> weight;  // coef * exp(Theta_J - shift)
    std::vector<Real> K1, K2, K3;

    Scaled<Real> deriv(int p, int q, int s) const {
      Real m(0);
      for (std::size_t i = 0; i < weight.size(); ++i) {
        Real f = weight[i];
        for (int a = 0; a < p; ++a) f *= K1[i];
        for (int a = 0; a < q; ++a) f *= K2[i];
        for (int a = 0; a < s; ++a) f *= K3[i];
        m += f;
      }
      return {m, shift};
    }
    Scaled<Real> value() const { return deriv(0, 0, 0); }
  };

  template <class Real>
  Eval<Real> eval(const Times<Real>& tm) const {
    using std::exp;
    auto kap = data_->kappa_real<Real>();
    Eval<Real> ev;
    std::vector<Real> Th(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      Real th(0), K1(0), K2(0), K3(0);
      for (int j : terms_[i].cols) {
        Real q = kap[static_cast<std::size_t>(j - 1)];
        th += theta(q, tm);
        K1 += q;
        K2 += q * q;
        K3 += q * q * q;
      }
      Th[i] = th;
      ev.K1.push_back(K1);
      ev.K2.push_back(K2);
      ev.K3.push_back(K3);
    }
    ev.shift = *std::max_element(Th.begin(), Th.end());
    ev.weight.resize(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i)
      ev.weight[i] = terms_[i].coef.to<Real>() * exp(Th[i] - ev.shift);
    return ev;
  }

 private:
  const SolitonData* data_;
  std::vector<TauTerm> terms_;
};

// Wronskian route: determinant of x-derivatives of the row functions
template <class Real>
Scaled<Real> tau_wronskian(const SolitonData& data, const Times<Real>& tm) {
  auto kap = data.kappa_real<Real>();
  auto pb = phase_basis(kap, tm);
  int k = data.k(), n = data.n();
  std::vector<std::vector<Real>> W(static_cast<std::size_t>(k),
                                   std::vector<Real>(static_cast<std::size_t>(k), Real(0)));
  for (int r = 0; r < k; ++r)
    for (int m = 0; m < k; ++m) {
      Real s(0);
      for (int j = 0; j < n; ++j) {
        Rational a = data.A.at(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
        if (a.is_zero()) continue;
        Real f = a.to<Real>() * pb.E[static_cast<std::size_t>(j)];
        for (int p = 0; p < m; ++p) f *= kap[static_cast<std::size_t>(j)];
        s += f;
      }
      W[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] = s;
    }
  Real det = lu_det(W);
  return {det, Real(k) * pb.M};
}

// u and its x-derivatives (orders 0..4) at one point; throws when tau fails
// to stay positive
template <class Real>
std::vector<Real> u_derivatives(const typename TauMinorSum::Eval<Real>& ev, int orders = 2) {
  Real tau = ev.value().mant;
  if (!(tau > Real(0))) throw RegularityError("tau is not positive");
  std::vector<Real> p(static_cast<std::size_t>(orders + 3));
  p[0] = Real(1);
  for (int m = 1; m <= orders + 2; ++m) p[static_cast<std::size_t>(m)] = ev.deriv(m, 0, 0).mant / tau;
  auto l = log_derivatives(p);
  std::vector<Real> out(static_cast<std::size_t>(orders + 1));
  for (int m = 0; m <= orders; ++m) out[static_cast<std::size_t>(m)] = Real(2) * l[static_cast<std::size_t>(m + 2)];
  return out;
}

template <class Real>
Real u_value(const TauMinorSum& tau, const Times<Real>& tm) {
  auto ev = tau.eval(tm);
  return u_derivatives<Real>(ev, 0)[0];
}

// residual of (-4 u_t + 6 u u_x + u_xxx)_x + 3 u_yy with analytic x
// derivatives and central differences of step h in y and t
template <class Real>
Real kp_residual(const TauMinorSum& tau, const Times<Real>& tm, Real h) {
  auto du = u_derivatives<Real>(tau.eval(tm), 4);
  Times<Real> tp = tm, tmn = tm, yp = tm, ym = tm;
  tp.t += h;
  tmn.t -= h;
  yp.y += h;
  ym.y -= h;
  Real ux_tp = u_derivatives<Real>(tau.eval(tp), 1)[1];
  Real ux_tm = u_derivatives<Real>(tau.eval(tmn), 1)[1];
  Real u_yp = u_value(tau, yp);
  Real u_ym = u_value(tau, ym);
  Real utx = (ux_tp - ux_tm) / (Real(2) * h);
  Real uyy = (u_yp - Real(2) * du[0] + u_ym) / (h * h);
  return Real(-4) * utx + Real(6) * (du[1] * du[1] + du[0] * du[2]) + du[4] + Real(3) * uyy;
}

// Dressing operator: d_x^k - w_1 d_x^(k-1) - ... - w_k annihilating the rows
template <class Real>
struct DarbouxOp {
  int k = 0;
  std::vector<Real> w;  // w[0] = w_1 ... w[k-1] = w_k
  Real residual{};      // relative annihilation defect at the sample time

  Real char_poly(Real zeta) const {
    Real v(1);
    for (int m = 0; m < k; ++m) v = v * zeta - w[static_cast<std::size_t>(m)];
    return v;
  }
};

template <class Real>
DarbouxOp<Real> darboux_at(const SolitonData& data, const Times<Real>& tm) {
  using std::fabs;
  auto kap = data.kappa_real<Real>();
  auto pb = phase_basis(kap, tm);
  int k = data.k(), n = data.n();

  auto frow = [&](int r, int s) {
    Real v(0);
    for (int j = 0; j < n; ++j) {
      Rational a = data.A.at(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
      if (a.is_zero()) continue;
      Real f = a.to<Real>() * pb.E[static_cast<std::size_t>(j)];
      for (int p = 0; p < s; ++p) f *= kap[static_cast<std::size_t>(j)];
      v += f;
    }
    return v;
  };

  std::vector<std::vector<Real>> M(static_cast<std::size_t>(k),
                                   std::vector<Real>(static_cast<std::size_t>(k)));
  std::vector<Real> b(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) {
    for (int m = 1; m <= k; ++m)
      M[static_cast<std::size_t>(r)][static_cast<std::size_t>(m - 1)] = frow(r, k - m);
    b[static_cast<std::size_t>(r)] = frow(r, k);
  }
  DarbouxOp<Real> op;
  op.k = k;
  op.w = lu_solve(M, b);

  Real worst(0);
  for (int r = 0; r < k; ++r) {
    Real num(0), den(0);
    for (int j = 0; j < n; ++j) {
      Rational a = data.A.at(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
      if (a.is_zero()) continue;
      Real f = a.to<Real>() * pb.E[static_cast<std::size_t>(j)];
      Real pk = op.char_poly(kap[static_cast<std::size_t>(j)]);
      num += f * pk;
      den += fabs(f * pk) + fabs(f);
    }
    if (den > Real(0)) worst = std::max(worst, fabs(num) / den);
  }
  op.residual = worst;
  return op;
}

// real roots of the dressing characteristic polynomial after splitting off
// the exact factors contributed by empty pivot rows
template <class Real>
struct SatoDivisor {
  std::vector<Real> roots;       // ascending, multiplicity expanded
  std::vector<int> interval;     // j with kappa_j <= root <= kappa_{j+1}
  std::vector<bool> boundary_hit;
  bool all_real = false;
  bool in_range = false;
  bool distinct = false;
};

template <class Real>
SatoDivisor<Real> sato_divisor(const SolitonData& data, const DarbouxOp<Real>& op) {
  using std::fabs;
  auto kap = data.kappa_real<Real>();
  int n = data.n();
  std::vector<Real> coef(static_cast<std::size_t>(op.k + 1));
  coef[0] = Real(1);
  for (int m = 1; m <= op.k; ++m) coef[static_cast<std::size_t>(m)] = -op.w[static_cast<std::size_t>(m - 1)];
  RealPoly<Real> P{coef};

  for (int r : data.empty_rows()) {
    int ir = data.pivots[static_cast<std::size_t>(r - 1)];
    Real rem{};
    P = P.deflate(kap[static_cast<std::size_t>(ir - 1)], &rem);
  }

  Real spread = kap[static_cast<std::size_t>(n - 1)] - kap[0];
  Real margin = spread * Real(1e-6) + Real(1e-9);
  auto found = real_roots(P, kap[0] - margin, kap[static_cast<std::size_t>(n - 1)] + margin);

  SatoDivisor<Real> sd;
  for (const auto& rm : found)
    for (int c = 0; c < rm.second; ++c) sd.roots.push_back(rm.first);
  std::sort(sd.roots.begin(), sd.roots.end());
  sd.all_real = static_cast<int>(sd.roots.size()) == data.reduced_degree();

  Real btol = spread * Real(1e-9) + Real(1e-12);
  sd.in_range = true;
  for (const Real& z : sd.roots) {
    bool hit = false;
    for (const Real& q : kap) hit = hit || fabs(z - q) <= btol;
    sd.boundary_hit.push_back(hit);
    if (z < kap[0] - btol || z > kap[static_cast<std::size_t>(n - 1)] + btol) sd.in_range = false;
    int iv = 1;
    for (int j = 1; j < n; ++j)
      if (kap[static_cast<std::size_t>(j - 1)] <= z) iv = j;
    sd.interval.push_back(iv);
  }
  sd.distinct = true;
  for (std::size_t i = 1; i < sd.roots.size(); ++i)
    if (fabs(sd.roots[i] - sd.roots[i - 1]) <= btol) sd.distinct = false;
  return sd;
}

}  // namespace positroid
