#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "positroid/curve.hpp"
#include "positroid/edge_vectors.hpp"
#include "positroid/network.hpp"
#include "positroid/soliton.hpp"

namespace positroid {

inline std::vector<int> trivalent_whites(const LeNetwork& net) {
  std::vector<int> out;
  for (const NetVertex& v : net.vertices)
    if ((v.kind == VertexKind::PivotWhite || v.kind == VertexKind::BoxWhite) &&
        net.find_edge(v.r, v.j, 1))
      out.push_back(v.id);
  return out;
}

inline std::vector<int> box_trivalent_whites(const LeNetwork& net) {
  std::vector<int> out;
  for (const NetVertex& v : net.vertices)
    if (v.kind == VertexKind::BoxWhite && net.find_edge(v.r, v.j, 1)) out.push_back(v.id);
  return out;
}

// edge values Phi(e) = sum_j v_j(e) exp(theta_j) at one time, common shift;
// scale carries the absolute-value sum for zero detection
template <class Real>
struct EdgeWaves {
  Real shift{};
  std::vector<Real> phi;
  std::vector<Real> scale;
};

template <class Real>
EdgeWaves<Real> vacuum_edge_waves(const LeNetwork& net, const EdgeVectorSystem& sys,
                                  const std::vector<Real>& kappa, const Times<Real>& tm) {
  using std::fabs;
  auto pb = phase_basis(kappa, tm);
  EdgeWaves<Real> w;
  w.shift = pb.M;
  w.phi.assign(net.edges.size(), Real(0));
  w.scale.assign(net.edges.size(), Real(0));
  for (const NetEdge& e : net.edges) {
    const auto& v = sys.vec(e.id);
    Real s(0), a(0);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      Real c = v[j].to<Real>();
      s += c * pb.E[j];
      a += fabs(c) * pb.E[j];
    }
    w.phi[static_cast<std::size_t>(e.id)] = s;
    w.scale[static_cast<std::size_t>(e.id)] = a;
  }
  return w;
}

template <class Real>
EdgeWaves<Real> dressed_edge_waves(const LeNetwork& net, const EdgeVectorSystem& sys,
                                   const std::vector<Real>& kappa, const DarbouxOp<Real>& op,
                                   const Times<Real>& tm) {
  using std::fabs;
  auto pb = phase_basis(kappa, tm);
  EdgeWaves<Real> w;
  w.shift = pb.M;
  w.phi.assign(net.edges.size(), Real(0));
  w.scale.assign(net.edges.size(), Real(0));
  for (const NetEdge& e : net.edges) {
    const auto& v = sys.vec(e.id);
    Real s(0), a(0);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      Real c = v[j].to<Real>() * op.char_poly(kappa[j]);
      s += c * pb.E[j];
      a += fabs(c) * pb.E[j];
    }
    w.phi[static_cast<std::size_t>(e.id)] = s;
    w.scale[static_cast<std::size_t>(e.id)] = a;
  }
  return w;
}

// conservation at whites, proportionality at blacks, boundary matching;
// returns the worst relative defect
template <class Real>
Real edge_wave_residual(const LeNetwork& net, const EdgeWaves<Real>& w,
                        const std::vector<Real>& kappa, const Times<Real>& tm,
                        bool vacuum_boundary = true) {
  using std::exp;
  using std::fabs;
  Real worst(0);
  auto phi = [&](int id) { return w.phi[static_cast<std::size_t>(id)]; };
  auto rel = [&](Real defect, Real scale) {
    return scale > Real(0) ? fabs(defect) / scale : fabs(defect);
  };
  for (const NetVertex& v : net.vertices) {
    if (v.kind == VertexKind::PivotWhite || v.kind == VertexKind::BoxWhite) {
      Real a(0), sc(0);
      if (auto e = net.find_edge(v.r, v.j, 1)) {
        a += phi(*e);
        sc += w.scale[static_cast<std::size_t>(*e)];
      }
      auto e2 = net.find_edge(v.r, v.j, 2);
      a += phi(*e2);
      sc += w.scale[static_cast<std::size_t>(*e2)];
      if (auto e3 = net.find_edge(v.r, v.j, 3)) {
        sc += w.scale[static_cast<std::size_t>(*e3)];
        worst = std::max(worst, rel(phi(*e3) - a, sc));
      }
    } else if (v.kind == VertexKind::BoxBlack) {
      int unit = -1, horiz = -1, vert = -1;
      for (int ie : net.out_edges[static_cast<std::size_t>(v.id)]) unit = ie;
      for (int ie : net.in_edges[static_cast<std::size_t>(v.id)]) {
        if (net.edge(ie).m == 1) horiz = ie;
        if (net.edge(ie).m == 2) vert = ie;
      }
      Real wu = phi(unit);
      Real whz = net.edge(horiz).weight.to<Real>();
      worst = std::max(worst, rel(phi(horiz) - whz * wu,
                                  w.scale[static_cast<std::size_t>(horiz)] +
                                      whz * w.scale[static_cast<std::size_t>(unit)]));
      if (vert >= 0) {
        int dr = v.r - net.edge(vert).r;
        Real sgn = (dr % 2) ? Real(-1) : Real(1);
        worst = std::max(worst, rel(phi(vert) - sgn * wu,
                                    w.scale[static_cast<std::size_t>(vert)] +
                                        w.scale[static_cast<std::size_t>(unit)]));
      }
    }
  }
  if (vacuum_boundary) {
    auto pb = phase_basis(kappa, tm);
    for (const NetEdge& e : net.edges) {
      const NetVertex& a = net.vertex(e.tail);
      const NetVertex& b = net.vertex(e.head);
      const NetVertex* bd = a.is_boundary() ? &a : (b.is_boundary() ? &b : nullptr);
      if (!bd) continue;
      Real ref = pb.E[static_cast<std::size_t>(bd->j - 1)];
      worst = std::max(worst, rel(fabs(phi(e.id)) - ref,
                                  ref + w.scale[static_cast<std::size_t>(e.id)]));
    }
  }
  return worst;
}

template <class Real>
struct WhiteGamma {
  int vertex = -1;
  Real gamma{};
};

template <class Real>
std::vector<WhiteGamma<Real>> white_gammas(const LeNetwork& net, const EdgeWaves<Real>& w,
                                           const std::vector<int>& whites) {
  std::vector<WhiteGamma<Real>> out;
  for (int vid : whites) {
    const NetVertex& v = net.vertex(vid);
    auto e1 = net.find_edge(v.r, v.j, 1);
    auto e3 = net.find_edge(v.r, v.j, 3);
    Real p3 = w.phi[static_cast<std::size_t>(*e3)];
    if (p3 == Real(0)) throw T0SearchError("divisor number undefined: zero denominator");
    out.push_back({vid, w.phi[static_cast<std::size_t>(*e1)] / p3});
  }
  return out;
}

// schedule of sample times along the x axis; accepted when every divisor
// number stays clear of 0 and 1 and all needed edge values are nonzero
template <class Real>
struct T0Choice {
  Times<Real> t0;
  int attempts = 0;
};

template <class Real>
T0Choice<Real> choose_t0(const SolitonData& data, const LeNetwork& net,
                         const EdgeVectorSystem& sys, bool need_dressed) {
  using std::fabs;
  auto kap = data.kappa_real<Real>();
  Real spread = kap.back() - kap.front();
  if (!(spread > Real(0))) throw T0SearchError("phases are not separated");
  Real base = Real(12) / spread;
  const Real eps_deg = Real(1e-8);
  const Real eps_zero = Real(1e-10);

  auto whites_v = trivalent_whites(net);
  auto whites_b = box_trivalent_whites(net);
  std::vector<int> empty_rows = data.empty_rows();
  auto row_is_empty = [&](int r) {
    return std::find(empty_rows.begin(), empty_rows.end(), r) != empty_rows.end();
  };

  T0Choice<Real> choice;
  for (int step = 0; step < 24; ++step) {
    ++choice.attempts;
    Real mag = base;
    for (int m = 0; m < step / 2; ++m) mag *= Real(2);
    Times<Real> tm;
    tm.x = (step % 2) ? -mag : mag;

    auto wv = vacuum_edge_waves(net, sys, kap, tm);
    bool ok = true;
    for (const NetEdge& e : net.edges) {
      Real sc = wv.scale[static_cast<std::size_t>(e.id)];
      if (fabs(wv.phi[static_cast<std::size_t>(e.id)]) <= eps_zero * sc) ok = false;
    }
    if (ok) {
      for (int vid : whites_v) {
        const NetVertex& v = net.vertex(vid);
        Real p1 = wv.phi[static_cast<std::size_t>(*net.find_edge(v.r, v.j, 1))];
        Real p3 = wv.phi[static_cast<std::size_t>(*net.find_edge(v.r, v.j, 3))];
        Real g = p1 / p3;
        if (fabs(g) <= eps_deg || fabs(g - Real(1)) <= eps_deg) ok = false;
      }
    }
    if (ok && need_dressed) {
      auto op = darboux_at(data, tm);
      auto wd = dressed_edge_waves(net, sys, kap, op, tm);
      for (const NetEdge& e : net.edges) {
        if (e.m == 3 && e.j == 0) continue;             // dangling edges vanish
        if (row_is_empty(e.r)) continue;                // identically dressed to zero
        Real sc = wd.scale[static_cast<std::size_t>(e.id)];
        if (sc == Real(0) || fabs(wd.phi[static_cast<std::size_t>(e.id)]) <= eps_zero * sc)
          ok = false;
      }
      if (ok) {
        for (int vid : whites_b) {
          const NetVertex& v = net.vertex(vid);
          Real p1 = wd.phi[static_cast<std::size_t>(*net.find_edge(v.r, v.j, 1))];
          Real p3 = wd.phi[static_cast<std::size_t>(*net.find_edge(v.r, v.j, 3))];
          Real g = p1 / p3;
          if (fabs(g) <= eps_deg || fabs(g - Real(1)) <= eps_deg) ok = false;
        }
      }
    }
    if (ok) {
      choice.t0 = tm;
      return choice;
    }
  }
  throw T0SearchError("no admissible base time found");
}

enum class DivisorKind { Vacuum, Dressed, Sato };

template <class Real>
struct DivisorPoint {
  DivisorKind kind = DivisorKind::Vacuum;
  int vertex = -1;    // white vertex for vertex-supported points
  Real zeta{};        // local coordinate (gamma value or Sato root)
  int oval = -1;      // -1 when unassigned
  int interval = 0;   // Sato points: j with kappa_j <= zeta <= kappa_{j+1}
  bool boundary_hit = false;
};

template <class Real>
int gamma_oval(const OvalMap& om, int vertex, Real g) {
  if (g > Real(0) && g < Real(1)) return om.corner_oval(vertex, 1);
  if (g > Real(1)) return om.corner_oval(vertex, 2);
  if (g < Real(0)) return om.corner_oval(vertex, 3);
  throw PropertyError("gamma_oval: divisor number sits on a double point");
}

template <class Real>
struct DivisorConfig {
  Times<Real> t0;
  std::vector<DivisorPoint<Real>> vacuum;  // degree d
  std::vector<DivisorPoint<Real>> kp;      // degree d: dressed plus Sato
};

template <class Real>
DivisorConfig<Real> assemble_divisors(const SolitonData& data, const LeNetwork& net,
                                      const EdgeVectorSystem& sys, const OvalMap& om,
                                      const Times<Real>& t0) {
  auto kap = data.kappa_real<Real>();
  DivisorConfig<Real> cfg;
  cfg.t0 = t0;

  auto wv = vacuum_edge_waves(net, sys, kap, t0);
  for (const auto& g : white_gammas(net, wv, trivalent_whites(net))) {
    DivisorPoint<Real> p;
    p.kind = DivisorKind::Vacuum;
    p.vertex = g.vertex;
    p.zeta = g.gamma;
    p.oval = gamma_oval(om, g.vertex, g.gamma);
    cfg.vacuum.push_back(p);
  }

  auto op = darboux_at(data, t0);
  auto wd = dressed_edge_waves(net, sys, kap, op, t0);
  for (const auto& g : white_gammas(net, wd, box_trivalent_whites(net))) {
    DivisorPoint<Real> p;
    p.kind = DivisorKind::Dressed;
    p.vertex = g.vertex;
    p.zeta = g.gamma;
    p.oval = gamma_oval(om, g.vertex, g.gamma);
    cfg.kp.push_back(p);
  }
  auto sato = sato_divisor(data, op);
  for (std::size_t i = 0; i < sato.roots.size(); ++i) {
    DivisorPoint<Real> p;
    p.kind = DivisorKind::Sato;
    p.zeta = sato.roots[i];
    p.interval = sato.interval[i];
    p.boundary_hit = sato.boundary_hit[i];
    p.oval = p.boundary_hit ? -1 : om.segment_oval(p.interval);
    cfg.kp.push_back(p);
  }
  return cfg;
}

struct ParityReport {
  std::vector<int> nu;  // vacuum points per oval
  std::vector<int> mu;  // dangling-edge marked points per oval
  int violations = 0;
  bool ok = false;
};

template <class Real>
ParityReport parity_check(const OvalMap& om, const DivisorConfig<Real>& cfg) {
  ParityReport rep;
  rep.nu.assign(static_cast<std::size_t>(om.n_ovals), 0);
  rep.mu.assign(static_cast<std::size_t>(om.n_ovals), 0);
  for (const auto& p : cfg.vacuum)
    if (p.oval >= 0) ++rep.nu[static_cast<std::size_t>(p.oval)];
  for (int r = 1; r <= om.k; ++r) ++rep.mu[static_cast<std::size_t>(om.darboux_oval(r))];
  for (int s = 0; s < om.n_ovals; ++s) {
    int total = rep.nu[static_cast<std::size_t>(s)] + rep.mu[static_cast<std::size_t>(s)];
    if (s == 0) {
      if ((total - om.k) % 2 != 0) ++rep.violations;
    } else {
      if (total % 2 != 1) ++rep.violations;
    }
  }
  rep.ok = rep.violations == 0;
  return rep;
}

struct KPOvalReport {
  std::vector<int> count;
  bool one_per_finite_oval = false;
  bool omega0_empty = false;
  int unassigned = 0;
  bool ok = false;
};

template <class Real>
KPOvalReport kp_oval_check(const OvalMap& om, const DivisorConfig<Real>& cfg) {
  KPOvalReport rep;
  rep.count.assign(static_cast<std::size_t>(om.n_ovals), 0);
  for (const auto& p : cfg.kp) {
    if (p.oval < 0) {
      ++rep.unassigned;
      continue;
    }
    ++rep.count[static_cast<std::size_t>(p.oval)];
  }
  rep.one_per_finite_oval = true;
  for (int s = 1; s < om.n_ovals; ++s)
    if (rep.count[static_cast<std::size_t>(s)] != 1) rep.one_per_finite_oval = false;
  rep.omega0_empty = rep.count[0] == 0;
  rep.ok = rep.one_per_finite_oval && rep.omega0_empty && rep.unassigned == 0;
  return rep;
}

// normalized third-point identity at every trivalent white over sample times
template <class Real>
Real interpolation_residual(const LeNetwork& net, const EdgeVectorSystem& sys,
                            const std::vector<Real>& kappa, const Times<Real>& t0,
                            const std::vector<Times<Real>>& samples) {
  using std::exp;
  using std::fabs;
  auto w0 = vacuum_edge_waves(net, sys, kappa, t0);
  auto whites = trivalent_whites(net);
  Real worst(0);
  for (const auto& tm : samples) {
    auto wt = vacuum_edge_waves(net, sys, kappa, tm);
    Real sh = exp(wt.shift - w0.shift);
    for (int vid : whites) {
      const NetVertex& v = net.vertex(vid);
      int e1 = *net.find_edge(v.r, v.j, 1);
      int e2 = *net.find_edge(v.r, v.j, 2);
      int e3 = *net.find_edge(v.r, v.j, 3);
      Real g = w0.phi[static_cast<std::size_t>(e1)] / w0.phi[static_cast<std::size_t>(e3)];
      auto hat = [&](int e) {
        return wt.phi[static_cast<std::size_t>(e)] / w0.phi[static_cast<std::size_t>(e)] * sh;
      };
      Real lhs = hat(e3);
      Real rhs = g * hat(e1) + (Real(1) - g) * hat(e2);
      Real den = fabs(lhs) + fabs(g * hat(e1)) + fabs((Real(1) - g) * hat(e2));
      if (den > Real(0)) worst = std::max(worst, fabs(lhs - rhs) / den);
    }
  }
  return worst;
}

// wave-function match across every double point of the glued curve
template <class Real>
Real glued_pair_residual(const LeNetwork& net, const EdgeVectorSystem& sys,
                         const std::vector<Real>& kappa, const Times<Real>& t0,
                         const std::vector<Times<Real>>& samples) {
  using std::exp;
  using std::fabs;
  auto w0 = vacuum_edge_waves(net, sys, kappa, t0);
  auto pb0 = phase_basis(kappa, t0);

  auto black_other_edge = [&](int vid, int glue_edge) {
    int unit = net.out_edges[static_cast<std::size_t>(vid)][0];
    if (glue_edge != unit) return unit;
    for (int ie : net.in_edges[static_cast<std::size_t>(vid)])
      if (net.edge(ie).m == 1) return ie;
    return unit;
  };

  Real worst(0);
  for (const auto& tm : samples) {
    auto wt = vacuum_edge_waves(net, sys, kappa, tm);
    auto pbt = phase_basis(kappa, tm);
    Real sh = exp(wt.shift - w0.shift);
    auto hat = [&](int e) {
      return wt.phi[static_cast<std::size_t>(e)] / w0.phi[static_cast<std::size_t>(e)] * sh;
    };
    auto side_value = [&](int vid, int edge) -> Real {
      const NetVertex& v = net.vertex(vid);
      if (v.is_boundary())
        return exp(pbt.theta[static_cast<std::size_t>(v.j - 1)] -
                   pb0.theta[static_cast<std::size_t>(v.j - 1)]);
      if (v.is_black()) return hat(black_other_edge(vid, edge));
      return hat(edge);
    };
    for (const NetEdge& e : net.edges) {
      if (net.vertex(e.tail).kind == VertexKind::DarbouxWhite) continue;
      Real a = side_value(e.tail, e.id);
      Real b = side_value(e.head, e.id);
      Real den = std::max(fabs(a), fabs(b));
      if (den > Real(0)) worst = std::max(worst, fabs(a - b) / den);
    }
  }
  return worst;
}

// dressed variant: pairs whose reference value vanishes identically (empty
// pivot rows, dangling edges) are skipped, everything else must match
template <class Real>
Real dressed_glued_pair_residual(const SolitonData& data, const LeNetwork& net,
                                 const EdgeVectorSystem& sys, const std::vector<Real>& kappa,
                                 const Times<Real>& t0, const std::vector<Times<Real>>& samples) {
  using std::exp;
  using std::fabs;
  const Real eps_zero = Real(1e-10);
  auto op0 = darboux_at(data, t0);
  auto w0 = dressed_edge_waves(net, sys, kappa, op0, t0);
  auto pb0 = phase_basis(kappa, t0);

  auto usable = [&](int e) {
    Real sc = w0.scale[static_cast<std::size_t>(e)];
    return sc > Real(0) && fabs(w0.phi[static_cast<std::size_t>(e)]) > eps_zero * sc;
  };
  auto pscale = [&](const DarbouxOp<Real>& op, Real q) {
    Real s(1), p(1);
    for (int m = 0; m < op.k; ++m) {
      p *= fabs(q);
      s = s * fabs(q) + fabs(op.w[static_cast<std::size_t>(m)]);
    }
    return s + p;
  };
  auto black_other_edge = [&](int vid, int glue_edge) {
    int unit = net.out_edges[static_cast<std::size_t>(vid)][0];
    if (glue_edge != unit) return unit;
    for (int ie : net.in_edges[static_cast<std::size_t>(vid)])
      if (net.edge(ie).m == 1) return ie;
    return unit;
  };

  Real worst(0);
  for (const auto& tm : samples) {
    auto op = darboux_at(data, tm);
    auto wt = dressed_edge_waves(net, sys, kappa, op, tm);
    auto pbt = phase_basis(kappa, tm);
    Real sh = exp(wt.shift - w0.shift);
    auto hat = [&](int e) {
      return wt.phi[static_cast<std::size_t>(e)] / w0.phi[static_cast<std::size_t>(e)] * sh;
    };
    for (const NetEdge& e : net.edges) {
      if (net.vertex(e.tail).kind == VertexKind::DarbouxWhite) continue;
      bool ok = true;
      Real side[2];
      int endpoint[2] = {e.tail, e.head};
      for (int s = 0; s < 2 && ok; ++s) {
        const NetVertex& v = net.vertex(endpoint[s]);
        if (v.is_boundary()) {
          std::size_t j = static_cast<std::size_t>(v.j - 1);
          Real p0 = op0.char_poly(kappa[j]);
          if (fabs(p0) <= eps_zero * pscale(op0, kappa[j])) {
            ok = false;
            break;
          }
          side[s] = op.char_poly(kappa[j]) * exp(pbt.theta[j] - pb0.theta[j]) / p0;
        } else if (v.is_black()) {
          int other = black_other_edge(v.id, e.id);
          if (!usable(other)) {
            ok = false;
            break;
          }
          side[s] = hat(other);
        } else {
          if (!usable(e.id)) {
            ok = false;
            break;
          }
          side[s] = hat(e.id);
        }
      }
      if (!ok) continue;
      Real den = std::max(fabs(side[0]), fabs(side[1]));
      if (den > Real(0)) worst = std::max(worst, fabs(side[0] - side[1]) / den);
    }
  }
  return worst;
}

// Normalized wave value on one curve component in its local coordinate,
// from edge waves at the base time (w0) and at the evaluation time (wt).
// Degree-1 with a pole at the divisor number on trivalent whites, constant
// on bivalent whites and on blacks. vertex -1 is the boundary line, whose
// coordinate is the phase itself. Dressed waves may be supplied instead;
// components where the reference value vanishes identically are rejected.
template <class Real>
Real wave_on_curve(const LeNetwork& net, const EdgeWaves<Real>& w0, const EdgeWaves<Real>& wt,
                   const Times<Real>& t0, const Times<Real>& tm, int vertex, Real zeta) {
  using std::exp;
  using std::isinf;
  if (vertex < 0) return exp(theta(zeta, tm) - theta(zeta, t0));
  const NetVertex& v = net.vertex(vertex);
  Real sh = exp(wt.shift - w0.shift);
  auto hat = [&](int e) {
    Real p0 = w0.phi[static_cast<std::size_t>(e)];
    if (p0 == Real(0)) throw PropertyError("wave_on_curve: vanishing reference value");
    return wt.phi[static_cast<std::size_t>(e)] / p0 * sh;
  };
  if (v.is_black()) return hat(net.out_edges[static_cast<std::size_t>(v.id)][0]);
  if (v.kind == VertexKind::DarbouxWhite)
    throw PropertyError("wave_on_curve: not a curve component");
  auto e3 = net.find_edge(v.r, v.j, 3);
  auto e1 = net.find_edge(v.r, v.j, 1);
  if (!e1 || isinf(zeta)) return hat(*e3);
  int e2 = *net.find_edge(v.r, v.j, 2);
  Real p3 = w0.phi[static_cast<std::size_t>(*e3)];
  if (p3 == Real(0)) throw PropertyError("wave_on_curve: vanishing reference value");
  Real g = w0.phi[static_cast<std::size_t>(*e1)] / p3;
  if (zeta == g) throw PropertyError("wave_on_curve: evaluation at the pole");
  return (wt.phi[static_cast<std::size_t>(*e1)] * (zeta - Real(1)) +
          wt.phi[static_cast<std::size_t>(e2)] * zeta) /
         (p3 * (zeta - g)) * sh;
}

// closed-form dressed divisor coordinates for the small totally positive
// 2 x 4 case, written in D_j = (char poly at kappa_j) exp(theta_j)
template <class Real>
struct Gr24DressedForms {
  Real gamma13{};
  Real gamma23{};
};

template <class Real>
Gr24DressedForms<Real> gr24_dressed_closed(const SolitonData& data, const Times<Real>& t0) {
  if (data.k() != 2 || data.n() != 4)
    throw Error("gr24_dressed_closed: needs the 2 x 4 case");
  auto kap = data.kappa_real<Real>();
  auto op = darboux_at(data, t0);
  auto pb = phase_basis(kap, t0);
  Real D2 = op.char_poly(kap[1]) * pb.E[1];
  Real D3 = op.char_poly(kap[2]) * pb.E[2];
  Real w14 = data.tableau.weight(1, 4).to<Real>();
  Real w23 = data.tableau.weight(2, 3).to<Real>();
  Real w24 = data.tableau.weight(2, 4).to<Real>();
  Gr24DressedForms<Real> f;
  f.gamma23 = Real(1) + w23 * D3 / D2;
  f.gamma13 = w14 * (D2 + w23 * D3) / ((w14 + w24) * D2 + w23 * w14 * D3);
  return f;
}

// one-parameter family of divisor coordinates in the tilde chart, mapped
// back to the vertex chart
template <class Real>
struct Gr24XiDivisor {
  Real zeta1{};
  Real zeta2{};
};

template <class Real>
Gr24XiDivisor<Real> gr24_xi_divisor(const SolitonData& data, const Times<Real>& t0, Real xi) {
  if (data.k() != 2 || data.n() != 4)
    throw Error("gr24_xi_divisor: needs the 2 x 4 case");
  auto kap = data.kappa_real<Real>();
  auto op = darboux_at(data, t0);
  auto pb = phase_basis(kap, t0);
  Real D2 = op.char_poly(kap[1]) * pb.E[1];
  Real D3 = op.char_poly(kap[2]) * pb.E[2];
  Real w14 = data.tableau.weight(1, 4).to<Real>();
  Real w23 = data.tableau.weight(2, 3).to<Real>();
  Real w24 = data.tableau.weight(2, 4).to<Real>();

  Real x2 = xi * xi, x3 = xi * xi * xi;
  Real zt1 = -x2 * D2 / (x2 * D2 + w23 * (x2 - Real(1)) * D3);
  Real num2 = -x3 * (xi - Real(1)) * ((w14 + w24) * D2 + w14 * w23 * D3);
  Real den2 = w23 * (xi - Real(1)) * (w14 * (x3 + xi + Real(1)) + w24 * (Real(1) - x2)) * D3 +
              x2 * ((x2 - Real(1)) * w14 + (Real(1) - xi) * w24) * D2;
  Real zt2 = num2 / den2;

  auto back = [&](Real zt) { return (Real(1) + x2 / zt) / (Real(1) - x2); };
  Gr24XiDivisor<Real> out;
  out.zeta1 = back(zt1);
  out.zeta2 = back(zt2);
  return out;
}

}  // namespace positroid
