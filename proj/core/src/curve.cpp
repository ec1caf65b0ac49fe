#include "positroid/curve.hpp"

#include <algorithm>

namespace positroid {

namespace {

int zeta_class_for_slot(int slot) { return slot - 1; }  // 1,2,3 -> 0,1,inf

}  // namespace

CurveModel build_curve(const LeNetwork& net) {
  if (!net.modified) throw Error("build_curve: expects the modified network");
  const LeDiagram& d = net.tableau.diagram;

  CurveModel cm;
  cm.n = d.n;
  cm.k = d.k;

  CurveComponent g0;
  g0.kind = ComponentKind::Gamma0;
  cm.components.push_back(g0);

  std::vector<int> comp_of(net.vertices.size(), -1);
  for (const NetVertex& v : net.vertices) {
    if (v.is_boundary() || v.kind == VertexKind::DarbouxWhite) continue;
    CurveComponent c;
    c.kind = v.is_white() ? ComponentKind::White : ComponentKind::Black;
    c.vertex = v.id;
    comp_of[static_cast<std::size_t>(v.id)] = static_cast<int>(cm.components.size());
    cm.components.push_back(c);
  }

  auto add_point = [&](int comp, int slot, int zc, int edge) {
    CurveMarkedPoint p;
    p.component = comp;
    p.slot = slot;
    p.zeta_class = zc;
    p.edge = edge;
    int id = static_cast<int>(cm.points.size());
    cm.points.push_back(p);
    cm.components[static_cast<std::size_t>(comp)].points.push_back(id);
    return id;
  };

  std::vector<int> kappa_point(static_cast<std::size_t>(d.n + 1), -1);
  for (int j = 1; j <= d.n; ++j)
    kappa_point[static_cast<std::size_t>(j)] = add_point(0, j, 0, -1);
  int p0 = add_point(0, 0, 0, -1);
  cm.unglued.push_back(p0);

  auto endpoint_point = [&](int vid, const NetEdge& e) {
    const NetVertex& v = net.vertex(vid);
    if (v.is_boundary()) {
      int pt = kappa_point[static_cast<std::size_t>(v.j)];
      cm.points[static_cast<std::size_t>(pt)].edge = e.id;
      return pt;
    }
    int comp = comp_of[static_cast<std::size_t>(vid)];
    int slot;
    if (v.is_white()) {
      slot = e.m;  // whites meet only the three edges they own
    } else {
      slot = e.m == 3 ? 1 : (e.m == 1 ? 2 : 3);
    }
    return add_point(comp, slot, zeta_class_for_slot(slot), e.id);
  };

  for (const NetEdge& e : net.edges) {
    bool darboux = net.vertex(e.tail).kind == VertexKind::DarbouxWhite;
    if (darboux) {
      int pt = endpoint_point(e.head, e);
      cm.unglued.push_back(pt);
      continue;
    }
    CurveDoublePoint dp;
    dp.edge = e.id;
    dp.point_a = endpoint_point(e.tail, e);
    dp.point_b = endpoint_point(e.head, e);
    cm.double_points.push_back(dp);
  }

  for (int j = 1; j <= d.n; ++j) {
    int pt = kappa_point[static_cast<std::size_t>(j)];
    if (cm.points[static_cast<std::size_t>(pt)].edge < 0) cm.unglued.push_back(pt);
  }
  std::sort(cm.unglued.begin(), cm.unglued.end());
  return cm;
}

CurveCounts curve_counts(const LeNetwork& net) {
  if (net.modified) throw Error("curve_counts: expects an unmodified network");
  int internal = 0;
  for (const NetVertex& v : net.vertices)
    if (!v.is_boundary()) ++internal;
  CurveCounts c;
  c.components = internal + 1;
  c.double_points = static_cast<int>(net.edges.size());
  c.genus = c.double_points - c.components + 1;
  return c;
}

OvalMap trace_ovals(const LeNetwork& net) {
  if (!net.modified) throw Error("trace_ovals: expects the modified network");
  const LeDiagram& d = net.tableau.diagram;
  if (d.n < 2) throw Error("trace_ovals: need at least two boundary vertices");

  int nE = static_cast<int>(net.edges.size());
  int nV = static_cast<int>(net.vertices.size());
  int binf = nV;
  // synthetic edges: nE + j-1 joins b_j b_{j+1}; then the two closing arcs
  int arc1 = nE + d.n - 1;
  int arcn = nE + d.n;
  int total_edges = nE + d.n + 1;

  std::vector<std::pair<int, int>> ends(static_cast<std::size_t>(total_edges));
  for (const NetEdge& e : net.edges)
    ends[static_cast<std::size_t>(e.id)] = {e.tail, e.head};
  for (int j = 1; j < d.n; ++j)
    ends[static_cast<std::size_t>(nE + j - 1)] = {net.boundary[static_cast<std::size_t>(j - 1)],
                                                  net.boundary[static_cast<std::size_t>(j)]};
  ends[static_cast<std::size_t>(arc1)] = {net.boundary[0], binf};
  ends[static_cast<std::size_t>(arcn)] = {net.boundary[static_cast<std::size_t>(d.n - 1)], binf};

  // anticlockwise rotations; the graph hangs above the boundary line with
  // b_1 at the right end
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(nV + 1));
  auto net_eid = [&](int r, int j, int m) { return net.find_edge(r, j, m); };
  for (const NetVertex& v : net.vertices) {
    auto& R = rot[static_cast<std::size_t>(v.id)];
    switch (v.kind) {
      case VertexKind::PivotWhite:
      case VertexKind::BoxWhite: {
        if (auto e = net_eid(v.r, v.j, 1)) R.push_back(*e);
        R.push_back(*net_eid(v.r, v.j, 2));
        if (auto e = net_eid(v.r, v.j, 3)) R.push_back(*e);
        break;
      }
      case VertexKind::BoxBlack: {
        R.push_back(*net_eid(v.r, v.j, 3));
        for (int ie : net.in_edges[static_cast<std::size_t>(v.id)])
          if (net.edge(ie).m == 1) R.push_back(ie);
        for (int ie : net.in_edges[static_cast<std::size_t>(v.id)])
          if (net.edge(ie).m == 2) R.push_back(ie);
        break;
      }
      case VertexKind::DarbouxWhite: {
        R.push_back(net.out_edges[static_cast<std::size_t>(v.id)][0]);
        break;
      }
      case VertexKind::BoundarySource:
      case VertexKind::BoundarySink: {
        int m = v.j;
        R.push_back(m == 1 ? arc1 : nE + m - 2);
        for (int ie : net.in_edges[static_cast<std::size_t>(v.id)]) R.push_back(ie);
        for (int ie : net.out_edges[static_cast<std::size_t>(v.id)]) R.push_back(ie);
        R.push_back(m == d.n ? arcn : nE + m - 1);
        break;
      }
    }
  }
  rot[static_cast<std::size_t>(binf)] = {arc1, arcn};

  // dart 2e+dir travels ends[e].first -> .second when dir = 0
  auto dart_to = [&](int dart) {
    const auto& e = ends[static_cast<std::size_t>(dart / 2)];
    return dart % 2 ? e.first : e.second;
  };
  auto dart_from_vertex = [&](int v, int e) {
    return 2 * e + (ends[static_cast<std::size_t>(e)].first == v ? 0 : 1);
  };
  auto next_dart = [&](int dart) {
    int v = dart_to(dart);
    const auto& R = rot[static_cast<std::size_t>(v)];
    int e = dart / 2;
    std::size_t idx = 0;
    while (R[idx] != e) ++idx;
    int prev = R[(idx + R.size() - 1) % R.size()];
    return dart_from_vertex(v, prev);
  };

  std::vector<int> face_of(static_cast<std::size_t>(2 * total_edges), -1);
  int n_faces = 0;
  for (int dstart = 0; dstart < 2 * total_edges; ++dstart) {
    if (face_of[static_cast<std::size_t>(dstart)] != -1) continue;
    int f = n_faces++;
    int dd = dstart;
    do {
      face_of[static_cast<std::size_t>(dd)] = f;
      dd = next_dart(dd);
    } while (dd != dstart);
  }

  std::vector<bool> has_real(static_cast<std::size_t>(n_faces), false);
  for (int e = 0; e < nE; ++e) {
    has_real[static_cast<std::size_t>(face_of[static_cast<std::size_t>(2 * e)])] = true;
    has_real[static_cast<std::size_t>(face_of[static_cast<std::size_t>(2 * e + 1)])] = true;
  }

  OvalMap om;
  om.n = d.n;
  om.k = d.k;
  om.outer_face = -1;
  for (int f = 0; f < n_faces; ++f)
    if (!has_real[static_cast<std::size_t>(f)]) {
      if (om.outer_face != -1)
        throw PropertyError("trace_ovals: outside face is not unique");
      om.outer_face = f;
    }
  if (om.outer_face == -1) throw PropertyError("trace_ovals: no outside face");

  om.omega0_face = face_of[static_cast<std::size_t>(dart_from_vertex(net.boundary[0], arc1))];
  if (om.omega0_face == om.outer_face)
    throw PropertyError("trace_ovals: boundary arc misses the outermost oval");

  om.face_to_oval.assign(static_cast<std::size_t>(n_faces), -1);
  om.face_to_oval[static_cast<std::size_t>(om.omega0_face)] = 0;
  int next_oval = 1;
  for (int f = 0; f < n_faces; ++f) {
    if (f == om.outer_face || f == om.omega0_face) continue;
    om.face_to_oval[static_cast<std::size_t>(f)] = next_oval++;
  }
  om.n_ovals = next_oval;

  for (const NetVertex& v : net.vertices) {
    if (v.kind != VertexKind::PivotWhite && v.kind != VertexKind::BoxWhite) continue;
    for (int which = 1; which <= 3; ++which) {
      auto e = net_eid(v.r, v.j, which);
      if (!e) continue;
      om.corner_face[{v.id, which}] =
          face_of[static_cast<std::size_t>(dart_from_vertex(v.id, *e))];
    }
  }
  om.segment_face.assign(static_cast<std::size_t>(d.n - 1), -1);
  for (int j = 1; j < d.n; ++j)
    om.segment_face[static_cast<std::size_t>(j - 1)] = face_of[static_cast<std::size_t>(
        dart_from_vertex(net.boundary[static_cast<std::size_t>(j)], nE + j - 1))];
  om.darboux_face.assign(static_cast<std::size_t>(d.k), -1);
  for (int r = 1; r <= d.k; ++r) {
    auto pw = net.find_vertex(VertexKind::PivotWhite, r, 0);
    auto e = net_eid(r, 0, 3);
    om.darboux_face[static_cast<std::size_t>(r - 1)] =
        face_of[static_cast<std::size_t>(dart_from_vertex(*pw, *e))];
  }
  return om;
}

}  // namespace positroid
