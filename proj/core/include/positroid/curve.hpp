#pragma once

#include <map>
#include <utility>
#include <vector>

#include "positroid/network.hpp"

namespace positroid {

// Rational nodal curve attached to the modified network: one projective line
// per internal vertex plus one line carrying the boundary points, glued at one
// double point per network edge (the dangling unit edges stay unglued).

enum class ComponentKind { Gamma0, White, Black };

struct CurveMarkedPoint {
  int component = 0;
  int slot = 0;        // vertex components: 1/2/3; Gamma0: 1..n for the j-th
                       // boundary point, 0 for the point at infinity
  int zeta_class = 0;  // vertex components: 0 -> 0, 1 -> 1, 2 -> infinity;
                       // Gamma0: ignored (coordinate is the j-th phase)
  int edge = -1;       // owning network edge, -1 when unglued
};

struct CurveComponent {
  ComponentKind kind = ComponentKind::Gamma0;
  int vertex = -1;  // network vertex id, -1 for Gamma0
  std::vector<int> points;  // indices into CurveModel::points
};

struct CurveDoublePoint {
  int edge = -1;
  int point_a = -1;
  int point_b = -1;
};

struct CurveModel {
  int n = 0;
  int k = 0;
  std::vector<CurveComponent> components;  // component 0 is Gamma0
  std::vector<CurveMarkedPoint> points;
  std::vector<CurveDoublePoint> double_points;
  std::vector<int> unglued;  // point indices (Darboux points, bare phases)

  int n_components() const { return static_cast<int>(components.size()); }
  int n_double_points() const { return static_cast<int>(double_points.size()); }
  int genus() const { return n_double_points() - n_components() + 1; }
};

CurveModel build_curve(const LeNetwork& modified);

// Component / double point / genus census for a plain (unmodified) network,
// typically after reduce_network.
struct CurveCounts {
  int components = 0;
  int double_points = 0;
  int genus = 0;
};

CurveCounts curve_counts(const LeNetwork& unmodified);

// Faces of the disk embedding of the modified network, with the boundary
// closed off by segments between consecutive boundary vertices and an arc
// around the top. Oval 0 is the one touching that outer arc from inside.
struct OvalMap {
  int n = 0;
  int k = 0;
  int n_ovals = 0;                 // faces minus the outside face
  std::vector<int> face_to_oval;   // -1 for the outside face
  int outer_face = -1;
  int omega0_face = -1;

  // corner `which` of a white vertex: 1 between the horizontal-out and
  // vertical edges (real arc 0..1), 2 between vertical and unit-in (1..inf),
  // 3 between unit-in and horizontal-out (inf..0)
  std::map<std::pair<int, int>, int> corner_face;
  std::vector<int> segment_face;   // index j-1: face above segment b_j b_{j+1}
  std::vector<int> darboux_face;   // index r-1: face holding the dangling edge

  int corner_oval(int vertex_id, int which) const {
    return face_to_oval[static_cast<std::size_t>(
        corner_face.at({vertex_id, which}))];
  }
  int segment_oval(int j) const {
    return face_to_oval[static_cast<std::size_t>(
        segment_face[static_cast<std::size_t>(j - 1)])];
  }
  int darboux_oval(int r) const {
    return face_to_oval[static_cast<std::size_t>(
        darboux_face[static_cast<std::size_t>(r - 1)])];
  }
};

OvalMap trace_ovals(const LeNetwork& modified);

}  // namespace positroid
