#pragma once

#include <optional>
#include <string>
#include <vector>

#include "positroid/le.hpp"
#include "positroid/matrix.hpp"

namespace positroid {

enum class VertexKind {
  BoundarySource,  // b_{i_r}
  BoundarySink,    // b_j, j non-pivot
  PivotWhite,      // V_{i_r}, right end of row r
  BoxWhite,        // V_{i_r j}
  BoxBlack,        // V'_{i_r j}
  DarbouxWhite,    // V^D_{i_r}, only in the modified network
};

struct NetVertex {
  int id = -1;
  VertexKind kind{};
  int r = 0;  // pivot row 1..k for internal vertices, 0 for boundary
  int j = 0;  // box column label; for boundary vertices the boundary index
  bool is_boundary() const {
    return kind == VertexKind::BoundarySource || kind == VertexKind::BoundarySink;
  }
  bool is_white() const {
    return kind == VertexKind::PivotWhite || kind == VertexKind::BoxWhite ||
           kind == VertexKind::DarbouxWhite;
  }
  bool is_black() const { return kind == VertexKind::BoxBlack; }
};

// Every edge belongs to exactly one white vertex and carries that vertex's
// local label m: 1 = leftward-out, 2 = vertical, 3 = unit-in (box whites) or
// the extra edge at a pivot white in the modified network.
struct NetEdge {
  int id = -1;
  int tail = -1;
  int head = -1;
  Rational weight;
  int r = 0;  // row of the owning white vertex
  int j = 0;  // box column of the owning white vertex, 0 for pivot whites
  int m = 0;

  std::string label() const {
    return "e[" + std::to_string(r) + "," + std::to_string(j) + "," +
           std::to_string(m) + "]";
  }
};

// Planar bipartite trivalent network in the disk built from a Le-tableau.
// Orientation: Le-network (sources upward, rows leftward, columns downward);
// the modified variant reverses the source edges and adds a Darboux edge with
// a univalent white vertex at each pivot white.
struct LeNetwork {
  LeTableau tableau;
  bool modified = false;
  bool reduced = false;
  std::vector<NetVertex> vertices;
  std::vector<NetEdge> edges;
  std::vector<int> boundary;                 // vertex ids of b_1..b_n
  std::vector<std::vector<int>> out_edges;   // by vertex id
  std::vector<std::vector<int>> in_edges;

  int n() const { return tableau.diagram.n; }
  int k() const { return tableau.diagram.k; }

  const NetVertex& vertex(int id) const { return vertices[static_cast<std::size_t>(id)]; }
  const NetEdge& edge(int id) const { return edges[static_cast<std::size_t>(id)]; }

  std::optional<int> find_vertex(VertexKind kind, int r, int j = 0) const;
  std::optional<int> find_edge(int r, int j, int m) const;

  // Internal vertices in a topological order of the directed graph.
  std::vector<int> topological_internal() const;

  void check_structure() const;  // degree, bipartite, acyclicity invariants
};

// Canonical Le-network of a tableau (deterministic vertex numbering:
// boundary first, then rows top to bottom, boxes right to left).
LeNetwork build_network(const LeTableau& t);

// Modified network: source edges reversed, Darboux edge + univalent white
// added at every pivot white. Adds k vertices and k edges.
LeNetwork modify_network(const LeNetwork& net);

// Contract bivalent internal vertices (weights multiply). On a component
// whose contraction would join a boundary source directly to a boundary
// sink, one bivalent vertex is kept.
LeNetwork reduce_network(const LeNetwork& net);

// Signed boundary measurement matrix in reduced row echelon form.
RatMatrix boundary_measurement(const LeNetwork& net);

// Sum over vertex-disjoint path families from the sources I \ J to the
// sinks J \ I (Lindstrom). Exponential enumeration; oracle-scale inputs.
Rational minor_by_paths(const LeNetwork& net, const std::vector<int>& J);

// RREF representative of a point of the totally non-negative Grassmannian.
struct GrassmannPoint {
  RatMatrix matrix;          // k x n, RREF
  std::vector<int> pivots;   // 1-based column indices

  // Checks Delta_I == 1 and all maximal minors >= 0 (exponential scan).
  void check_tnn() const;
  // k-subsets (1-based, ascending) with positive maximal minor.
  std::vector<std::vector<int>> matroid() const;
};

GrassmannPoint grassmann_point(const LeNetwork& net);

}  // namespace positroid
