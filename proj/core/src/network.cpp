#include "positroid/network.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace positroid {

namespace {

void rebuild_adjacency(LeNetwork& net) {
  net.out_edges.assign(net.vertices.size(), {});
  net.in_edges.assign(net.vertices.size(), {});
  for (const NetEdge& e : net.edges) {
    net.out_edges[static_cast<std::size_t>(e.tail)].push_back(e.id);
    net.in_edges[static_cast<std::size_t>(e.head)].push_back(e.id);
  }
}

int sigma_between(const std::vector<int>& pivots, int a, int b) {
  // number of pivots in the open interval ]min(a,b), max(a,b)[
  int lo = std::min(a, b), hi = std::max(a, b), c = 0;
  for (int p : pivots)
    if (p > lo && p < hi) ++c;
  return c;
}

}  // namespace

std::optional<int> LeNetwork::find_vertex(VertexKind kind, int r, int j) const {
  for (const NetVertex& v : vertices)
    if (v.kind == kind && v.r == r && v.j == j) return v.id;
  return std::nullopt;
}

std::optional<int> LeNetwork::find_edge(int r, int j, int m) const {
  for (const NetEdge& e : edges)
    if (e.r == r && e.j == j && e.m == m) return e.id;
  return std::nullopt;
}

std::vector<int> LeNetwork::topological_internal() const {
  std::vector<int> indeg(vertices.size(), 0);
  for (const NetEdge& e : edges) ++indeg[static_cast<std::size_t>(e.head)];
  std::deque<int> q;
  for (const NetVertex& v : vertices)
    if (indeg[static_cast<std::size_t>(v.id)] == 0) q.push_back(v.id);
  std::vector<int> order;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    order.push_back(v);
    for (int eid : out_edges[static_cast<std::size_t>(v)]) {
      int h = edges[static_cast<std::size_t>(eid)].head;
      if (--indeg[static_cast<std::size_t>(h)] == 0) q.push_back(h);
    }
  }
  if (order.size() != vertices.size())
    throw PropertyError("LeNetwork: directed cycle detected");
  std::vector<int> internal;
  for (int id : order)
    if (!vertices[static_cast<std::size_t>(id)].is_boundary()) internal.push_back(id);
  return internal;
}

void LeNetwork::check_structure() const {
  for (const NetVertex& v : vertices) {
    std::size_t deg = out_edges[static_cast<std::size_t>(v.id)].size() +
                      in_edges[static_cast<std::size_t>(v.id)].size();
    if (v.is_boundary() && deg > 1)
      throw PropertyError("LeNetwork: boundary vertex with degree > 1");
    if (!v.is_boundary() && deg > 3)
      throw PropertyError("LeNetwork: internal vertex with degree > 3");
    if (!reduced && (v.kind == VertexKind::PivotWhite || v.kind == VertexKind::BoxWhite)) {
      int vertical = 0;
      for (int eid : out_edges[static_cast<std::size_t>(v.id)])
        vertical += edges[static_cast<std::size_t>(eid)].m == 2;
      for (int eid : in_edges[static_cast<std::size_t>(v.id)])
        vertical += edges[static_cast<std::size_t>(eid)].m == 2;
      if (vertical != 1)
        throw PropertyError("LeNetwork: white vertex without unique vertical edge");
    }
  }
  for (const NetEdge& e : edges) {
    const NetVertex& a = vertex(e.tail);
    const NetVertex& b = vertex(e.head);
    // contraction merges color classes, so only unreduced networks alternate
    if (!reduced) {
      bool dangle = a.kind == VertexKind::DarbouxWhite || b.kind == VertexKind::DarbouxWhite;
      bool ok = (a.is_white() && b.is_black()) || (a.is_black() && b.is_white()) ||
                (a.is_boundary() && b.is_white()) || (a.is_white() && b.is_boundary()) ||
                (dangle && a.is_white() && b.is_white());
      if (!ok) throw PropertyError("LeNetwork: edge violates bipartite structure");
    }
    if (!(e.weight > Rational(0)))
      throw PropertyError("LeNetwork: non-positive edge weight");
  }
  (void)topological_internal();  // throws on cycles
}

LeNetwork build_network(const LeTableau& t) {
  t.validate();
  const LeDiagram& d = t.diagram;
  auto piv = d.pivots();

  LeNetwork net;
  net.tableau = t;

  auto add_vertex = [&](VertexKind kind, int r, int j) {
    NetVertex v;
    v.id = static_cast<int>(net.vertices.size());
    v.kind = kind;
    v.r = r;
    v.j = j;
    net.vertices.push_back(v);
    return v.id;
  };

  std::vector<bool> is_pivot(static_cast<std::size_t>(d.n + 1), false);
  for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  for (int j = 1; j <= d.n; ++j) {
    int id = add_vertex(is_pivot[static_cast<std::size_t>(j)]
                            ? VertexKind::BoundarySource
                            : VertexKind::BoundarySink,
                        0, j);
    net.boundary.push_back(id);
  }

  // Row-major internal numbering: per row the pivot white, then the boxes
  // right to left (ascending column label), black before its white.
  for (int r = 1; r <= d.k; ++r) {
    add_vertex(VertexKind::PivotWhite, r, 0);
    for (int j : d.filled_cols(r)) {
      add_vertex(VertexKind::BoxBlack, r, j);
      add_vertex(VertexKind::BoxWhite, r, j);
    }
  }

  auto vid = [&](VertexKind kind, int r, int j) {
    auto v = net.find_vertex(kind, r, j);
    if (!v) throw PropertyError("build_network: missing vertex");
    return *v;
  };

  auto add_edge = [&](int tail, int head, const Rational& w, int r, int j, int m) {
    NetEdge e;
    e.id = static_cast<int>(net.edges.size());
    e.tail = tail;
    e.head = head;
    e.weight = w;
    e.r = r;
    e.j = j;
    e.m = m;
    net.edges.push_back(e);
  };

  for (int r = 1; r <= d.k; ++r) {
    int br = net.boundary[static_cast<std::size_t>(piv[static_cast<std::size_t>(r - 1)] - 1)];
    add_edge(br, vid(VertexKind::PivotWhite, r, 0), Rational(1), r, 0, 2);
    auto cols = d.filled_cols(r);
    if (cols.empty()) continue;
    add_edge(vid(VertexKind::PivotWhite, r, 0), vid(VertexKind::BoxBlack, r, cols[0]),
             t.weight(r, cols[0]), r, 0, 1);
    for (std::size_t s = 0; s < cols.size(); ++s) {
      int j = cols[s];
      add_edge(vid(VertexKind::BoxBlack, r, j), vid(VertexKind::BoxWhite, r, j),
               Rational(1), r, j, 3);
      if (s + 1 < cols.size())
        add_edge(vid(VertexKind::BoxWhite, r, j), vid(VertexKind::BoxBlack, r, cols[s + 1]),
                 t.weight(r, cols[s + 1]), r, j, 1);
      // vertical: to the next filled box below in this column, else the sink
      int below = 0;
      for (int r2 = r + 1; r2 <= d.k && !below; ++r2)
        if (d.filled(r2, j)) below = r2;
      if (below)
        add_edge(vid(VertexKind::BoxWhite, r, j), vid(VertexKind::BoxBlack, below, j),
                 Rational(1), r, j, 2);
      else
        add_edge(vid(VertexKind::BoxWhite, r, j), net.boundary[static_cast<std::size_t>(j - 1)],
                 Rational(1), r, j, 2);
    }
  }

  rebuild_adjacency(net);
  net.check_structure();
  return net;
}

LeNetwork modify_network(const LeNetwork& net) {
  if (net.modified) return net;
  LeNetwork m = net;
  m.modified = true;
  for (NetEdge& e : m.edges)
    if (e.m == 2 && e.j == 0) std::swap(e.tail, e.head);  // source edges flip
  for (int r = 1; r <= m.k(); ++r) {
    auto pw = m.find_vertex(VertexKind::PivotWhite, r, 0);
    NetVertex v;
    v.id = static_cast<int>(m.vertices.size());
    v.kind = VertexKind::DarbouxWhite;
    v.r = r;
    v.j = 0;
    m.vertices.push_back(v);
    NetEdge e;
    e.id = static_cast<int>(m.edges.size());
    e.tail = v.id;
    e.head = *pw;
    e.weight = Rational(1);
    e.r = r;
    e.j = 0;
    e.m = 3;
    m.edges.push_back(e);
  }
  rebuild_adjacency(m);
  return m;
}

LeNetwork reduce_network(const LeNetwork& net) {
  LeNetwork cur = net;
  std::set<std::pair<VertexKind, std::pair<int, int>>> kept;
  bool changed = true;
  while (changed) {
    changed = false;
    rebuild_adjacency(cur);
    for (const NetVertex& v : cur.vertices) {
      if (v.is_boundary()) continue;
      if (kept.count({v.kind, {v.r, v.j}})) continue;
      if (cur.in_edges[static_cast<std::size_t>(v.id)].size() != 1 ||
          cur.out_edges[static_cast<std::size_t>(v.id)].size() != 1)
        continue;
      const NetEdge ein = cur.edge(cur.in_edges[static_cast<std::size_t>(v.id)][0]);
      const NetEdge eout = cur.edge(cur.out_edges[static_cast<std::size_t>(v.id)][0]);
      if (cur.vertex(ein.tail).is_boundary() && cur.vertex(eout.head).is_boundary()) {
        kept.insert({v.kind, {v.r, v.j}});  // isolated chain keeps one vertex
        continue;
      }
      // splice: ein.tail -> eout.head with product weight, dropping v
      LeNetwork next;
      next.tableau = cur.tableau;
      next.modified = cur.modified;
      std::vector<int> remap(cur.vertices.size(), -1);
      for (const NetVertex& w : cur.vertices) {
        if (w.id == v.id) continue;
        NetVertex nv = w;
        nv.id = static_cast<int>(next.vertices.size());
        remap[static_cast<std::size_t>(w.id)] = nv.id;
        next.vertices.push_back(nv);
      }
      for (int b : cur.boundary) next.boundary.push_back(remap[static_cast<std::size_t>(b)]);
      for (const NetEdge& e : cur.edges) {
        if (e.id == ein.id || e.id == eout.id) continue;
        NetEdge ne = e;
        ne.id = static_cast<int>(next.edges.size());
        ne.tail = remap[static_cast<std::size_t>(e.tail)];
        ne.head = remap[static_cast<std::size_t>(e.head)];
        next.edges.push_back(ne);
      }
      NetEdge spliced = eout;
      spliced.id = static_cast<int>(next.edges.size());
      spliced.tail = remap[static_cast<std::size_t>(ein.tail)];
      spliced.head = remap[static_cast<std::size_t>(eout.head)];
      spliced.weight = ein.weight * eout.weight;
      next.edges.push_back(spliced);
      cur = next;
      changed = true;
      break;
    }
  }
  rebuild_adjacency(cur);
  cur.reduced = true;
  return cur;
}

RatMatrix boundary_measurement(const LeNetwork& net) {
  if (net.modified)
    throw Error("boundary_measurement: expects the unmodified orientation");
  const LeDiagram& d = net.tableau.diagram;
  auto piv = d.pivots();

  // unsigned sink-reachability sums, vertices processed against topology
  std::vector<int> order;
  {
    std::vector<int> indeg(net.vertices.size(), 0);
    for (const NetEdge& e : net.edges) ++indeg[static_cast<std::size_t>(e.head)];
    std::deque<int> q;
    for (const NetVertex& v : net.vertices)
      if (indeg[static_cast<std::size_t>(v.id)] == 0) q.push_back(v.id);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      order.push_back(v);
      for (int eid : net.out_edges[static_cast<std::size_t>(v)]) {
        int h = net.edge(eid).head;
        if (--indeg[static_cast<std::size_t>(h)] == 0) q.push_back(h);
      }
    }
  }
  std::vector<std::vector<Rational>> f(net.vertices.size(),
                                       std::vector<Rational>(static_cast<std::size_t>(d.n + 1)));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    const NetVertex& vv = net.vertex(v);
    if (vv.kind == VertexKind::BoundarySink) {
      f[static_cast<std::size_t>(v)][static_cast<std::size_t>(vv.j)] = 1;
      continue;
    }
    for (int eid : net.out_edges[static_cast<std::size_t>(v)]) {
      const NetEdge& e = net.edge(eid);
      const auto& fh = f[static_cast<std::size_t>(e.head)];
      auto& fv = f[static_cast<std::size_t>(v)];
      for (int j = 1; j <= d.n; ++j)
        if (!fh[static_cast<std::size_t>(j)].is_zero())
          fv[static_cast<std::size_t>(j)] += e.weight * fh[static_cast<std::size_t>(j)];
    }
  }

  RatMatrix A(static_cast<std::size_t>(d.k), static_cast<std::size_t>(d.n));
  for (int r = 1; r <= d.k; ++r) {
    int ir = piv[static_cast<std::size_t>(r - 1)];
    // read off at the source vertex: survives reduction, unit edge otherwise
    const auto& u = f[static_cast<std::size_t>(net.boundary[static_cast<std::size_t>(ir - 1)])];
    A.at(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(ir - 1)) = 1;
    for (int j = 1; j <= d.n; ++j) {
      if (u[static_cast<std::size_t>(j)].is_zero()) continue;
      if (j <= ir)
        throw PropertyError("boundary_measurement: path reached a column left of its pivot");
      Rational val = u[static_cast<std::size_t>(j)];
      if (sigma_between(piv, ir, j) % 2) val = -val;
      A.at(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(j - 1)) = val;
    }
  }
  return A;
}

Rational minor_by_paths(const LeNetwork& net, const std::vector<int>& J) {
  const LeDiagram& d = net.tableau.diagram;
  auto piv = d.pivots();
  if (static_cast<int>(J.size()) != d.k)
    throw Error("minor_by_paths: column set size must be k");

  std::set<int> Jset(J.begin(), J.end()), Iset(piv.begin(), piv.end());
  std::vector<int> K, L;  // sources I\J, sinks J\I, both ascending
  for (int p : piv)
    if (!Jset.count(p)) K.push_back(p);
  for (int j : J)
    if (!Iset.count(j)) L.push_back(j);
  std::sort(L.begin(), L.end());
  if (K.empty()) return Rational(1);

  struct Path {
    std::uint64_t verts;
    Rational w;
    int sink;
  };
  if (net.vertices.size() > 64)
    throw Error("minor_by_paths: oracle limited to 64 vertices");

  auto paths_from = [&](int src) {
    std::vector<Path> acc;
    std::function<void(int, std::uint64_t, Rational)> dfs = [&](int v, std::uint64_t seen,
                                                                Rational w) {
      const NetVertex& vv = net.vertex(v);
      if (vv.kind == VertexKind::BoundarySink) {
        acc.push_back({seen, w, vv.j});
        return;
      }
      for (int eid : net.out_edges[static_cast<std::size_t>(v)]) {
        const NetEdge& e = net.edge(eid);
        dfs(e.head, seen | (std::uint64_t(1) << e.head), w * e.weight);
      }
    };
    dfs(src, std::uint64_t(1) << src, Rational(1));
    return acc;
  };

  std::vector<std::vector<Path>> all;
  for (int i : K) all.push_back(paths_from(net.boundary[static_cast<std::size_t>(i - 1)]));

  // Every vertex-disjoint family enters with weight +1: planarity kills the
  // crossing sink assignments and the measurement signs absorb the rest.
  std::vector<int> perm(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) perm[i] = static_cast<int>(i);
  Rational total = 0;
  do {
    std::function<Rational(std::size_t, std::uint64_t)> pick =
        [&](std::size_t idx, std::uint64_t used) -> Rational {
      if (idx == K.size()) return Rational(1);
      Rational sum = 0;
      for (const Path& p : all[idx]) {
        if (p.sink != L[static_cast<std::size_t>(perm[idx])]) continue;
        if (p.verts & used) continue;
        Rational rest = pick(idx + 1, used | p.verts);
        if (!rest.is_zero()) sum += p.w * rest;
      }
      return sum;
    };
    total += pick(0, 0);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

void GrassmannPoint::check_tnn() const {
  std::size_t k = matrix.rows(), n = matrix.cols();
  std::vector<std::size_t> piv(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    piv[i] = static_cast<std::size_t>(pivots[i] - 1);
  if (matrix.maximal_minor(piv) != Rational(1))
    throw PropertyError("GrassmannPoint: pivot minor is not 1");
  std::vector<std::size_t> comb(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      if (matrix.maximal_minor(comb) < Rational(0))
        throw PropertyError("GrassmannPoint: negative maximal minor");
      return;
    }
    for (std::size_t c = start; c + (k - pos) <= n; ++c) {
      comb[pos] = c;
      rec(pos + 1, c + 1);
    }
  };
  rec(0, 0);
}

std::vector<std::vector<int>> GrassmannPoint::matroid() const {
  std::size_t k = matrix.rows(), n = matrix.cols();
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> comb(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      if (matrix.maximal_minor(comb) > Rational(0)) {
        std::vector<int> base(k);
        for (std::size_t i = 0; i < k; ++i) base[i] = static_cast<int>(comb[i] + 1);
        out.push_back(base);
      }
      return;
    }
    for (std::size_t c = start; c + (k - pos) <= n; ++c) {
      comb[pos] = c;
      rec(pos + 1, c + 1);
    }
  };
  rec(0, 0);
  return out;
}

GrassmannPoint grassmann_point(const LeNetwork& net) {
  GrassmannPoint g;
  g.matrix = boundary_measurement(net);
  g.pivots = net.tableau.diagram.pivots();
  return g;
}

}  // namespace positroid
