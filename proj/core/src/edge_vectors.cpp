#include "positroid/edge_vectors.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace positroid {

namespace {

// product of box weights of row r over filled columns in ]lo, hi]
Rational horizontal_weight(const LeTableau& t, int r, int lo, int hi) {
  Rational w(1);
  for (int c : t.diagram.filled_cols(r))
    if (c > lo && c <= hi) w *= t.weight(r, c);
  return w;
}

int sigma_between(const std::vector<int>& pivots, int a, int b) {
  int lo = std::min(a, b), hi = std::max(a, b), c = 0;
  for (int p : pivots)
    if (p > lo && p < hi) ++c;
  return c;
}

}  // namespace

RatMatrix transition_matrix(const LeTableau& t, int r) {
  const LeDiagram& d = t.diagram;
  auto piv = d.pivots();
  int ir = piv[static_cast<std::size_t>(r - 1)];
  std::vector<bool> is_pivot(static_cast<std::size_t>(d.n + 1), false);
  for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;

  RatMatrix C(static_cast<std::size_t>(d.n), static_cast<std::size_t>(d.n));
  for (int l = 1; l <= d.n; ++l) {
    auto row = [&](int col) -> Rational& {
      return C.at(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(col - 1));
    };
    if (l < ir) {
      row(l) = 1;
      continue;
    }
    if (l == ir) {
      row(l) = -1;
      for (int j : d.filled_cols(r)) row(j) = -horizontal_weight(t, r, ir, j);
      continue;
    }
    if (is_pivot[static_cast<std::size_t>(l)]) {
      row(l) = -1;
      continue;
    }
    if (!d.filled(r, l)) {
      row(l) = -1;
      continue;
    }
    for (int j : d.filled_cols(r))
      if (j >= l) row(j) = -horizontal_weight(t, r, l, j);
  }
  return C;
}

std::vector<Rational> coefficient_vector(const LeTableau& t, int r) {
  const LeDiagram& d = t.diagram;
  int ir = d.pivots()[static_cast<std::size_t>(r - 1)];
  std::vector<Rational> c(static_cast<std::size_t>(d.n));
  c[static_cast<std::size_t>(ir - 1)] = 1;
  Rational run(1);
  for (int j : d.filled_cols(r)) {
    run *= t.weight(r, j);
    c[static_cast<std::size_t>(j - 1)] = run;
  }
  return c;
}

BasisChain basis_chain(const LeTableau& t) {
  const LeDiagram& d = t.diagram;
  BasisChain chain;
  chain.k = d.k;
  chain.n = d.n;
  chain.E.assign(static_cast<std::size_t>(d.k), RatMatrix());
  chain.c.assign(static_cast<std::size_t>(d.k), {});
  chain.E[static_cast<std::size_t>(d.k - 1)] =
      RatMatrix::identity(static_cast<std::size_t>(d.n));
  for (int r = d.k; r >= 2; --r)
    chain.E[static_cast<std::size_t>(r - 2)] =
        transition_matrix(t, r) * chain.E[static_cast<std::size_t>(r - 1)];
  for (int r = 1; r <= d.k; ++r)
    chain.c[static_cast<std::size_t>(r - 1)] = coefficient_vector(t, r);
  return chain;
}

std::vector<Rational> row_from_chain(const BasisChain& chain, int r) {
  const RatMatrix& E = chain.basis(r);
  const auto& c = chain.coeff(r);
  std::vector<Rational> out(static_cast<std::size_t>(chain.n));
  for (int l = 1; l <= chain.n; ++l) {
    const Rational& cl = c[static_cast<std::size_t>(l - 1)];
    if (cl.is_zero()) continue;
    for (int j = 1; j <= chain.n; ++j)
      out[static_cast<std::size_t>(j - 1)] +=
          cl * E.at(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(j - 1));
  }
  return out;
}

EdgeVectorSystem edge_vectors(const LeNetwork& net, const BasisChain& chain) {
  if (!net.modified) throw Error("edge_vectors: expects the modified network");
  const LeDiagram& d = net.tableau.diagram;
  auto piv = d.pivots();

  EdgeVectorSystem sys;
  sys.n = d.n;
  sys.vectors.assign(net.edges.size(),
                     std::vector<Rational>(static_cast<std::size_t>(d.n)));

  auto unit = [&](int j) {
    std::vector<Rational> e(static_cast<std::size_t>(d.n));
    e[static_cast<std::size_t>(j - 1)] = 1;
    return e;
  };
  auto eid = [&](int r, int j, int m) {
    auto id = net.find_edge(r, j, m);
    if (!id) throw PropertyError("edge_vectors: missing edge");
    return *id;
  };
  auto scaled = [&](const Rational& a, const std::vector<Rational>& v) {
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) out[i] = a * v[i];
    return out;
  };

  for (int r = 1; r <= d.k; ++r) {
    int ir = piv[static_cast<std::size_t>(r - 1)];
    auto cols = d.filled_cols(r);
    const RatMatrix& E = chain.basis(r);

    sys.vectors[static_cast<std::size_t>(eid(r, 0, 2))] = unit(ir);
    for (int j : cols)
      sys.vectors[static_cast<std::size_t>(eid(r, j, 2))] =
          E.row(static_cast<std::size_t>(j - 1));

    // unit and horizontal edges right to left along the chain
    for (std::size_t s = cols.size(); s-- > 0;) {
      int j = cols[s];
      if (s + 1 == cols.size()) {
        sys.vectors[static_cast<std::size_t>(eid(r, j, 3))] =
            sys.vectors[static_cast<std::size_t>(eid(r, j, 2))];
      } else {
        int jn = cols[s + 1];
        auto e1 = scaled(net.tableau.weight(r, jn),
                         sys.vectors[static_cast<std::size_t>(eid(r, jn, 3))]);
        sys.vectors[static_cast<std::size_t>(eid(r, j, 1))] = e1;
        auto e3 = e1;
        const auto& e2 = sys.vectors[static_cast<std::size_t>(eid(r, j, 2))];
        for (std::size_t i = 0; i < e3.size(); ++i) e3[i] += e2[i];
        sys.vectors[static_cast<std::size_t>(eid(r, j, 3))] = e3;
      }
    }
    auto darboux = unit(ir);
    if (!cols.empty()) {
      auto e1 = scaled(net.tableau.weight(r, cols[0]),
                       sys.vectors[static_cast<std::size_t>(eid(r, cols[0], 3))]);
      sys.vectors[static_cast<std::size_t>(eid(r, 0, 1))] = e1;
      for (std::size_t i = 0; i < darboux.size(); ++i) darboux[i] += e1[i];
    }
    sys.vectors[static_cast<std::size_t>(eid(r, 0, 3))] = darboux;
  }
  return sys;
}

std::vector<Rational> path_sum_vector(const LeNetwork& net, int edge_id) {
  if (!net.modified) throw Error("path_sum_vector: expects the modified network");
  const LeDiagram& d = net.tableau.diagram;
  auto piv = d.pivots();

  // unsigned flow-to-sink sums over all edges, reverse topological order
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
      for (int oe : net.out_edges[static_cast<std::size_t>(v)]) {
        int h = net.edge(oe).head;
        if (--indeg[static_cast<std::size_t>(h)] == 0) q.push_back(h);
      }
    }
    if (order.size() != net.vertices.size())
      throw PropertyError("path_sum_vector: directed cycle detected");
  }

  std::vector<std::vector<Rational>> u(net.edges.size(),
                                       std::vector<Rational>(static_cast<std::size_t>(d.n)));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int ie : net.in_edges[static_cast<std::size_t>(*it)]) {
      const NetEdge& e = net.edge(ie);
      const NetVertex& h = net.vertex(e.head);
      auto& ue = u[static_cast<std::size_t>(ie)];
      if (h.is_boundary()) {
        ue[static_cast<std::size_t>(h.j - 1)] = e.weight;
        continue;
      }
      for (int oe : net.out_edges[static_cast<std::size_t>(e.head)]) {
        const auto& uo = u[static_cast<std::size_t>(oe)];
        for (std::size_t i = 0; i < ue.size(); ++i)
          if (!uo[i].is_zero()) ue[i] += e.weight * uo[i];
      }
    }
  }

  const NetEdge& e0 = net.edge(edge_id);
  int ir = piv[static_cast<std::size_t>(e0.r - 1)];
  auto out = u[static_cast<std::size_t>(edge_id)];
  for (int j = 1; j <= d.n; ++j)
    if (sigma_between(piv, ir, j) % 2) {
      auto& x = out[static_cast<std::size_t>(j - 1)];
      x = -x;
    }
  return out;
}

}  // namespace positroid
