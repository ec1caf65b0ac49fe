#pragma once

#include <vector>

#include "positroid/le.hpp"
#include "positroid/matrix.hpp"
#include "positroid/network.hpp"

namespace positroid {

// Row bases produced by the pivot-by-pivot elimination recursion.
// basis(k) is the identity; basis(r-1) = transition_matrix(r) * basis(r).
struct BasisChain {
  int k = 0;
  int n = 0;
  std::vector<RatMatrix> E;                // E[r-1] holds basis(r), r = 1..k
  std::vector<std::vector<Rational>> c;    // c[r-1] holds coeff(r)

  const RatMatrix& basis(int r) const { return E[static_cast<std::size_t>(r - 1)]; }
  const std::vector<Rational>& coeff(int r) const {
    return c[static_cast<std::size_t>(r - 1)];
  }
};

// n x n elimination step for pivot row r.
RatMatrix transition_matrix(const LeTableau& t, int r);

// Cumulative horizontal path weights entering row r from its boundary source:
// 1 at the pivot column, the running product of box weights at filled columns.
std::vector<Rational> coefficient_vector(const LeTableau& t, int r);

BasisChain basis_chain(const LeTableau& t);

// Row r of the boundary measurement matrix as predicted by the chain,
// sum_l coeff(r)[l] * basis(r)[l].
std::vector<Rational> row_from_chain(const BasisChain& chain, int r);

// Vectors attached to every edge of the modified network, built from the
// chain by the local relations at white vertices (no path enumeration).
struct EdgeVectorSystem {
  int n = 0;
  std::vector<std::vector<Rational>> vectors;  // indexed by edge id

  const std::vector<Rational>& vec(int edge_id) const {
    return vectors[static_cast<std::size_t>(edge_id)];
  }
};

EdgeVectorSystem edge_vectors(const LeNetwork& modified, const BasisChain& chain);

// Independent oracle: signed sum over all directed paths starting along the
// given edge, component j collecting (-1)^{#pivots between} times the path
// weight into the sink b_j.
std::vector<Rational> path_sum_vector(const LeNetwork& modified, int edge_id);

}  // namespace positroid
