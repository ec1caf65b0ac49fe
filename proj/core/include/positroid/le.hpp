#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "positroid/errors.hpp"
#include "positroid/rational.hpp"

namespace positroid {

// Young diagram inside the k x (n-k) rectangle with a 0/1 filling.
//
// Index conventions used throughout:
//   - rows r = 1..k top to bottom; row r holds partition[r-1] boxes.
//   - pivots i_r = n - k + r - partition[r-1]; strictly increasing.
//   - drawing column t = 1..n-k left to right; t corresponds to the
//     (n-k+1-t)-th smallest non-pivot index, so boxes further left sit over
//     larger column labels j. Box (r,t) exists iff t <= partition[r-1], and
//     its label j then ranges over the non-pivots in ]i_r, n].
struct LeDiagram {
  int k = 0;
  int n = 0;
  std::vector<int> partition;            // weakly decreasing, entries in [0, n-k]
  std::vector<std::vector<int>> fill;    // fill[r-1][t-1] in {0,1}, left to right

  std::vector<int> pivots() const;       // 1-based column indices, size k
  std::vector<int> non_pivots() const;   // ascending, size n-k

  // Column label j of drawing column t (1-based both).
  int col_label(int t) const;
  // Drawing column t of a non-pivot label j, or 0 if j is a pivot.
  int col_of_label(int j) const;

  bool box_exists(int r, int j) const;
  bool filled(int r, int j) const;       // chi^{i_r}_j
  // Ascending labels of the filled boxes of row r (j_1 < j_2 < ... < j_{N_r}).
  std::vector<int> filled_cols(int r) const;

  int dimension() const;                 // number of filled boxes, d
  bool row_empty(int r) const;
  bool column_empty(int j) const;        // non-pivot j with no filled box

  // Throws LeRuleError (with box location) on shape or Le-rule violations.
  void validate() const;
};

// Le-diagram plus positive weights on the filled boxes.
struct LeTableau {
  LeDiagram diagram;
  std::map<std::pair<int, int>, Rational> weights;  // (r, j) -> w_{i_r j} > 0

  const Rational& weight(int r, int j) const;
  void validate() const;  // diagram valid, weights positive, keys == filled boxes
};

int cell_dimension(const LeDiagram& d);

// Result of stripping zero columns and empty pivot rows.
struct ReducedData {
  LeTableau tableau;               // the irreducible core
  std::vector<int> kept_columns;   // old column labels, ascending, size n'
  std::vector<int> kept_rows;      // old row indices, ascending, size k'
  // Rows (old index) whose removal flips signs: removal of the empty pivot
  // row s negates entries A^i_j with i < s and j > i_s in the old matrix.
  std::vector<int> removed_pivot_rows;
};

ReducedData reduce_soliton_data(const LeTableau& t);

// Uniform-ish random valid Le-tableau for property suites. Forced boxes
// (1-left and 1-above) are always filled; free boxes are Bernoulli(p_fill).
LeTableau random_le_tableau(std::mt19937_64& rng, int k_max, int n_max,
                            double p_fill = 0.6);
// Random tableau guaranteed irreducible (no empty rows or columns).
LeTableau random_irreducible_le_tableau(std::mt19937_64& rng, int k_max,
                                        int n_max, double p_fill = 0.6);

}  // namespace positroid
