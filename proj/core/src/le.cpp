#include "positroid/le.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace positroid {

std::vector<int> LeDiagram::pivots() const {
  std::vector<int> iv(k);
  for (int r = 1; r <= k; ++r) iv[r - 1] = n - k + r - partition[r - 1];
  return iv;
}

std::vector<int> LeDiagram::non_pivots() const {
  std::vector<bool> is_pivot(n + 1, false);
  for (int p : pivots()) is_pivot[p] = true;
  std::vector<int> out;
  for (int j = 1; j <= n; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

int LeDiagram::col_label(int t) const {
  auto np = non_pivots();
  return np[static_cast<std::size_t>(n - k - t)];
}

int LeDiagram::col_of_label(int j) const {
  auto np = non_pivots();
  for (int t = 1; t <= n - k; ++t)
    if (np[static_cast<std::size_t>(n - k - t)] == j) return t;
  return 0;
}

bool LeDiagram::box_exists(int r, int j) const {
  if (r < 1 || r > k) return false;
  int t = col_of_label(j);
  return t >= 1 && t <= partition[r - 1];
}

bool LeDiagram::filled(int r, int j) const {
  if (!box_exists(r, j)) return false;
  return fill[r - 1][static_cast<std::size_t>(col_of_label(j) - 1)] != 0;
}

std::vector<int> LeDiagram::filled_cols(int r) const {
  std::vector<int> out;
  for (int t = partition[r - 1]; t >= 1; --t)
    if (fill[r - 1][static_cast<std::size_t>(t - 1)] != 0)
      out.push_back(col_label(t));
  return out;  // ascending in j since t descends
}

int LeDiagram::dimension() const {
  int d = 0;
  for (const auto& row : fill)
    for (int b : row) d += b;
  return d;
}

bool LeDiagram::row_empty(int r) const {
  for (int b : fill[r - 1])
    if (b) return false;
  return true;
}

bool LeDiagram::column_empty(int j) const {
  int t = col_of_label(j);
  if (t == 0) return false;
  for (int r = 1; r <= k; ++r)
    if (t <= partition[r - 1] && fill[r - 1][static_cast<std::size_t>(t - 1)])
      return false;
  return true;
}

void LeDiagram::validate() const {
  if (k < 1 || n <= k) throw LeRuleError("LeDiagram: need 1 <= k < n");
  if (static_cast<int>(partition.size()) != k)
    throw LeRuleError("LeDiagram: partition size must equal k");
  for (int r = 1; r <= k; ++r) {
    if (partition[r - 1] < 0 || partition[r - 1] > n - k)
      throw LeRuleError("LeDiagram: partition entry out of [0, n-k]", r);
    if (r > 1 && partition[r - 1] > partition[r - 2])
      throw LeRuleError("LeDiagram: partition not weakly decreasing", r);
  }
  if (static_cast<int>(fill.size()) != k)
    throw LeRuleError("LeDiagram: fill must have k rows");
  for (int r = 1; r <= k; ++r)
    if (static_cast<int>(fill[r - 1].size()) != partition[r - 1])
      throw LeRuleError("LeDiagram: fill row length != partition entry", r);

  // Le-rule: no empty box with a filled box to its left in the same row and
  // a filled box above it in the same drawing column.
  for (int r = 1; r <= k; ++r) {
    for (int t = 1; t <= partition[r - 1]; ++t) {
      if (fill[r - 1][static_cast<std::size_t>(t - 1)]) continue;
      bool left = false;
      for (int t2 = 1; t2 < t && !left; ++t2)
        left = fill[r - 1][static_cast<std::size_t>(t2 - 1)] != 0;
      if (!left) continue;
      for (int r2 = 1; r2 < r; ++r2) {
        if (t <= partition[r2 - 1] &&
            fill[r2 - 1][static_cast<std::size_t>(t - 1)]) {
          throw LeRuleError("LeDiagram: Le-rule violated at row " +
                                std::to_string(r) + ", drawing column " +
                                std::to_string(t),
                            r, t);
        }
      }
    }
  }
}

const Rational& LeTableau::weight(int r, int j) const {
  auto it = weights.find({r, j});
  if (it == weights.end()) throw Error("LeTableau: no weight at requested box");
  return it->second;
}

void LeTableau::validate() const {
  diagram.validate();
  std::set<std::pair<int, int>> expected;
  for (int r = 1; r <= diagram.k; ++r)
    for (int j : diagram.filled_cols(r)) expected.insert({r, j});
  if (expected.size() != weights.size())
    throw LeRuleError("LeTableau: weight set does not match filled boxes");
  for (const auto& [key, w] : weights) {
    if (!expected.count(key))
      throw LeRuleError("LeTableau: weight on a non-filled box", key.first,
                        key.second);
    if (!(w > Rational(0)))
      throw LeRuleError("LeTableau: weights must be positive", key.first,
                        key.second);
  }
}

int cell_dimension(const LeDiagram& d) { return d.dimension(); }

ReducedData reduce_soliton_data(const LeTableau& t) {
  t.validate();
  const LeDiagram& d = t.diagram;
  auto piv = d.pivots();

  ReducedData out;
  std::vector<int> kept_cols;
  for (int j = 1; j <= d.n; ++j) {
    int r_of_pivot = 0;
    for (int r = 1; r <= d.k; ++r)
      if (piv[r - 1] == j) r_of_pivot = r;
    if (r_of_pivot) {
      if (d.row_empty(r_of_pivot)) {
        out.removed_pivot_rows.push_back(r_of_pivot);
        continue;  // empty pivot row: drop the row and its column
      }
      out.kept_rows.push_back(r_of_pivot);
      kept_cols.push_back(j);
    } else {
      if (d.column_empty(j)) continue;  // zero column: drop
      kept_cols.push_back(j);
    }
  }
  out.kept_columns = kept_cols;

  int np = static_cast<int>(kept_cols.size());
  int kp = static_cast<int>(out.kept_rows.size());
  auto new_col = [&](int old_j) {
    for (int c = 0; c < np; ++c)
      if (kept_cols[static_cast<std::size_t>(c)] == old_j) return c + 1;
    return 0;
  };

  LeDiagram nd;
  nd.k = kp;
  nd.n = np;
  if (kp == 0) {
    out.tableau.diagram = nd;
    return out;
  }
  // Reconstruct the reduced partition from the reduced pivot positions.
  nd.partition.resize(static_cast<std::size_t>(kp));
  for (int r = 1; r <= kp; ++r) {
    int old_r = out.kept_rows[static_cast<std::size_t>(r - 1)];
    int ip = new_col(piv[old_r - 1]);
    nd.partition[static_cast<std::size_t>(r - 1)] = np - kp + r - ip;
  }
  nd.fill.assign(static_cast<std::size_t>(kp), {});
  for (int r = 1; r <= kp; ++r)
    nd.fill[static_cast<std::size_t>(r - 1)]
        .assign(static_cast<std::size_t>(nd.partition[static_cast<std::size_t>(r - 1)]), 0);

  for (int r = 1; r <= kp; ++r) {
    int old_r = out.kept_rows[static_cast<std::size_t>(r - 1)];
    for (int old_j : d.filled_cols(old_r)) {
      int j = new_col(old_j);
      int tcol = nd.col_of_label(j);
      if (tcol < 1 || tcol > nd.partition[static_cast<std::size_t>(r - 1)])
        throw PropertyError("reduce_soliton_data: box fell outside diagram");
      nd.fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(tcol - 1)] = 1;
      out.tableau.weights[{r, j}] = t.weight(old_r, old_j);
    }
  }
  out.tableau.diagram = nd;
  out.tableau.validate();
  return out;
}

namespace {

LeTableau random_tableau_impl(std::mt19937_64& rng, int k_max, int n_max,
                              double p_fill, bool irreducible) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int k = std::uniform_int_distribution<int>(1, k_max)(rng);
    int n = std::uniform_int_distribution<int>(k + 1, n_max)(rng);
    LeDiagram d;
    d.k = k;
    d.n = n;
    d.partition.resize(static_cast<std::size_t>(k));
    int prev = n - k;
    for (int r = 0; r < k; ++r) {
      int lo = irreducible ? 1 : 0;
      if (prev < lo) prev = lo;
      d.partition[static_cast<std::size_t>(r)] =
          std::uniform_int_distribution<int>(lo, prev)(rng);
      prev = d.partition[static_cast<std::size_t>(r)];
    }
    d.fill.assign(static_cast<std::size_t>(k), {});
    std::bernoulli_distribution coin(p_fill);
    for (int r = 1; r <= k; ++r) {
      auto& row = d.fill[static_cast<std::size_t>(r - 1)];
      row.assign(static_cast<std::size_t>(d.partition[static_cast<std::size_t>(r - 1)]), 0);
      for (int t = 1; t <= d.partition[static_cast<std::size_t>(r - 1)]; ++t) {
        bool left = false;
        for (int t2 = 1; t2 < t && !left; ++t2)
          left = row[static_cast<std::size_t>(t2 - 1)] != 0;
        bool above = false;
        for (int r2 = 1; r2 < r && !above; ++r2)
          above = t <= d.partition[static_cast<std::size_t>(r2 - 1)] &&
                  d.fill[static_cast<std::size_t>(r2 - 1)][static_cast<std::size_t>(t - 1)];
        row[static_cast<std::size_t>(t - 1)] = (left && above) ? 1 : coin(rng);
      }
    }
    if (irreducible) {
      bool ok = true;
      for (int r = 1; r <= k && ok; ++r) ok = !d.row_empty(r);
      for (int j : d.non_pivots())
        if (!ok || d.column_empty(j)) {
          ok = false;
          break;
        }
      if (!ok) continue;
    }
    LeTableau t;
    t.diagram = d;
    std::uniform_int_distribution<int> small(1, 9);
    for (int r = 1; r <= k; ++r)
      for (int j : d.filled_cols(r))
        t.weights[{r, j}] = Rational(small(rng), small(rng));
    t.validate();
    return t;
  }
  throw Error("random_le_tableau: generation failed");
}

}  // namespace

LeTableau random_le_tableau(std::mt19937_64& rng, int k_max, int n_max,
                            double p_fill) {
  return random_tableau_impl(rng, k_max, n_max, p_fill, false);
}

LeTableau random_irreducible_le_tableau(std::mt19937_64& rng, int k_max,
                                        int n_max, double p_fill) {
  return random_tableau_impl(rng, k_max, n_max, p_fill, true);
}

}  // namespace positroid
