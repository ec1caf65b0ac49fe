#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "positroid/le.hpp"
#include "support.hpp"

using namespace positroid;
using testsup::rat;

TEST_CASE("pivots and column labels of the 4 x 9 diagram") {
  LeTableau t = testsup::gr49_tableau(testsup::gr49_unit_weights());
  const LeDiagram& d = t.diagram;
  CHECK(d.pivots() == std::vector<int>{1, 2, 4, 7});
  CHECK(d.non_pivots() == std::vector<int>{3, 5, 6, 8, 9});
  CHECK(d.col_label(1) == 9);
  CHECK(d.col_label(2) == 8);
  CHECK(d.col_label(3) == 6);
  CHECK(d.col_label(4) == 5);
  CHECK(d.col_label(5) == 3);
  CHECK(d.col_of_label(9) == 1);
  CHECK(d.col_of_label(3) == 5);
  CHECK(d.col_of_label(4) == 0);  // pivot
  CHECK(d.dimension() == 10);
  CHECK(cell_dimension(d) == 10);
  CHECK(d.filled_cols(1) == std::vector<int>{5, 6, 9});
  CHECK(d.filled_cols(2) == std::vector<int>{3, 5});
  CHECK(d.filled_cols(3) == std::vector<int>{5, 6, 8, 9});
  CHECK(d.filled_cols(4) == std::vector<int>{8});
  CHECK(d.box_exists(1, 3));
  CHECK(!d.filled(1, 3));
  CHECK(d.filled(3, 8));
  CHECK(!d.box_exists(4, 6));
}

TEST_CASE("diagram validation rejects malformed shapes") {
  LeDiagram d;
  d.k = 2;
  d.n = 4;
  d.partition = {1, 2};  // not weakly decreasing
  d.fill = {{1}, {1, 1}};
  CHECK_THROWS_AS(d.validate(), LeRuleError);

  d.partition = {2, 2};
  d.fill = {{1, 1}, {1}};  // ragged fill
  CHECK_THROWS_AS(d.validate(), LeRuleError);

  d.partition = {3, 2};  // entry above n - k
  d.fill = {{1, 1, 1}, {1, 1}};
  CHECK_THROWS_AS(d.validate(), LeRuleError);
}

TEST_CASE("the exclusion rule catches a bad filling") {
  // row 2 has a filled box on the left of an empty one that sits under a
  // filled box
  LeDiagram d;
  d.k = 2;
  d.n = 4;
  d.partition = {2, 2};
  d.fill = {{1, 1}, {1, 0}};
  try {
    d.validate();
    FAIL("expected a rule violation");
  } catch (const LeRuleError& e) {
    CHECK(e.row == 2);
  }

  // same fill with the top of the offending column empty is fine
  d.fill = {{1, 0}, {1, 0}};
  CHECK_NOTHROW(d.validate());
}

TEST_CASE("tableau weight bookkeeping") {
  LeTableau t = testsup::gr24_tableau(testsup::gr24_unit_weights());
  CHECK(t.weight(1, 3) == rat(1));

  LeTableau missing = t;
  missing.weights.erase({2, 4});
  CHECK_THROWS_AS(missing.validate(), LeRuleError);

  LeTableau extra = t;
  extra.weights[{1, 2}] = rat(1);
  CHECK_THROWS_AS(extra.validate(), LeRuleError);

  LeTableau negative = t;
  negative.weights[{1, 3}] = rat(-2);
  CHECK_THROWS_AS(negative.validate(), LeRuleError);
}

TEST_CASE("empty rows and columns of the reducible 5 x 16 configuration") {
  LeTableau t = testsup::caseb_tableau();
  const LeDiagram& d = t.diagram;
  CHECK(d.pivots() == std::vector<int>{3, 7, 9, 12, 14});
  CHECK(d.dimension() == 6);
  CHECK(!d.row_empty(1));
  CHECK(d.row_empty(2));
  CHECK(d.row_empty(3));
  CHECK(!d.row_empty(4));
  CHECK(d.row_empty(5));
  for (int j : {1, 2, 11, 13, 15}) CHECK(d.column_empty(j));
  for (int j : {4, 5, 6, 8, 10, 16}) CHECK(!d.column_empty(j));
}

TEST_CASE("reduction strips empty rows and zero columns") {
  ReducedData rd = reduce_soliton_data(testsup::caseb_tableau());
  CHECK(rd.kept_rows == std::vector<int>{1, 4});
  CHECK(rd.kept_columns == std::vector<int>{3, 4, 5, 6, 8, 10, 12, 16});
  CHECK(rd.removed_pivot_rows == std::vector<int>{2, 3, 5});
  CHECK(rd.tableau.diagram.k == 2);
  CHECK(rd.tableau.diagram.n == 8);
  CHECK(rd.tableau.diagram.pivots() == std::vector<int>{1, 7});
  CHECK(rd.tableau.diagram.dimension() == 6);
  CHECK_NOTHROW(rd.tableau.validate());
}

TEST_CASE("reduction of an irreducible tableau is the identity") {
  LeTableau t = testsup::gr49_tableau(testsup::gr49_unit_weights());
  ReducedData rd = reduce_soliton_data(t);
  CHECK(rd.kept_rows.size() == 4);
  CHECK(rd.kept_columns.size() == 9);
  CHECK(rd.tableau.diagram.fill == t.diagram.fill);
}

TEST_CASE("random tableaux are valid and within bounds") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    LeTableau t = random_le_tableau(rng, 4, 9);
    CHECK_NOTHROW(t.validate());
    CHECK(t.diagram.k <= 4);
    CHECK(t.diagram.n <= 9);
    CHECK(t.diagram.k < t.diagram.n);
  }
}

TEST_CASE("irreducible generator avoids empty rows and columns") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    LeTableau t = random_irreducible_le_tableau(rng, 4, 9);
    t.validate();
    for (int r = 1; r <= t.diagram.k; ++r) CHECK(!t.diagram.row_empty(r));
    for (int j : t.diagram.non_pivots()) CHECK(!t.diagram.column_empty(j));
  }
}
