#pragma once

// Shared fixtures for the test binaries: the two worked examples with
// symbolic-style weights, the reducible 5x16 configuration, and random
// generators for the property suites.

#include <random>
#include <utility>
#include <vector>

#include "positroid/le.hpp"
#include "positroid/matrix.hpp"
#include "positroid/rational.hpp"

namespace testsup {

using positroid::LeTableau;
using positroid::RatMatrix;
using positroid::Rational;

inline Rational rat(int p, int q = 1) { return Rational(p) / Rational(q); }

// random positive rational with small numerator and denominator
inline Rational random_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 12);
  return Rational(d(rng)) / Rational(d(rng));
}

// n strictly increasing rationals 3*m/20 with distinct integers m; the window
// stays inside [-1.5, 1.5] and consecutive gaps are at least 0.15, which keeps
// finite-difference noise in the KP residual well under the tolerance
inline std::vector<Rational> random_phases(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-10, 10);
  std::vector<int> m;
  while (static_cast<int>(m.size()) < n) {
    int v = d(rng);
    bool seen = false;
    for (int u : m) seen = seen || u == v;
    if (!seen) m.push_back(v);
  }
  std::sort(m.begin(), m.end());
  std::vector<Rational> out;
  out.reserve(m.size());
  for (int v : m) out.push_back(Rational(3 * v, 20));
  return out;
}

// ---------------------------------------------------------------------------
// 4 x 9 worked example: partition (5,5,4,2), pivots {1,2,4,7}, ten boxes

struct Gr49W {
  Rational w15, w16, w19;        // row 1, boxes at labels 5, 6, 9
  Rational w23, w25;             // row 2, labels 3, 5
  Rational w45, w46, w48, w49;   // row 3 (pivot 4), labels 5, 6, 8, 9
  Rational w78;                  // row 4 (pivot 7), label 8
};

inline Gr49W gr49_unit_weights() {
  Gr49W w;
  w.w15 = w.w16 = w.w19 = w.w23 = w.w25 = 1;
  w.w45 = w.w46 = w.w48 = w.w49 = w.w78 = 1;
  return w;
}

inline Gr49W gr49_random_weights(std::mt19937_64& rng) {
  Gr49W w;
  w.w15 = random_weight(rng);
  w.w16 = random_weight(rng);
  w.w19 = random_weight(rng);
  w.w23 = random_weight(rng);
  w.w25 = random_weight(rng);
  w.w45 = random_weight(rng);
  w.w46 = random_weight(rng);
  w.w48 = random_weight(rng);
  w.w49 = random_weight(rng);
  w.w78 = random_weight(rng);
  return w;
}

inline LeTableau gr49_tableau(const Gr49W& w) {
  LeTableau t;
  t.diagram.k = 4;
  t.diagram.n = 9;
  t.diagram.partition = {5, 5, 4, 2};
  // drawing columns left to right carry labels 9 8 6 5 3
  t.diagram.fill = {
      {1, 0, 1, 1, 0},
      {0, 0, 0, 1, 1},
      {1, 1, 1, 1},
      {0, 1},
  };
  t.weights[{1, 5}] = w.w15;
  t.weights[{1, 6}] = w.w16;
  t.weights[{1, 9}] = w.w19;
  t.weights[{2, 3}] = w.w23;
  t.weights[{2, 5}] = w.w25;
  t.weights[{3, 5}] = w.w45;
  t.weights[{3, 6}] = w.w46;
  t.weights[{3, 8}] = w.w48;
  t.weights[{3, 9}] = w.w49;
  t.weights[{4, 8}] = w.w78;
  t.validate();
  return t;
}

// boundary measurement matrix of the 4 x 9 example in closed form
inline RatMatrix gr49_golden_matrix(const Gr49W& w) {
  RatMatrix a(4, 9);
  a.at(0, 0) = 1;
  a.at(0, 4) = w.w15;
  a.at(0, 5) = w.w15 * (w.w16 + w.w46);
  a.at(0, 7) = -w.w15 * w.w48 * (w.w16 + w.w46);
  a.at(0, 8) = -w.w15 * w.w48 * w.w49 * (w.w16 + w.w46) - w.w15 * w.w16 * w.w19;
  a.at(1, 1) = 1;
  a.at(1, 2) = w.w23;
  a.at(1, 4) = -w.w23 * w.w25;
  a.at(1, 5) = -w.w23 * w.w25 * w.w46;
  a.at(1, 7) = w.w23 * w.w25 * w.w46 * w.w48;
  a.at(1, 8) = w.w23 * w.w25 * w.w46 * w.w48 * w.w49;
  a.at(2, 3) = 1;
  a.at(2, 4) = w.w45;
  a.at(2, 5) = w.w45 * w.w46;
  a.at(2, 7) = -w.w45 * w.w46 * w.w48;
  a.at(2, 8) = -w.w45 * w.w46 * w.w48 * w.w49;
  a.at(3, 6) = 1;
  a.at(3, 7) = w.w78;
  return a;
}

// elimination step for pivot row 4 (pivot column 7, box at label 8)
inline RatMatrix gr49_golden_C34(const Gr49W& w) {
  RatMatrix c = RatMatrix::identity(9);
  c.at(6, 6) = -1;
  c.at(6, 7) = -w.w78;
  c.at(7, 7) = -1;
  c.at(8, 8) = -1;
  return c;
}

// elimination step for pivot row 3 (pivot column 4, boxes at 5, 6, 8, 9)
inline RatMatrix gr49_golden_C23(const Gr49W& w) {
  RatMatrix c = RatMatrix::identity(9);
  c.at(3, 3) = -1;
  c.at(3, 4) = -w.w45;
  c.at(3, 5) = -w.w45 * w.w46;
  c.at(3, 7) = -w.w45 * w.w46 * w.w48;
  c.at(3, 8) = -w.w45 * w.w46 * w.w48 * w.w49;
  c.at(4, 4) = -1;
  c.at(4, 5) = -w.w46;
  c.at(4, 7) = -w.w46 * w.w48;
  c.at(4, 8) = -w.w46 * w.w48 * w.w49;
  c.at(5, 5) = -1;
  c.at(5, 7) = -w.w48;
  c.at(5, 8) = -w.w48 * w.w49;
  c.at(6, 6) = -1;
  c.at(7, 7) = -1;
  c.at(7, 8) = -w.w49;
  c.at(8, 8) = -1;
  return c;
}

// elimination step for pivot row 2 (pivot column 2, boxes at 3, 5)
inline RatMatrix gr49_golden_C12(const Gr49W& w) {
  RatMatrix c = RatMatrix::identity(9);
  c.at(1, 1) = -1;
  c.at(1, 2) = -w.w23;
  c.at(1, 4) = -w.w23 * w.w25;
  c.at(2, 2) = -1;
  c.at(2, 4) = -w.w25;
  c.at(3, 3) = -1;
  c.at(4, 4) = -1;
  c.at(5, 5) = -1;
  c.at(6, 6) = -1;
  c.at(7, 7) = -1;
  c.at(8, 8) = -1;
  return c;
}

inline RatMatrix gr49_golden_E2(const Gr49W& w) {
  RatMatrix e = RatMatrix::identity(9);
  e.at(3, 3) = -1;
  e.at(3, 4) = -w.w45;
  e.at(3, 5) = -w.w45 * w.w46;
  e.at(3, 7) = w.w45 * w.w46 * w.w48;
  e.at(3, 8) = w.w45 * w.w46 * w.w48 * w.w49;
  e.at(4, 4) = -1;
  e.at(4, 5) = -w.w46;
  e.at(4, 7) = w.w46 * w.w48;
  e.at(4, 8) = w.w46 * w.w48 * w.w49;
  e.at(5, 5) = -1;
  e.at(5, 7) = w.w48;
  e.at(5, 8) = w.w48 * w.w49;
  e.at(6, 6) = 1;
  e.at(6, 7) = w.w78;
  e.at(7, 7) = 1;
  e.at(7, 8) = w.w49;
  e.at(8, 8) = 1;
  return e;
}

inline RatMatrix gr49_golden_E1(const Gr49W& w) {
  RatMatrix e(9, 9);
  e.at(0, 0) = 1;
  e.at(1, 1) = -1;
  e.at(1, 2) = -w.w23;
  e.at(1, 4) = w.w23 * w.w25;
  e.at(1, 5) = w.w23 * w.w25 * w.w46;
  e.at(1, 7) = -w.w23 * w.w25 * w.w46 * w.w48;
  e.at(1, 8) = -w.w23 * w.w25 * w.w46 * w.w48 * w.w49;
  e.at(2, 2) = -1;
  e.at(2, 4) = w.w25;
  e.at(2, 5) = w.w25 * w.w46;
  e.at(2, 7) = -w.w25 * w.w46 * w.w48;
  e.at(2, 8) = -w.w25 * w.w46 * w.w48 * w.w49;
  e.at(3, 3) = 1;
  e.at(3, 4) = w.w45;
  e.at(3, 5) = w.w45 * w.w46;
  e.at(3, 7) = -w.w45 * w.w46 * w.w48;
  e.at(3, 8) = -w.w45 * w.w46 * w.w48 * w.w49;
  e.at(4, 4) = 1;
  e.at(4, 5) = w.w46;
  e.at(4, 7) = -w.w46 * w.w48;
  e.at(4, 8) = -w.w46 * w.w48 * w.w49;
  e.at(5, 5) = 1;
  e.at(5, 7) = -w.w48;
  e.at(5, 8) = -w.w48 * w.w49;
  e.at(6, 6) = -1;
  e.at(6, 7) = -w.w78;
  e.at(7, 7) = -1;
  e.at(7, 8) = -w.w49;
  e.at(8, 8) = -1;
  return e;
}

inline std::vector<Rational> gr49_golden_c(const Gr49W& w, int r) {
  std::vector<Rational> c(9);
  switch (r) {
    case 1:
      c[0] = 1;
      c[4] = w.w15;
      c[5] = w.w15 * w.w16;
      c[8] = w.w15 * w.w16 * w.w19;
      break;
    case 2:
      c[1] = 1;
      c[2] = w.w23;
      c[4] = w.w23 * w.w25;
      break;
    case 3:
      c[3] = 1;
      c[4] = w.w45;
      c[5] = w.w45 * w.w46;
      c[7] = w.w45 * w.w46 * w.w48;
      c[8] = w.w45 * w.w46 * w.w48 * w.w49;
      break;
    case 4:
      c[6] = 1;
      c[7] = w.w78;
      break;
  }
  return c;
}

// ---------------------------------------------------------------------------
// 2 x 4 totally positive example: all four boxes filled, pivots {1,2}

struct Gr24W {
  Rational w13, w14, w23, w24;
};

inline Gr24W gr24_unit_weights() {
  Gr24W w;
  w.w13 = w.w14 = w.w23 = w.w24 = 1;
  return w;
}

inline Gr24W gr24_random_weights(std::mt19937_64& rng) {
  Gr24W w;
  w.w13 = random_weight(rng);
  w.w14 = random_weight(rng);
  w.w23 = random_weight(rng);
  w.w24 = random_weight(rng);
  return w;
}

inline LeTableau gr24_tableau(const Gr24W& w) {
  LeTableau t;
  t.diagram.k = 2;
  t.diagram.n = 4;
  t.diagram.partition = {2, 2};
  t.diagram.fill = {{1, 1}, {1, 1}};
  t.weights[{1, 3}] = w.w13;
  t.weights[{1, 4}] = w.w14;
  t.weights[{2, 3}] = w.w23;
  t.weights[{2, 4}] = w.w24;
  t.validate();
  return t;
}

inline RatMatrix gr24_golden_matrix(const Gr24W& w) {
  RatMatrix a(2, 4);
  a.at(0, 0) = 1;
  a.at(0, 2) = -w.w13;
  a.at(0, 3) = -w.w13 * (w.w14 + w.w24);
  a.at(1, 1) = 1;
  a.at(1, 2) = w.w23;
  a.at(1, 3) = w.w23 * w.w24;
  return a;
}

inline RatMatrix gr24_golden_E1(const Gr24W& w) {
  RatMatrix e(4, 4);
  e.at(0, 0) = 1;
  e.at(1, 1) = -1;
  e.at(1, 2) = -w.w23;
  e.at(1, 3) = -w.w23 * w.w24;
  e.at(2, 2) = -1;
  e.at(2, 3) = -w.w24;
  e.at(3, 3) = -1;
  return e;
}

// ---------------------------------------------------------------------------
// reducible 5 x 16 configuration: pivots {3,7,9,12,14}, rows 2, 3, 5 empty,
// row 1 filled at labels {4,5,6,8,10}, row 4 at {16}; the infinite oval holds
// two dangling edges and one vacuum pole

inline LeTableau caseb_tableau() {
  LeTableau t;
  t.diagram.k = 5;
  t.diagram.n = 16;
  t.diagram.partition = {9, 6, 5, 3, 2};
  // drawing columns left to right carry labels 16 15 13 11 10 8 6 5 4 2 1
  t.diagram.fill = {
      {0, 0, 0, 0, 1, 1, 1, 1, 1},
      {0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0},
      {1, 0, 0},
      {0, 0},
  };
  t.weights[{1, 4}] = rat(2);
  t.weights[{1, 5}] = rat(1, 2);
  t.weights[{1, 6}] = rat(3);
  t.weights[{1, 8}] = rat(1, 3);
  t.weights[{1, 10}] = rat(5, 2);
  t.weights[{4, 16}] = rat(4, 3);
  t.validate();
  return t;
}

inline std::vector<Rational> caseb_phases() {
  std::vector<Rational> k;
  for (int j = 0; j < 16; ++j) k.push_back(Rational(2 * j - 15, 10));
  return k;
}

}  // namespace testsup
