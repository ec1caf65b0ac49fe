// Acceptance gate: one line per criterion, exit code = number of failures.
// Tolerances and budgets are pinned next to each check.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "positroid/cli.hpp"
#include "positroid/curve.hpp"
#include "positroid/divisor.hpp"
#include "positroid/edge_vectors.hpp"
#include "positroid/network.hpp"
#include "positroid/numeric.hpp"
#include "positroid/soliton.hpp"
#include "support.hpp"

using namespace positroid;
using namespace testsup;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

bool report(int num, bool pass, const std::string& detail) {
  std::printf("criterion %02d: %s  (%s)\n", num, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  return pass;
}

template <class Real>
Real rel_gap(Real a, Real b) {
  return std::fabs(a - b) / std::max(Real(1), std::fabs(b));
}

template <class Real>
std::vector<Times<Real>> random_times(std::uint64_t seed, int count, double span) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-span, span);
  std::vector<Times<Real>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Times<Real> tm;
    tm.x = Real(dist(rng));
    tm.y = Real(dist(rng));
    tm.t = Real(dist(rng));
    out.push_back(tm);
  }
  return out;
}

struct Pipe {
  SolitonData data;
  LeNetwork net;
  EdgeVectorSystem sys;
  OvalMap om;
};

Pipe make_pipe(const LeTableau& t, std::vector<Rational> phases) {
  LeNetwork net = modify_network(build_network(t));
  BasisChain chain = basis_chain(t);
  EdgeVectorSystem sys = edge_vectors(net, chain);
  OvalMap om = trace_ovals(net);
  return Pipe{make_soliton_data(t, std::move(phases)), net, sys, om};
}

SolitonData random_data(std::mt19937_64& rng, int kmax, int nmax) {
  LeTableau t = random_le_tableau(rng, kmax, nmax);
  return make_soliton_data(t, random_phases(rng, t.diagram.n));
}

// 1. worked 4 x 9 cell: measurement matrix, elimination steps, bases and
//    coefficient vectors in closed form, exact at 10 weight draws, under 1 s
bool c01() {
  auto start = Clock::now();
  std::mt19937_64 rng(9001);
  bool ok = true;
  for (int i = 0; i < 10 && ok; ++i) {
    Gr49W w = gr49_random_weights(rng);
    LeTableau t = gr49_tableau(w);
    ok = ok && boundary_measurement(build_network(t)) == gr49_golden_matrix(w);
    ok = ok && transition_matrix(t, 4) == gr49_golden_C34(w);
    ok = ok && transition_matrix(t, 3) == gr49_golden_C23(w);
    ok = ok && transition_matrix(t, 2) == gr49_golden_C12(w);
    BasisChain chain = basis_chain(t);
    ok = ok && chain.basis(4) == RatMatrix::identity(9);
    ok = ok && chain.basis(3) == gr49_golden_C34(w);
    ok = ok && chain.basis(2) == gr49_golden_E2(w);
    ok = ok && chain.basis(1) == gr49_golden_E1(w);
    for (int r = 1; r <= 4; ++r) ok = ok && coefficient_vector(t, r) == gr49_golden_c(w, r);
  }
  long long t_ms = ms_since(start);
  return report(1, ok && t_ms < 1000,
                "10 weight draws, " + std::to_string(t_ms) + " ms, budget 1000 ms");
}

// 2. pinned edge vectors of the 4 x 9 cell, exact, including the sign flip
//    between the rows meeting at label 5
bool c02() {
  std::mt19937_64 rng(9002);
  bool ok = true;
  for (int i = 0; i < 6 && ok; ++i) {
    Gr49W w = i == 0 ? gr49_unit_weights() : gr49_random_weights(rng);
    LeTableau t = gr49_tableau(w);
    Pipe p = make_pipe(t, random_phases(rng, 9));
    std::vector<Rational> expect(9);
    expect[4] = 1;
    expect[5] = w.w46;
    expect[7] = Rational(0) - w.w46 * w.w48;
    expect[8] = Rational(0) - w.w46 * w.w48 * w.w49;
    auto e345 = p.net.find_edge(3, 5, 3);
    auto e253 = p.net.find_edge(2, 5, 3);
    if (!e345 || !e253) {
      ok = false;
      break;
    }
    ok = ok && p.sys.vec(*e345) == expect;
    std::vector<Rational> neg(9);
    for (int l = 0; l < 9; ++l) neg[static_cast<std::size_t>(l)] =
        Rational(0) - expect[static_cast<std::size_t>(l)];
    ok = ok && p.sys.vec(*e253) == neg;
  }
  return report(2, ok, "unit weights plus 5 random draws, exact");
}

// 3. path-sum oracle equals the propagated vectors on every edge
bool c03() {
  auto start = Clock::now();
  std::mt19937_64 rng(9003);
  bool ok = true;
  long edges = 0;
  for (int i = 0; i < 50 && ok; ++i) {
    LeTableau t = random_le_tableau(rng, 4, 9, i % 2 ? 0.9 : 0.6);
    LeNetwork net = modify_network(build_network(t));
    EdgeVectorSystem sys = edge_vectors(net, basis_chain(t));
    for (const NetEdge& e : net.edges) {
      ++edges;
      if (path_sum_vector(net, e.id) != sys.vec(e.id)) {
        ok = false;
        break;
      }
    }
  }
  long long t_ms = ms_since(start);
  return report(3, ok && t_ms < 30000,
                "50 tableaux, " + std::to_string(edges) + " edges, " + std::to_string(t_ms) +
                    " ms, budget 30000 ms");
}

// 4. measurement rows from the coefficient expansion and from the dangling
//    edge vectors, exact
bool c04() {
  std::mt19937_64 rng(9004);
  bool ok = true;
  for (int i = 0; i < 20 && ok; ++i) {
    LeTableau t = random_le_tableau(rng, 4, 9);
    RatMatrix a = boundary_measurement(build_network(t));
    BasisChain chain = basis_chain(t);
    LeNetwork net = modify_network(build_network(t));
    EdgeVectorSystem sys = edge_vectors(net, chain);
    for (int r = 1; r <= t.diagram.k; ++r) {
      ok = ok && row_from_chain(chain, r) == a.row(static_cast<std::size_t>(r - 1));
      auto ed = net.find_edge(r, 0, 3);
      ok = ok && ed && sys.vec(*ed) == a.row(static_cast<std::size_t>(r - 1));
    }
  }
  return report(4, ok, "20 random tableaux, both row routes exact");
}

// 5. vertex-disjoint path families against determinants, all column subsets
bool c05() {
  std::mt19937_64 rng(9005);
  bool ok = true;
  long minors = 0;
  for (int trial = 0; trial < 15 && ok; ++trial) {
    LeTableau t = random_le_tableau(rng, 3, 6);
    LeNetwork net = build_network(t);
    GrassmannPoint gp = grassmann_point(net);
    int n = t.diagram.n, k = t.diagram.k;
    std::vector<int> J(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) J[static_cast<std::size_t>(i)] = i + 1;
    while (ok) {
      std::vector<std::size_t> cols;
      for (int j : J) cols.push_back(static_cast<std::size_t>(j - 1));
      ++minors;
      ok = ok && minor_by_paths(net, J) == gp.matrix.maximal_minor(cols);
      int i = k - 1;
      while (i >= 0 && J[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
      if (i < 0) break;
      ++J[static_cast<std::size_t>(i)];
      for (int m = i + 1; m < k; ++m)
        J[static_cast<std::size_t>(m)] = J[static_cast<std::size_t>(m - 1)] + 1;
    }
  }
  return report(5, ok, "15 networks, " + std::to_string(minors) + " minors, exact");
}

// 6. 2 x 4 dressed divisor closed forms and the symmetric function relations
//    of the characteristic roots
bool c06() {
  std::mt19937_64 rng(9006);
  const long double tol = 1e-10L;
  bool ok = true;
  for (int i = 0; i < 20 && ok; ++i) {
    Gr24W w = gr24_random_weights(rng);
    Pipe p = make_pipe(gr24_tableau(w), random_phases(rng, 4));
    Times<long double> t0 = choose_t0<long double>(p.data, p.net, p.sys, true).t0;
    auto forms = gr24_dressed_closed(p.data, t0);
    auto cfg = assemble_divisors<long double>(p.data, p.net, p.sys, p.om, t0);
    int dressed_seen = 0;
    for (const auto& pt : cfg.kp) {
      if (pt.kind != DivisorKind::Dressed) continue;
      ++dressed_seen;
      int r = p.net.vertex(pt.vertex).r;
      long double want = r == 1 ? forms.gamma13 : forms.gamma23;
      ok = ok && rel_gap(pt.zeta, want) <= tol;
    }
    ok = ok && dressed_seen == 2;

    auto op = darboux_at(p.data, t0);
    auto sato = sato_divisor(p.data, op);
    ok = ok && sato.roots.size() == 2;
    if (ok) {
      ok = ok && rel_gap(sato.roots[0] + sato.roots[1], op.w[0]) <= tol;
      ok = ok && rel_gap(sato.roots[0] * sato.roots[1], -op.w[1]) <= tol;
    }
  }
  return report(6, ok, "20 draws, closed forms and root relations to 1e-10");
}

// 7. deformation family: first dressed point equals the undeformed value,
//    second approaches it with log-log slope -1
bool c07() {
  std::mt19937_64 rng(9007);
  const long double tol = 1e-10L;
  bool ok = true;
  double worked_slope = 0;
  for (int i = 0; i < 3 && ok; ++i) {
    Gr24W w = i == 0 ? gr24_unit_weights() : gr24_random_weights(rng);
    std::vector<Rational> phases =
        i == 0 ? std::vector<Rational>{rat(-3), rat(-1), rat(2), rat(3)} : random_phases(rng, 4);
    Pipe p = make_pipe(gr24_tableau(w), phases);
    Times<long double> t0 = choose_t0<long double>(p.data, p.net, p.sys, true).t0;
    auto forms = gr24_dressed_closed(p.data, t0);
    std::vector<long double> gaps;
    for (long double xi : {10.0L, 100.0L, 1000.0L}) {
      auto xd = gr24_xi_divisor(p.data, t0, xi);
      ok = ok && rel_gap(xd.zeta1, forms.gamma23) <= tol;
      gaps.push_back(std::fabs(xd.zeta2 - forms.gamma13));
    }
    ok = ok && gaps[0] > 0 && gaps[2] > 0;
    if (ok) {
      double slope = static_cast<double>((std::log(gaps[2]) - std::log(gaps[0])) /
                                         (std::log(1000.0L) - std::log(10.0L)));
      worked_slope = i == 0 ? slope : worked_slope;
      ok = ok && slope > -1.1 && slope < -0.9;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", worked_slope);
  return report(7, ok, std::string("first relation to 1e-10, worked slope ") + buf);
}

// 8. characteristic roots stay real and inside the phase interval at a random
//    base time; distinct for at least 95 of 100 draws
bool c08() {
  std::mt19937_64 rng(9008);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  int real_in_range = 0, distinct = 0;
  for (int i = 0; i < 100; ++i) {
    SolitonData data = random_data(rng, 4, 9);
    Times<double> t0;
    t0.x = dist(rng);
    t0.y = dist(rng);
    t0.t = dist(rng);
    auto sato = sato_divisor(data, darboux_at(data, t0));
    if (sato.all_real && sato.in_range) ++real_in_range;
    if (sato.distinct) ++distinct;
  }
  bool ok = real_in_range == 100 && distinct >= 95;
  return report(8, ok,
                "real and in range " + std::to_string(real_in_range) + "/100, distinct " +
                    std::to_string(distinct) + "/100 (needs 95)");
}

// data for the floating point suites: the two worked cells, the reducible
// 5 x 16 configuration, and random tableaux
std::vector<SolitonData> float_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SolitonData> out;
  Gr24W w24 = gr24_random_weights(rng);
  out.push_back(make_soliton_data(gr24_tableau(w24), random_phases(rng, 4)));
  Gr49W w49 = gr49_random_weights(rng);
  out.push_back(make_soliton_data(gr49_tableau(w49), random_phases(rng, 9)));
  out.push_back(make_soliton_data(caseb_tableau(), caseb_phases()));
  for (int i = 0; i < 7; ++i) out.push_back(random_data(rng, 4, 9));
  return out;
}

// 9. minor-sum and Wronskian tau agree and stay positive
bool c09() {
  const long double tol = 1e-9L;
  bool ok = true;
  auto suite = float_suite(9009);
  int datum = 0;
  for (const SolitonData& data : suite) {
    TauMinorSum tau(data);
    auto times = random_times<long double>(9100 + static_cast<std::uint64_t>(datum), 100, 2.0);
    for (const auto& tm : times) {
      auto a = tau.eval(tm).value();
      auto b = tau_wronskian(data, tm);
      if (!(a.mant > 0) || scaled_rel_diff(a, b) > tol) {
        ok = false;
        break;
      }
    }
    ++datum;
    if (!ok) break;
  }
  return report(9, ok, "10 data, 100 times each, relative 1e-9, tau positive");
}

// 10. KP-II residual with analytic x derivatives and h = 1e-4 in y, t
bool c10() {
  const long double h = 1e-4L;
  const long double tol = 1e-5L;
  bool ok = true;
  long double worst = 0;
  auto suite = float_suite(9010);
  int datum = 0;
  for (const SolitonData& data : suite) {
    TauMinorSum tau(data);
    auto times = random_times<long double>(9200 + static_cast<std::uint64_t>(datum), 50, 1.5);
    for (const auto& tm : times) {
      long double res = std::fabs(kp_residual(tau, tm, h));
      worst = std::max(worst, res);
      if (!(res < tol)) ok = false;
    }
    ++datum;
    if (!ok) break;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2Le", worst);
  return report(10, ok, std::string("10 data, 50 points each, worst residual ") + buf);
}

// 11 + 12 share one randomized divisor suite
int parity_and_regularity() {
  auto start = Clock::now();
  std::mt19937_64 rng(9011);
  int parity_violations = 0, kp_bad = 0, degree_bad = 0, failures = 0;
  std::string first_error;
  for (int i = 0; i < 200; ++i) {
    try {
      LeTableau rt = random_le_tableau(rng, 4, 9, i % 2 ? 0.9 : 0.6);
      SolitonData data = make_soliton_data(rt, random_phases(rng, rt.diagram.n));
      Pipe p = make_pipe(data.tableau, data.kappa);
      Times<double> t0 = choose_t0<double>(p.data, p.net, p.sys, true).t0;
      auto cfg = assemble_divisors<double>(p.data, p.net, p.sys, p.om, t0);
      auto par = parity_check(p.om, cfg);
      parity_violations += par.violations;
      auto kp = kp_oval_check(p.om, cfg);
      if (!(kp.one_per_finite_oval && kp.omega0_empty && kp.unassigned == 0)) ++kp_bad;
      if (static_cast<int>(cfg.kp.size()) != p.data.tableau.diagram.dimension()) ++degree_bad;
    } catch (const std::exception& e) {
      ++parity_violations;
      ++kp_bad;
      if (first_error.empty()) first_error = e.what();
    }
  }

  bool caseb_ok = true;
  int nu0 = -1, mu0 = -1;
  try {
    Pipe p = make_pipe(caseb_tableau(), caseb_phases());
    Times<double> t0 = choose_t0<double>(p.data, p.net, p.sys, true).t0;
    auto cfg = assemble_divisors<double>(p.data, p.net, p.sys, p.om, t0);
    auto par = parity_check(p.om, cfg);
    nu0 = par.nu[0];
    mu0 = par.mu[0];
    caseb_ok = par.ok && nu0 == 1 && mu0 == 2 && (nu0 + mu0 - p.om.k) % 2 == 0;
  } catch (const std::exception& e) {
    caseb_ok = false;
    if (first_error.empty()) first_error = e.what();
  }

  long long t_ms = ms_since(start);
  std::string d11 = "200 tableaux, violations " + std::to_string(parity_violations) +
                    ", 5 x 16 oval zero nu=" + std::to_string(nu0) + " mu=" +
                    std::to_string(mu0) + ", " + std::to_string(t_ms) + " ms, budget 120000 ms";
  if (!first_error.empty()) d11 += ", first error: " + first_error;
  if (!report(11, parity_violations == 0 && caseb_ok && t_ms < 120000, d11)) ++failures;
  if (!report(12, kp_bad == 0 && degree_bad == 0,
              "same suite, off ovals " + std::to_string(kp_bad) + ", wrong degree " +
                  std::to_string(degree_bad)))
    ++failures;
  return failures;
}

// 13. oval and genus bookkeeping, plus the reduced 2 x 4 census
bool c13() {
  std::mt19937_64 rng(9013);
  bool ok = true;
  for (int i = 0; i < 50 && ok; ++i) {
    LeTableau t = random_le_tableau(rng, 4, 9, i % 2 ? 0.9 : 0.6);
    int d = t.diagram.dimension();
    LeNetwork net = modify_network(build_network(t));
    ok = ok && trace_ovals(net).n_ovals == d + 1;
    ok = ok && build_curve(net).genus() == d;
    ok = ok && curve_counts(reduce_network(build_network(t))).genus == d;
  }
  CurveCounts c = curve_counts(reduce_network(build_network(gr24_tableau(gr24_unit_weights()))));
  ok = ok && c.components == 5 && c.double_points == 8 && c.genus == 4;
  return report(13, ok,
                "50 tableaux, reduced 2 x 4 census " + std::to_string(c.components) + "/" +
                    std::to_string(c.double_points) + "/" + std::to_string(c.genus));
}

// 14. vacuum and dressed waves agree across every glued point pair
bool c14() {
  std::mt19937_64 rng(9014);
  const long double tol = 1e-10L;
  bool ok = true;
  long double worst = 0;

  std::vector<std::pair<LeTableau, std::vector<Rational>>> items;
  items.emplace_back(gr24_tableau(gr24_unit_weights()),
                     std::vector<Rational>{rat(-3), rat(-1), rat(2), rat(3)});
  RunConfig big = example_config("gr492");
  items.emplace_back(big.tableau, big.phases);
  for (int i = 0; i < 8; ++i) {
    LeTableau t = random_le_tableau(rng, 4, 9);
    items.emplace_back(t, random_phases(rng, t.diagram.n));
  }

  int idx = 0;
  for (const auto& [t, phases] : items) {
    Pipe p = make_pipe(t, phases);
    Times<long double> t0 = choose_t0<long double>(p.data, p.net, p.sys, true).t0;
    auto kap = p.data.kappa_real<long double>();
    auto times = random_times<long double>(9300 + static_cast<std::uint64_t>(idx), 20, 1.5);
    long double gv = glued_pair_residual(p.net, p.sys, kap, t0, times);
    long double gd = dressed_glued_pair_residual(p.data, p.net, p.sys, kap, t0, times);
    worst = std::max({worst, gv, gd});
    ok = ok && gv < tol && gd < tol;
    ++idx;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2Le", worst);
  return report(14, ok, std::string("10 data, 20 times, worst residual ") + buf);
}

template <class F>
int guarded(int num, F f) {
  try {
    return f() ? 0 : 1;
  } catch (const std::exception& e) {
    report(num, false, std::string("exception: ") + e.what());
    return 1;
  }
}

}  // namespace

int main() {
  int failures = 0;
  failures += guarded(1, c01);
  failures += guarded(2, c02);
  failures += guarded(3, c03);
  failures += guarded(4, c04);
  failures += guarded(5, c05);
  failures += guarded(6, c06);
  failures += guarded(7, c07);
  failures += guarded(8, c08);
  failures += guarded(9, c09);
  failures += guarded(10, c10);
  try {
    failures += parity_and_regularity();
  } catch (const std::exception& e) {
    report(11, false, std::string("exception: ") + e.what());
    report(12, false, "suite aborted");
    failures += 2;
  }
  failures += guarded(13, c13);
  failures += guarded(14, c14);
  std::printf("acceptance: %d/14 passed\n", 14 - failures);
  return failures;
}
