#include "positroid/cli.hpp"

#include <atomic>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <mutex>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "positroid/edge_vectors.hpp"
#include "positroid/plane_curve.hpp"
#include "positroid/png.hpp"

namespace positroid {

namespace {

std::string join_path(const std::string& dir, const std::string& name) {
  if (dir.empty()) return name;
  return dir.back() == '/' ? dir + name : dir + "/" + name;
}

template <class Real>
std::vector<Times<Real>> sample_times(std::uint64_t seed, int count, Real span) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Times<Real>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Times<Real> tm;
    tm.x = span * Real(dist(rng));
    tm.y = span * Real(dist(rng));
    tm.t = span * Real(dist(rng));
    out.push_back(tm);
  }
  return out;
}

struct DivisorArtifacts {
  DivisorConfig<double> divisors;
  std::vector<std::pair<std::string, bool>> checks;
  ParityReport parity;
  KPOvalReport kp;
};

template <class Real>
DivisorArtifacts run_divisor_pipeline(const RunConfig& rc, const LeNetwork& net,
                                      const EdgeVectorSystem& sys, const OvalMap& om) {
  SolitonData data = make_soliton_data(rc.tableau, rc.phases);
  auto kap = data.kappa_real<Real>();

  Times<Real> t0;
  if (rc.t0x) {
    t0.x = Real(*rc.t0x);
  } else {
    t0 = choose_t0<Real>(data, net, sys, true).t0;
  }

  DivisorConfig<Real> dc = assemble_divisors<Real>(data, net, sys, om, t0);
  ParityReport par = parity_check(om, dc);
  KPOvalReport kp = kp_oval_check(om, dc);

  auto samples = sample_times<Real>(rc.seed, 20, Real(1));
  auto wv = vacuum_edge_waves(net, sys, kap, t0);
  Real lin = edge_wave_residual(net, wv, kap, t0, true);
  Real interp = interpolation_residual(net, sys, kap, t0, samples);
  Real glue_v = glued_pair_residual(net, sys, kap, t0, samples);
  Real glue_d = dressed_glued_pair_residual(data, net, sys, kap, t0, samples);
  auto op = darboux_at(data, t0);
  auto sato = sato_divisor(data, op);

  DivisorArtifacts art;
  art.parity = par;
  art.kp = kp;
  art.checks = {
      {"edge_linear_system", lin < Real(1e-12)},
      {"interpolation", interp < Real(1e-9)},
      {"glued_pairs_vacuum", glue_v < Real(1e-10)},
      {"glued_pairs_dressed", glue_d < Real(1e-10)},
      {"vacuum_degree", static_cast<int>(dc.vacuum.size()) == rc.tableau.diagram.dimension()},
      {"kp_degree", static_cast<int>(dc.kp.size()) == rc.tableau.diagram.dimension()},
      {"parity", par.ok},
      {"kp_one_per_finite_oval", kp.ok},
      {"sato_all_real", sato.all_real},
      {"sato_in_range", sato.in_range},
  };

  art.divisors.t0.x = static_cast<double>(t0.x);
  art.divisors.t0.y = static_cast<double>(t0.y);
  art.divisors.t0.t = static_cast<double>(t0.t);
  auto conv = [](const DivisorPoint<Real>& p) {
    DivisorPoint<double> q;
    q.kind = p.kind;
    q.vertex = p.vertex;
    q.zeta = static_cast<double>(p.zeta);
    q.oval = p.oval;
    q.interval = p.interval;
    q.boundary_hit = p.boundary_hit;
    return q;
  };
  for (const auto& p : dc.vacuum) art.divisors.vacuum.push_back(conv(p));
  for (const auto& p : dc.kp) art.divisors.kp.push_back(conv(p));
  return art;
}

DivisorArtifacts run_divisor_dispatch(const RunConfig& rc, const LeNetwork& net,
                                      const EdgeVectorSystem& sys, const OvalMap& om) {
  using Big50 = boost::multiprecision::cpp_bin_float_50;
  using Big100 = boost::multiprecision::cpp_bin_float_100;
  if (rc.precision <= 53) return run_divisor_pipeline<double>(rc, net, sys, om);
  if (rc.precision <= 64) return run_divisor_pipeline<long double>(rc, net, sys, om);
  if (rc.precision <= 166) return run_divisor_pipeline<Big50>(rc, net, sys, om);
  return run_divisor_pipeline<Big100>(rc, net, sys, om);
}

std::string resolved_out(const std::string& flag_out, const std::string& cfg_out) {
  if (!flag_out.empty()) return flag_out;
  if (!cfg_out.empty()) return cfg_out;
  if (const char* env = std::getenv("POSITROID_KP_OUT"); env && *env) return env;
  return ".";
}

void render_grid(const TauMinorSum& tau, const GridSpec& g, std::vector<double>& xs,
                 std::vector<double>& ys, std::vector<std::vector<double>>& u) {
  xs.resize(static_cast<std::size_t>(g.nx));
  ys.resize(static_cast<std::size_t>(g.ny));
  for (int i = 0; i < g.nx; ++i)
    xs[static_cast<std::size_t>(i)] = g.x0 + (g.x1 - g.x0) * i / (g.nx - 1);
  for (int i = 0; i < g.ny; ++i)
    ys[static_cast<std::size_t>(i)] = g.y0 + (g.y1 - g.y0) * i / (g.ny - 1);
  u.assign(static_cast<std::size_t>(g.ny), std::vector<double>(static_cast<std::size_t>(g.nx)));

  unsigned nt = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex err_mutex;
  std::atomic<int> next_row{0};
  for (unsigned w = 0; w < nt; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int iy = next_row.fetch_add(1);
        if (iy >= g.ny) return;
        try {
          for (int ix = 0; ix < g.nx; ++ix) {
            Times<double> tm;
            tm.x = xs[static_cast<std::size_t>(ix)];
            tm.y = ys[static_cast<std::size_t>(iy)];
            tm.t = g.t;
            u[static_cast<std::size_t>(iy)][static_cast<std::size_t>(ix)] = u_value(tau, tm);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

void write_heatmap(const std::string& path, const std::vector<std::vector<double>>& u) {
  int ny = static_cast<int>(u.size());
  int nx = static_cast<int>(u.front().size());
  double peak = 0;
  for (const auto& row : u)
    for (double v : row) peak = std::max(peak, std::fabs(v));
  if (peak == 0) peak = 1;
  std::vector<std::uint8_t> px(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) * 3);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      std::uint8_t rgb[3];
      // top row = largest y
      diverging_color(u[static_cast<std::size_t>(ny - 1 - iy)][static_cast<std::size_t>(ix)] /
                          peak,
                      rgb);
      std::size_t off = (static_cast<std::size_t>(iy) * nx + ix) * 3;
      px[off] = rgb[0];
      px[off + 1] = rgb[1];
      px[off + 2] = rgb[2];
    }
  }
  write_png_rgb(path, nx, ny, px);
}

Json plane_curve_report(const std::vector<Rational>& kappa) {
  Json j;
  j["kind"] = "plane-curve";
  Gr24Lines lines = gr24_lines(kappa);
  j["c13"] = rational_json(lines.c13);
  j["lines"] = {{"gamma0", lines.gamma0.to_string()},
                {"gamma13", lines.gamma13.to_string()},
                {"gamma23", lines.gamma23.to_string()},
                {"sigma23", lines.sigma23.to_string()},
                {"sigma24", lines.sigma24.to_string()}};
  j["pi0"] = lines.pi0.to_string();
  j["alpha5"] = {rational_json(lines.lambda5), rational_json(lines.mu5)};
  try {
    BiPoly c0 = c0_example(kappa);
    Rational eps(1, 10);
    j["perturbation"] = {{"c0", c0.to_string()},
                         {"epsilon", rational_json(eps)},
                         {"pi", gr24_perturbed(lines, c0, eps).to_string()}};
  } catch (const Error&) {
    // no stock perturbation for this phase choice
  }

  Json xis = Json::array();
  for (long xv : {10L, 100L, 1000L}) {
    Gr24Xi gx = gr24_xi(kappa, Rational(xv));
    Json jx;
    jx["xi"] = xv;
    jx["c13"] = rational_json(gx.c13);
    jx["c23"] = rational_json(gx.c23);
    jx["lambda2"] = rational_json(gx.lambda2);
    jx["lambda3"] = rational_json(gx.lambda3);
    jx["lambda5"] = rational_json(gx.lambda5);
    jx["pi"] = gx.pi.to_string();
    xis.push_back(jx);
  }
  j["xi_family"] = xis;
  return j;
}

Json xi_divisor_report(const SolitonData& data, const Times<double>& t0) {
  auto forms = gr24_dressed_closed(data, t0);
  Json j;
  j["kind"] = "xi-divisor-comparison";
  j["gamma13_closed"] = format_real(forms.gamma13);
  j["gamma23_closed"] = format_real(forms.gamma23);
  Json rows = Json::array();
  for (double xv : {10.0, 100.0, 1000.0}) {
    auto xd = gr24_xi_divisor(data, t0, xv);
    Json r;
    r["xi"] = format_real(xv);
    r["zeta1"] = format_real(xd.zeta1);
    r["zeta2"] = format_real(xd.zeta2);
    r["gap1"] = format_real(std::fabs(xd.zeta1 - forms.gamma23));
    r["gap2"] = format_real(std::fabs(xd.zeta2 - forms.gamma13));
    rows.push_back(r);
  }
  j["values"] = rows;
  return j;
}

}  // namespace

RunConfig example_config(const std::string& which) {
  RunConfig rc;
  if (which == "gr24") {
    rc.tableau.diagram.k = 2;
    rc.tableau.diagram.n = 4;
    rc.tableau.diagram.partition = {2, 2};
    rc.tableau.diagram.fill = {{1, 1}, {1, 1}};
    rc.tableau.weights[{1, 3}] = Rational(1);
    rc.tableau.weights[{1, 4}] = Rational(1);
    rc.tableau.weights[{2, 3}] = Rational(1);
    rc.tableau.weights[{2, 4}] = Rational(1);
    rc.phases = {Rational(-3), Rational(-1), Rational(2), Rational(3)};
    rc.grid = GridSpec{-12, 12, -12, 12, 161, 161, 0};
  } else if (which == "gr492") {
    rc.tableau.diagram.k = 4;
    rc.tableau.diagram.n = 9;
    rc.tableau.diagram.partition = {5, 5, 4, 2};
    // drawing columns left to right carry labels 9 8 6 5 3
    rc.tableau.diagram.fill = {
        {1, 0, 1, 1, 0},  // row 1: labels 9, 6, 5 filled
        {0, 0, 0, 1, 1},  // row 2: labels 5, 3
        {1, 1, 1, 1},     // row 3: labels 9, 8, 6, 5
        {0, 1},           // row 4: label 8
    };
    const std::vector<std::pair<int, int>> boxes = {{1, 9}, {1, 6}, {1, 5}, {2, 5}, {2, 3},
                                                    {3, 9}, {3, 8}, {3, 6}, {3, 5}, {4, 8}};
    for (auto [r, j] : boxes) rc.tableau.weights[{r, j}] = Rational(1);
    for (int j = 1; j <= 9; ++j) rc.phases.push_back(Rational(2 * j - 10, 4));
    rc.grid = GridSpec{-14, 14, -14, 14, 121, 121, 0};
  } else {
    throw Error("unknown example: " + which);
  }
  rc.tableau.validate();
  return rc;
}

int cmd_matrix(const RunConfig& rc) {
  LeNetwork net = build_network(rc.tableau);
  GrassmannPoint gp = grassmann_point(net);
  gp.check_tnn();
  Json report = matrix_report(rc.tableau, gp);
  std::string dir = resolved_out("", rc.out_dir);
  write_text_file(join_path(dir, "matrix.json"), json_text(report));
  std::cout << "matrix.json written to " << dir << "\n";
  return 0;
}

int cmd_divisor(const RunConfig& rc) {
  LeNetwork net = modify_network(build_network(rc.tableau));
  BasisChain chain = basis_chain(rc.tableau);
  EdgeVectorSystem sys = edge_vectors(net, chain);
  OvalMap om = trace_ovals(net);
  CurveModel cm = build_curve(net);

  DivisorArtifacts art = run_divisor_dispatch(rc, net, sys, om);

  std::string dir = resolved_out("", rc.out_dir);
  write_text_file(join_path(dir, "curve.json"), json_text(curve_report(net, cm, om)));
  write_text_file(join_path(dir, "curve.svg"), svg_curve_schematic(net, cm, om));
  write_text_file(join_path(dir, "edge_vectors.json"),
                  json_text(edge_vectors_report(net, sys)));
  Json report = divisor_report(net, art.divisors, om, art.parity, art.kp, art.checks);
  write_text_file(join_path(dir, "divisor.json"), json_text(report));

  bool all = true;
  for (const auto& [name, pass] : art.checks) all = all && pass;
  std::cout << "divisor.json written to " << dir << (all ? "" : " (checks failed)") << "\n";
  return all ? 0 : 1;
}

int cmd_soliton(const RunConfig& rc) {
  SolitonData data = make_soliton_data(rc.tableau, rc.phases);
  TauMinorSum tau(data);
  std::vector<double> xs, ys;
  std::vector<std::vector<double>> u;
  render_grid(tau, rc.grid, xs, ys, u);
  std::string dir = resolved_out("", rc.out_dir);
  write_text_file(join_path(dir, "soliton.csv"), csv_grid(xs, ys, u));
  write_heatmap(join_path(dir, "soliton.png"), u);
  std::cout << "soliton.csv and soliton.png written to " << dir << "\n";
  return 0;
}

namespace {

struct VerifyOutcome {
  std::vector<std::pair<std::string, bool>> checks;
  bool pass() const {
    for (const auto& [name, ok] : checks)
      if (!ok) return false;
    return true;
  }
};

std::vector<Rational> random_phases(std::mt19937_64& rng, int n) {
  std::vector<int> vals;
  std::uniform_int_distribution<int> pick(-12, 12);
  while (static_cast<int>(vals.size()) < n) {
    int v = pick(rng);
    bool dup = false;
    for (int w : vals) dup = dup || w == v;
    if (!dup) vals.push_back(v);
  }
  std::sort(vals.begin(), vals.end());
  std::vector<Rational> out;
  for (int v : vals) out.push_back(Rational(v, 8));
  return out;
}

VerifyOutcome run_builtin_suite(std::uint64_t seed) {
  VerifyOutcome out;
  std::mt19937_64 rng(seed);

  bool oracle_ok = true;
  for (int i = 0; i < 10 && oracle_ok; ++i) {
    LeTableau t = random_le_tableau(rng, 3, 7);
    LeNetwork net = modify_network(build_network(t));
    BasisChain chain = basis_chain(t);
    EdgeVectorSystem sys = edge_vectors(net, chain);
    for (const NetEdge& e : net.edges)
      if (path_sum_vector(net, e.id) != sys.vec(e.id)) oracle_ok = false;
  }
  out.checks.emplace_back("edge_vector_oracle", oracle_ok);

  bool tnn_ok = true;
  for (int i = 0; i < 10 && tnn_ok; ++i) {
    LeTableau t = random_le_tableau(rng, 3, 6);
    try {
      grassmann_point(build_network(t)).check_tnn();
    } catch (const Error&) {
      tnn_ok = false;
    }
  }
  out.checks.emplace_back("boundary_measurement_tnn", tnn_ok);

  bool counts_ok = true;
  for (int i = 0; i < 10 && counts_ok; ++i) {
    LeTableau t = random_le_tableau(rng, 4, 8);
    LeNetwork net2 = modify_network(build_network(t));
    int d = t.diagram.dimension();
    CurveModel cm = build_curve(net2);
    if (cm.genus() != d) counts_ok = false;
    OvalMap om = trace_ovals(net2);
    if (om.n_ovals != d + 1) counts_ok = false;
  }
  out.checks.emplace_back("curve_counts", counts_ok);

  bool parity_ok = true, kp_ok = true;
  for (int i = 0; i < 10 && parity_ok && kp_ok; ++i) {
    LeTableau t = random_le_tableau(rng, 4, 7);
    SolitonData data = make_soliton_data(t, random_phases(rng, t.diagram.n));
    LeNetwork net2 = modify_network(build_network(t));
    BasisChain chain = basis_chain(t);
    EdgeVectorSystem sys = edge_vectors(net2, chain);
    OvalMap om = trace_ovals(net2);
    try {
      auto t0 = choose_t0<double>(data, net2, sys, true).t0;
      auto dc = assemble_divisors<double>(data, net2, sys, om, t0);
      if (!parity_check(om, dc).ok) parity_ok = false;
      if (!kp_oval_check(om, dc).ok) kp_ok = false;
    } catch (const T0SearchError&) {
      parity_ok = false;
    }
  }
  out.checks.emplace_back("parity", parity_ok);
  out.checks.emplace_back("kp_one_per_finite_oval", kp_ok);

  bool tau_ok = true;
  for (int i = 0; i < 5 && tau_ok; ++i) {
    LeTableau t = random_le_tableau(rng, 3, 6);
    SolitonData data = make_soliton_data(t, random_phases(rng, t.diagram.n));
    TauMinorSum tau(data);
    // long double: the determinant route loses digits to exponential
    // dominance that the positive minor sum never sees
    auto times = sample_times<long double>(seed + static_cast<std::uint64_t>(i), 10, 1.5);
    for (const auto& tm : times) {
      auto a = tau.eval(tm).value();
      auto b = tau_wronskian(data, tm);
      if (scaled_rel_diff(a, b) > 1e-9L) tau_ok = false;
      if (!(a.mant > 0)) tau_ok = false;
    }
  }
  out.checks.emplace_back("tau_cross_formula", tau_ok);

  return out;
}

VerifyOutcome run_config_suite(const RunConfig& rc) {
  VerifyOutcome out;
  LeNetwork net = modify_network(build_network(rc.tableau));
  BasisChain chain = basis_chain(rc.tableau);
  EdgeVectorSystem sys = edge_vectors(net, chain);
  OvalMap om = trace_ovals(net);

  bool oracle_ok = true;
  for (const NetEdge& e : net.edges)
    if (path_sum_vector(net, e.id) != sys.vec(e.id)) oracle_ok = false;
  out.checks.emplace_back("edge_vector_oracle", oracle_ok);

  DivisorArtifacts art = run_divisor_dispatch(rc, net, sys, om);
  for (const auto& c : art.checks) out.checks.push_back(c);

  SolitonData data = make_soliton_data(rc.tableau, rc.phases);
  TauMinorSum tau(data);
  bool tau_ok = true;
  // keep the exponent spread below ~20 so the determinant route retains
  // enough digits; the identity itself is scale free
  long double coeff = 1;
  for (long double kq : data.kappa_real<long double>())
    coeff = std::max(coeff, std::fabs(kq) + kq * kq + std::fabs(kq * kq * kq));
  long double span = std::min(1.5L, 10.0L / coeff);
  for (const auto& tm : sample_times<long double>(rc.seed, 20, static_cast<double>(span))) {
    auto a = tau.eval(tm).value();
    auto b = tau_wronskian(data, tm);
    if (scaled_rel_diff(a, b) > 1e-9L) tau_ok = false;
  }
  out.checks.emplace_back("tau_cross_formula", tau_ok);
  return out;
}

}  // namespace

int cmd_verify(const RunConfig* rc, std::uint64_t seed, const std::string& out_dir) {
  VerifyOutcome out = rc ? run_config_suite(*rc) : run_builtin_suite(seed);
  Json j;
  j["kind"] = "verify";
  j["seed"] = seed;
  Json checks = Json::object();
  for (const auto& [name, ok] : out.checks) checks[name] = ok;
  j["checks"] = checks;
  j["pass"] = out.pass();
  std::string dir = resolved_out("", rc ? rc->out_dir : out_dir);
  write_text_file(join_path(dir, "verify.json"), json_text(j));
  for (const auto& [name, ok] : out.checks)
    std::cout << (ok ? "pass  " : "FAIL  ") << name << "\n";
  return out.pass() ? 0 : 1;
}

int cmd_example(const std::string& which, const std::string& out_dir, int precision) {
  RunConfig rc = example_config(which);
  rc.precision = precision > 0 ? precision : 53;
  std::string dir = join_path(resolved_out(out_dir, ""), which);
  rc.out_dir = dir;

  write_text_file(join_path(dir, "config.json"), json_text(config_to_json(rc)));
  cmd_matrix(rc);
  int code = cmd_divisor(rc);
  cmd_soliton(rc);

  if (which == "gr24") {
    write_text_file(join_path(dir, "plane_curve.json"),
                    json_text(plane_curve_report(rc.phases)));
    SolitonData data = make_soliton_data(rc.tableau, rc.phases);
    LeNetwork net = modify_network(build_network(rc.tableau));
    BasisChain chain = basis_chain(rc.tableau);
    EdgeVectorSystem sys = edge_vectors(net, chain);
    Times<double> t0 = choose_t0<double>(data, net, sys, true).t0;
    write_text_file(join_path(dir, "xi_divisor.json"), json_text(xi_divisor_report(data, t0)));
  }
  std::cout << "example artifacts written to " << dir << "\n";
  return code;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"positroid cells, spectral curves and KP solitons"};
  app.require_subcommand(1);

  std::string config_path, out_dir, example_which;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int precision = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration file");
    sub->add_option("--seed", seed, "seed for randomized checks")->each([&](const std::string&) {
      seed_set = true;
    });
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--precision", precision, "working precision in bits (>= 53)");
  };

  CLI::App* matrix = app.add_subcommand("matrix", "boundary measurement matrix and minors");
  CLI::App* divisor = app.add_subcommand("divisor", "curve, divisors and parity report");
  CLI::App* soliton = app.add_subcommand("soliton", "KP solution on a grid");
  CLI::App* verify = app.add_subcommand("verify", "invariant suite");
  CLI::App* example = app.add_subcommand("example", "reproduce a worked example");
  for (CLI::App* sub : {matrix, divisor, soliton, verify, example}) add_common(sub);
  example->add_option("which", example_which, "gr24 or gr492")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    auto load = [&]() {
      if (config_path.empty()) throw Error("--config is required for this command");
      RunConfig rc = config_from_file(config_path);
      if (seed_set) rc.seed = seed;
      if (!out_dir.empty()) rc.out_dir = out_dir;
      if (precision > 0) rc.precision = precision;
      if (rc.precision < 53) throw Error("precision must be at least 53 bits");
      return rc;
    };

    if (matrix->parsed()) return cmd_matrix(load());
    if (divisor->parsed()) return cmd_divisor(load());
    if (soliton->parsed()) return cmd_soliton(load());
    if (verify->parsed()) {
      if (!config_path.empty()) {
        RunConfig rc = load();
        return cmd_verify(&rc, rc.seed, rc.out_dir);
      }
      return cmd_verify(nullptr, seed_set ? seed : RunConfig{}.seed, out_dir);
    }
    if (example->parsed()) return cmd_example(example_which, out_dir, precision);
  } catch (const LeRuleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const T0SearchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const RegularityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace positroid
