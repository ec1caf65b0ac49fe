#include "positroid/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace positroid {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json rational_json(const Rational& q) { return q.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  throw Error("expected a fraction string or an integer");
}

std::string vertex_name(const NetVertex& v) {
  switch (v.kind) {
    case VertexKind::BoundarySource:
    case VertexKind::BoundarySink:
      return "b" + std::to_string(v.j);
    case VertexKind::PivotWhite:
      return "V[" + std::to_string(v.r) + "]";
    case VertexKind::BoxWhite:
      return "V[" + std::to_string(v.r) + "," + std::to_string(v.j) + "]";
    case VertexKind::BoxBlack:
      return "V'[" + std::to_string(v.r) + "," + std::to_string(v.j) + "]";
    case VertexKind::DarbouxWhite:
      return "VD[" + std::to_string(v.r) + "]";
  }
  return "?";
}

Json tableau_to_json(const LeTableau& t) {
  Json j;
  j["k"] = t.diagram.k;
  j["n"] = t.diagram.n;
  j["partition"] = t.diagram.partition;
  j["fill"] = t.diagram.fill;
  Json w = Json::object();
  for (const auto& [key, val] : t.weights)
    w[std::to_string(key.first) + "," + std::to_string(key.second)] = rational_json(val);
  j["weights"] = w;
  return j;
}

LeTableau tableau_from_json(const Json& j) {
  LeTableau t;
  t.diagram.k = j.at("k").get<int>();
  t.diagram.n = j.at("n").get<int>();
  t.diagram.partition = j.at("partition").get<std::vector<int>>();
  t.diagram.fill = j.at("fill").get<std::vector<std::vector<int>>>();
  for (const auto& [key, val] : j.at("weights").items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw Error("weight key must look like \"r,j\"");
    int r = std::stoi(key.substr(0, comma));
    int col = std::stoi(key.substr(comma + 1));
    t.weights[{r, col}] = rational_from_json(val);
  }
  t.validate();
  return t;
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j) {
  std::size_t rows = j.size();
  std::size_t cols = rows ? j.at(0).size() : 0;
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rational_from_json(j.at(r).at(c));
  return m;
}

namespace {

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int j = start; j <= n; ++j) {
      cur.push_back(j);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace

Json matrix_report(const LeTableau& t, const GrassmannPoint& gp, std::size_t minor_cap) {
  Json j;
  j["kind"] = "boundary-measurement";
  j["k"] = t.diagram.k;
  j["n"] = t.diagram.n;
  j["pivots"] = gp.pivots;
  j["matrix"] = matrix_to_json(gp.matrix);

  auto subsets = k_subsets(t.diagram.n, t.diagram.k);
  if (subsets.size() <= minor_cap) {
    Json minors = Json::object();
    for (const auto& J : subsets) {
      std::string key;
      for (std::size_t i = 0; i < J.size(); ++i)
        key += (i ? "," : "") + std::to_string(J[i]);
      std::vector<std::size_t> cols;
      for (int c : J) cols.push_back(static_cast<std::size_t>(c - 1));
      minors[key] = rational_json(gp.matrix.maximal_minor(cols));
    }
    j["minors"] = minors;
  } else {
    j["minor_count"] = subsets.size();
  }
  return j;
}

Json edge_vectors_report(const LeNetwork& net, const EdgeVectorSystem& sys) {
  Json j;
  j["kind"] = "edge-vectors";
  j["n"] = net.n();
  j["k"] = net.k();
  Json edges = Json::array();
  for (const NetEdge& e : net.edges) {
    Json je;
    je["label"] = e.label();
    je["tail"] = vertex_name(net.vertex(e.tail));
    je["head"] = vertex_name(net.vertex(e.head));
    je["weight"] = rational_json(e.weight);
    Json vec = Json::array();
    for (const Rational& q : sys.vec(e.id)) vec.push_back(rational_json(q));
    je["vector"] = vec;
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j;
}

namespace {

Json marked_point_json(const LeNetwork& net, const CurveModel& cm, int point_index) {
  const CurveMarkedPoint& p = cm.points[static_cast<std::size_t>(point_index)];
  const CurveComponent& comp = cm.components[static_cast<std::size_t>(p.component)];
  Json j;
  j["component"] = p.component;
  if (comp.kind == ComponentKind::Gamma0) {
    j["at"] = p.slot == 0 ? "P0" : "kappa" + std::to_string(p.slot);
  } else {
    static const char* zc[] = {"0", "1", "inf"};
    j["at"] = (comp.kind == ComponentKind::White ? "P" : "Q") + std::to_string(p.slot);
    j["zeta"] = zc[p.zeta_class];
  }
  if (p.edge >= 0) j["edge"] = net.edge(p.edge).label();
  return j;
}

}  // namespace

Json curve_report(const LeNetwork& modified, const CurveModel& cm, const OvalMap& om) {
  Json j;
  j["kind"] = "curve";
  Json comps = Json::array();
  for (const CurveComponent& c : cm.components) {
    Json jc;
    switch (c.kind) {
      case ComponentKind::Gamma0:
        jc["kind"] = "gamma0";
        break;
      case ComponentKind::White:
        jc["kind"] = "white";
        break;
      case ComponentKind::Black:
        jc["kind"] = "black";
        break;
    }
    if (c.vertex >= 0) jc["vertex"] = vertex_name(modified.vertex(c.vertex));
    Json pts = Json::array();
    for (int pi : c.points) pts.push_back(marked_point_json(modified, cm, pi));
    jc["points"] = pts;
    comps.push_back(jc);
  }
  j["components"] = comps;

  Json dps = Json::array();
  for (const CurveDoublePoint& dp : cm.double_points) {
    Json jd;
    jd["edge"] = modified.edge(dp.edge).label();
    jd["a"] = marked_point_json(modified, cm, dp.point_a);
    jd["b"] = marked_point_json(modified, cm, dp.point_b);
    dps.push_back(jd);
  }
  j["double_points"] = dps;

  Json ug = Json::array();
  for (int pi : cm.unglued) ug.push_back(marked_point_json(modified, cm, pi));
  j["unglued"] = ug;

  j["counts"] = {{"components", cm.n_components()},
                 {"double_points", cm.n_double_points()},
                 {"genus", cm.genus()},
                 {"ovals", om.n_ovals}};
  return j;
}

Json config_to_json(const RunConfig& c) {
  Json j;
  j["tableau"] = tableau_to_json(c.tableau);
  Json ph = Json::array();
  for (const Rational& q : c.phases) ph.push_back(rational_json(q));
  j["phases"] = ph;
  if (c.t0x) j["t0"] = {{"x", format_real(*c.t0x)}, {"y", "0"}, {"t", "0"}};
  j["precision"] = c.precision;
  j["seed"] = c.seed;
  if (!c.out_dir.empty()) j["out"] = c.out_dir;
  j["grid"] = {{"x", Json::array({format_real(c.grid.x0), format_real(c.grid.x1)})},
               {"y", Json::array({format_real(c.grid.y0), format_real(c.grid.y1)})},
               {"nx", c.grid.nx},
               {"ny", c.grid.ny},
               {"t", format_real(c.grid.t)}};
  return j;
}

namespace {

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return std::stod(j.get<std::string>());
  throw Error("expected a number or a decimal string");
}

}  // namespace

RunConfig config_from_json(const Json& j) {
  RunConfig c;
  c.tableau = tableau_from_json(j.at("tableau"));
  for (const auto& q : j.at("phases")) c.phases.push_back(rational_from_json(q));
  for (std::size_t i = 1; i < c.phases.size(); ++i)
    if (!(c.phases[i - 1] < c.phases[i])) throw Error("phases must be strictly increasing");
  if (static_cast<int>(c.phases.size()) != c.tableau.diagram.n)
    throw Error("phase count must equal n");
  if (j.contains("t0")) c.t0x = real_from_json(j.at("t0").at("x"));
  if (j.contains("precision")) c.precision = j.at("precision").get<int>();
  if (c.precision < 53) throw Error("precision must be at least 53 bits");
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    if (g.contains("x")) {
      c.grid.x0 = real_from_json(g.at("x").at(0));
      c.grid.x1 = real_from_json(g.at("x").at(1));
    }
    if (g.contains("y")) {
      c.grid.y0 = real_from_json(g.at("y").at(0));
      c.grid.y1 = real_from_json(g.at("y").at(1));
    }
    if (g.contains("nx")) c.grid.nx = g.at("nx").get<int>();
    if (g.contains("ny")) c.grid.ny = g.at("ny").get<int>();
    if (g.contains("t")) c.grid.t = real_from_json(g.at("t"));
    if (c.grid.nx < 2 || c.grid.ny < 2) throw Error("grid resolution must be at least 2");
  }
  return c;
}

RunConfig config_from_file(const std::string& path) {
  return config_from_json(Json::parse(read_text_file(path)));
}

Json divisor_report(const LeNetwork& net, const DivisorConfig<double>& cfg, const OvalMap& om,
                    const ParityReport& par, const KPOvalReport& kp,
                    const std::vector<std::pair<std::string, bool>>& checks) {
  Json j;
  j["kind"] = "kp-divisor-report";
  j["t0"] = {{"x", format_real(cfg.t0.x)}, {"y", format_real(cfg.t0.y)},
             {"t", format_real(cfg.t0.t)}};

  auto point_json = [&](const DivisorPoint<double>& p) {
    Json jp;
    switch (p.kind) {
      case DivisorKind::Vacuum:
        jp["part"] = "vacuum";
        break;
      case DivisorKind::Dressed:
        jp["part"] = "dressed";
        break;
      case DivisorKind::Sato:
        jp["part"] = "sato";
        break;
    }
    jp["component"] = p.vertex >= 0 ? vertex_name(net.vertex(p.vertex)) : std::string("Gamma0");
    jp["zeta"] = format_real(p.zeta);
    if (p.kind == DivisorKind::Sato) {
      jp["interval"] = p.interval;
      if (p.boundary_hit) jp["boundary_hit"] = true;
    }
    jp["oval"] = p.oval;
    return jp;
  };

  Json pts = Json::array();
  for (const auto& p : cfg.kp) pts.push_back(point_json(p));
  j["points"] = pts;
  Json vac = Json::array();
  for (const auto& p : cfg.vacuum) vac.push_back(point_json(p));
  j["vacuum"] = vac;

  Json per_oval = Json::array();
  for (int s = 0; s < om.n_ovals; ++s) {
    per_oval.push_back({{"oval", s},
                        {"nu", par.nu[static_cast<std::size_t>(s)]},
                        {"mu", par.mu[static_cast<std::size_t>(s)]},
                        {"kp", kp.count[static_cast<std::size_t>(s)]}});
  }
  j["parity"] = {{"per_oval", per_oval}, {"violations", par.violations}};

  Json jc = Json::object();
  for (const auto& [name, pass] : checks) jc[name] = pass;
  j["checks"] = jc;
  return j;
}

std::string csv_grid(const std::vector<double>& xs, const std::vector<double>& ys,
                     const std::vector<std::vector<double>>& u) {
  std::string out = "x,y,u\n";
  for (std::size_t iy = 0; iy < ys.size(); ++iy)
    for (std::size_t ix = 0; ix < xs.size(); ++ix)
      out += format_real(xs[ix]) + "," + format_real(ys[iy]) + "," + format_real(u[iy][ix]) +
             "\n";
  return out;
}

std::string svg_curve_schematic(const LeNetwork& modified, const CurveModel& cm,
                                const OvalMap& om) {
  const int R = 34, GAP = 14, TOP = 120, G0Y = 260;
  int nc = cm.n_components();
  int per_row = std::max(1, (nc - 1 + 1) / 2);
  int width = std::max(640, per_row * (2 * R + GAP) + 2 * GAP);
  int height = 330;

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  s << "<style>text{font-family:monospace;font-size:11px}</style>\n";

  // positions: Gamma0 as a horizontal line at the bottom, vertex components
  // as circles in up to two rows above it
  std::vector<std::pair<int, int>> center(static_cast<std::size_t>(nc), {0, 0});
  int idx = 0;
  for (int ci = 1; ci < nc; ++ci) {
    int row = idx / per_row, col = idx % per_row;
    center[static_cast<std::size_t>(ci)] = {GAP + R + col * (2 * R + GAP),
                                            TOP - 60 + row * (2 * R + GAP)};
    ++idx;
  }

  auto point_xy = [&](int pi) {
    const CurveMarkedPoint& p = cm.points[static_cast<std::size_t>(pi)];
    if (p.component == 0) {
      int n = cm.n;
      int x = p.slot == 0 ? width - GAP
                          : GAP + (p.slot - 1) * (width - 2 * GAP) / std::max(1, n);
      return std::pair<int, int>{x, G0Y};
    }
    auto [cx, cy] = center[static_cast<std::size_t>(p.component)];
    int sl = p.slot % 3;
    int dx = sl == 0 ? 0 : (sl == 1 ? -R : R);
    int dy = sl == 0 ? -R : (sl == 1 ? R / 2 : R / 2);
    return std::pair<int, int>{cx + dx, cy + dy};
  };

  s << "<line x1=\"" << GAP << "\" y1=\"" << G0Y << "\" x2=\"" << width - GAP << "\" y2=\""
    << G0Y << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << GAP << "\" y=\"" << G0Y + 24 << "\">Gamma0</text>\n";
  for (int j = 1; j <= cm.n; ++j) {
    int x = GAP + (j - 1) * (width - 2 * GAP) / std::max(1, cm.n);
    s << "<circle cx=\"" << x << "\" cy=\"" << G0Y << "\" r=\"3\" fill=\"black\"/>\n";
    s << "<text x=\"" << x - 8 << "\" y=\"" << G0Y + 14 << "\">k" << j << "</text>\n";
  }

  for (int ci = 1; ci < nc; ++ci) {
    const CurveComponent& c = cm.components[static_cast<std::size_t>(ci)];
    auto [cx, cy] = center[static_cast<std::size_t>(ci)];
    bool white = c.kind == ComponentKind::White;
    s << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << R << "\" fill=\""
      << (white ? "none" : "#ddd") << "\" stroke=\"black\"/>\n";
    if (c.vertex >= 0)
      s << "<text x=\"" << cx - R + 4 << "\" y=\"" << cy - R - 4 << "\">"
        << vertex_name(modified.vertex(c.vertex)) << "</text>\n";
  }

  for (const CurveDoublePoint& dp : cm.double_points) {
    auto [x1, y1] = point_xy(dp.point_a);
    auto [x2, y2] = point_xy(dp.point_b);
    s << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
      << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (int pi : cm.unglued) {
    auto [x, y] = point_xy(pi);
    s << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"none\" stroke=\"red\"/>\n";
  }

  s << "<text x=\"" << GAP << "\" y=\"" << height - 10 << "\">components "
    << cm.n_components() << ", double points " << cm.n_double_points() << ", genus "
    << cm.genus() << ", ovals " << om.n_ovals << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error("cannot open for writing: " + path);
  f << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace positroid
