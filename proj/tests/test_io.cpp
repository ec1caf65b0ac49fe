#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "positroid/cli.hpp"
#include "positroid/edge_vectors.hpp"
#include "positroid/io.hpp"
#include "positroid/png.hpp"
#include "support.hpp"

using namespace positroid;
using namespace testsup;

namespace {

std::string temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("positroid-io-" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p.string();
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int c = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++c;
  return c;
}

int run(std::vector<std::string> args) {
  std::vector<const char*> argv = {"positroid-kp"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

bool exists(const std::string& dir, const std::string& name) {
  return std::filesystem::exists(std::filesystem::path(dir) / name);
}

std::string slurp(const std::string& dir, const std::string& name) {
  return read_text_file((std::filesystem::path(dir) / name).string());
}

}  // namespace

TEST_CASE("real and rational text forms") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(-0.5) == "-0.5");
  CHECK(format_real(1e22) == "1e+22");

  CHECK(rational_json(rat(-41, 24)) == Json("-41/24"));
  CHECK(rational_from_json(Json("-41/24")) == rat(-41, 24));
  CHECK(rational_from_json(Json(7)) == rat(7));
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), Error);
}

TEST_CASE("tableau json round trip") {
  LeTableau t = caseb_tableau();
  Json j = tableau_to_json(t);
  LeTableau back = tableau_from_json(j);
  CHECK(back.diagram.k == t.diagram.k);
  CHECK(back.diagram.n == t.diagram.n);
  CHECK(back.diagram.partition == t.diagram.partition);
  CHECK(back.diagram.fill == t.diagram.fill);
  CHECK(back.weights == t.weights);
  CHECK(json_text(tableau_to_json(back)) == json_text(j));
}

TEST_CASE("config json round trip") {
  RunConfig c = example_config("gr24");
  c.t0x = 0.25;
  c.precision = 64;
  c.seed = 12345;
  c.out_dir = "artifacts";
  c.grid = GridSpec{-6, 6, -4, 4, 33, 17, 0.5};

  Json j = config_to_json(c);
  RunConfig back = config_from_json(j);
  CHECK(back.tableau.weights == c.tableau.weights);
  CHECK(back.phases == c.phases);
  REQUIRE(back.t0x.has_value());
  CHECK(*back.t0x == 0.25);
  CHECK(back.precision == 64);
  CHECK(back.seed == 12345);
  CHECK(back.out_dir == "artifacts");
  CHECK(back.grid.x0 == -6);
  CHECK(back.grid.x1 == 6);
  CHECK(back.grid.nx == 33);
  CHECK(back.grid.ny == 17);
  CHECK(back.grid.t == 0.5);
  CHECK(json_text(config_to_json(back)) == json_text(j));

  std::string dir = temp_dir("config");
  write_text_file(dir + "/c.json", json_text(j));
  RunConfig from_file = config_from_file(dir + "/c.json");
  CHECK(from_file.seed == 12345);
  CHECK(from_file.grid.ny == 17);

  Json bad = j;
  bad["phases"] = Json::array({"1", "1", "2", "3"});
  CHECK_THROWS_AS(config_from_json(bad), Error);
  bad = j;
  bad["phases"] = Json::array({"1", "2"});
  CHECK_THROWS_AS(config_from_json(bad), Error);
  bad = j;
  bad["precision"] = 32;
  CHECK_THROWS_AS(config_from_json(bad), Error);
  bad = j;
  bad["grid"]["nx"] = 1;
  CHECK_THROWS_AS(config_from_json(bad), Error);
}

TEST_CASE("matrix json round trip") {
  std::mt19937_64 rng(701);
  RatMatrix m = gr24_golden_matrix(gr24_random_weights(rng));
  RatMatrix back = matrix_from_json(matrix_to_json(m));
  REQUIRE(back.rows() == m.rows());
  REQUIRE(back.cols() == m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) CHECK(back.at(r, c) == m.at(r, c));
}

TEST_CASE("matrix report lists all minors of a small cell") {
  LeTableau t = gr24_tableau(gr24_unit_weights());
  GrassmannPoint gp = grassmann_point(build_network(t));
  Json j = matrix_report(t, gp);
  CHECK(j["kind"] == "boundary-measurement");
  CHECK(j["pivots"] == Json::array({1, 2}));
  REQUIRE(j.contains("minors"));
  CHECK(j["minors"].size() == 6);
  CHECK(j["minors"]["1,2"] == Json("1"));
  CHECK(j["minors"]["2,4"] == Json("2"));
  CHECK(j["minors"]["3,4"] == Json("1"));

  Json capped = matrix_report(t, gp, 3);
  CHECK(!capped.contains("minors"));
  CHECK(capped["minor_count"] == 6);
}

TEST_CASE("edge vectors report covers the modified network") {
  LeTableau t = gr24_tableau(gr24_unit_weights());
  LeNetwork net = modify_network(build_network(t));
  EdgeVectorSystem sys = edge_vectors(net, basis_chain(t));
  Json j = edge_vectors_report(net, sys);
  CHECK(j["kind"] == "edge-vectors");
  CHECK(j["edges"].size() == 16);  // 3d + 2k for the 2x2 cell
  for (const auto& e : j["edges"]) {
    CHECK(e.contains("label"));
    CHECK(e["vector"].size() == 4);
  }
}

TEST_CASE("vertex names cover every kind") {
  LeTableau t = gr24_tableau(gr24_unit_weights());
  LeNetwork net = modify_network(build_network(t));
  std::set<std::string> names;
  for (const NetVertex& v : net.vertices) names.insert(vertex_name(v));
  CHECK(names.count("b1"));
  CHECK(names.count("V[1]"));
  CHECK(names.count("V[1,3]"));
  CHECK(names.count("V'[1,3]"));
  CHECK(names.count("VD[1]"));
}

TEST_CASE("csv grid exact text") {
  std::string csv = csv_grid({0.0, 0.5}, {1.0}, {{2.0, 3.0}});
  CHECK(csv == "x,y,u\n0,1,2\n0.5,1,3\n");
}

TEST_CASE("png container layout") {
  std::vector<std::uint8_t> px(12, 200);
  auto bytes = encode_png_rgb(2, 2, px);
  REQUIRE(bytes.size() == 82);
  const std::uint8_t sig[8] = {137, 'P', 'N', 'G', '\r', '\n', 26, '\n'};
  for (int i = 0; i < 8; ++i) CHECK(bytes[static_cast<std::size_t>(i)] == sig[i]);
  CHECK(std::string(bytes.begin() + 12, bytes.begin() + 16) == "IHDR");
  // big endian 2 x 2
  CHECK(bytes[19] == 2);
  CHECK(bytes[23] == 2);
  const std::uint8_t tail[12] = {0, 0, 0, 0, 'I', 'E', 'N', 'D', 0xae, 0x42, 0x60, 0x82};
  for (int i = 0; i < 12; ++i) CHECK(bytes[bytes.size() - 12 + static_cast<std::size_t>(i)] ==
                                     tail[i]);

  CHECK_THROWS_AS(encode_png_rgb(0, 2, px), Error);
  CHECK_THROWS_AS(encode_png_rgb(2, 2, std::vector<std::uint8_t>(11)), Error);

  std::uint8_t rgb[3];
  diverging_color(0.0, rgb);
  CHECK(rgb[0] == 255);
  CHECK(rgb[1] == 255);
  CHECK(rgb[2] == 255);
  diverging_color(-1.0, rgb);
  CHECK(rgb[2] > rgb[0]);
  diverging_color(1.0, rgb);
  CHECK(rgb[0] > rgb[2]);
}

TEST_CASE("svg schematic for the small example") {
  LeTableau t = gr24_tableau(gr24_unit_weights());
  LeNetwork net = modify_network(build_network(t));
  CurveModel cm = build_curve(net);
  OvalMap om = trace_ovals(net);
  std::string svg = svg_curve_schematic(net, cm, om);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>\n") != std::string::npos);
  CHECK(svg.find("Gamma0") != std::string::npos);
  CHECK(svg.find(">k4<") != std::string::npos);
  CHECK(svg.find("components 11, double points 14, genus 4, ovals 5") != std::string::npos);
  // 4 boundary dots, 10 component circles, 3 unglued markers
  CHECK(count_occurrences(svg, "<circle") == 17);
  // the boundary line plus one chord per double point
  CHECK(count_occurrences(svg, "<line") == 15);
}

TEST_CASE("curve and divisor reports are well formed") {
  LeTableau t = gr24_tableau(gr24_unit_weights());
  SolitonData data = make_soliton_data(t, {rat(-3), rat(-1), rat(2), rat(3)});
  LeNetwork net = modify_network(build_network(t));
  EdgeVectorSystem sys = edge_vectors(net, basis_chain(t));
  OvalMap om = trace_ovals(net);
  CurveModel cm = build_curve(net);

  Json jc = curve_report(net, cm, om);
  CHECK(jc["kind"] == "curve");
  CHECK(jc["components"].size() == 11);
  CHECK(jc["double_points"].size() == 14);
  CHECK(jc["unglued"].size() == 3);
  CHECK(jc["counts"]["genus"] == 4);
  CHECK(jc["counts"]["ovals"] == 5);

  auto t0 = choose_t0<double>(data, net, sys, true).t0;
  auto dc = assemble_divisors<double>(data, net, sys, om, t0);
  Json jd = divisor_report(net, dc, om, parity_check(om, dc), kp_oval_check(om, dc),
                           {{"smoke", true}});
  CHECK(jd["kind"] == "kp-divisor-report");
  CHECK(jd["points"].size() == 4);
  CHECK(jd["vacuum"].size() == 4);
  CHECK(jd["parity"]["per_oval"].size() == 5);
  CHECK(jd["parity"]["violations"] == 0);
  CHECK(jd["checks"]["smoke"] == true);
  for (const auto& p : jd["vacuum"]) CHECK(p["part"] == "vacuum");
}

TEST_CASE("cli runs write artifacts deterministically") {
  RunConfig c = example_config("gr24");
  c.grid = GridSpec{-6, 6, -6, 6, 9, 7, 0.5};
  std::string cfg_dir = temp_dir("cli-cfg");
  std::string cfg = cfg_dir + "/run.json";
  write_text_file(cfg, json_text(config_to_json(c)));

  std::string d1 = temp_dir("cli-run1");
  std::string d2 = temp_dir("cli-run2");
  for (const std::string& d : {d1, d2}) {
    CHECK(run({"matrix", "--config", cfg, "--out", d}) == 0);
    CHECK(run({"divisor", "--config", cfg, "--out", d}) == 0);
    CHECK(run({"soliton", "--config", cfg, "--out", d}) == 0);
  }
  for (const char* name : {"matrix.json", "curve.json", "curve.svg", "edge_vectors.json",
                           "divisor.json", "soliton.csv", "soliton.png"}) {
    CHECK(exists(d1, name));
    CHECK(slurp(d1, name) == slurp(d2, name));
  }

  CHECK(run({"verify", "--config", cfg, "--out", d1}) == 0);
  CHECK(exists(d1, "verify.json"));
  CHECK(slurp(d1, "verify.json").find("\"pass\": true") != std::string::npos);

  // wider float type on the same pipeline
  std::string d3 = temp_dir("cli-run3");
  CHECK(run({"divisor", "--config", cfg, "--out", d3, "--precision", "64"}) == 0);
  CHECK(exists(d3, "divisor.json"));

  // built-in randomized suite, no config
  std::string d4 = temp_dir("cli-verify");
  CHECK(run({"verify", "--seed", "7", "--out", d4}) == 0);
  CHECK(slurp(d4, "verify.json").find("\"pass\": true") != std::string::npos);

  // output directory from the environment when neither flag nor config names one
  std::string d5 = temp_dir("cli-env");
  ::setenv("POSITROID_KP_OUT", d5.c_str(), 1);
  CHECK(run({"matrix", "--config", cfg}) == 0);
  ::unsetenv("POSITROID_KP_OUT");
  CHECK(exists(d5, "matrix.json"));
}

TEST_CASE("cli error codes") {
  std::string dir = temp_dir("cli-err");

  CHECK(run({"matrix", "--config", dir + "/absent.json", "--out", dir}) == 1);

  Json bad;
  bad["tableau"] = {{"k", 2},
                    {"n", 4},
                    {"partition", {2, 2}},
                    {"fill", {{1, 1}, {1, 0}}},
                    {"weights", {{"1,4", "1"}, {"1,3", "1"}, {"2,4", "1"}}}};
  bad["phases"] = {"-3", "-1", "2", "3"};
  write_text_file(dir + "/le.json", json_text(bad));
  CHECK(run({"matrix", "--config", dir + "/le.json", "--out", dir}) == 2);

  Json neg = config_to_json(example_config("gr24"));
  neg["tableau"]["weights"]["1,3"] = "-1";
  write_text_file(dir + "/neg.json", json_text(neg));
  CHECK(run({"matrix", "--config", dir + "/neg.json", "--out", dir}) == 2);

  Json good = config_to_json(example_config("gr24"));
  write_text_file(dir + "/good.json", json_text(good));
  CHECK(run({"example", "nope", "--out", dir}) == 1);
  CHECK(run({"matrix", "--config", dir + "/good.json", "--precision", "32", "--out", dir}) == 1);
  CHECK(run({}) != 0);
}

TEST_CASE("example command reproduces the worked artifacts") {
  std::string out = temp_dir("examples");
  CHECK(run({"example", "gr24", "--out", out}) == 0);
  std::string dir = out + "/gr24";
  for (const char* name : {"config.json", "matrix.json", "curve.json", "curve.svg",
                           "edge_vectors.json", "divisor.json", "soliton.csv", "soliton.png",
                           "plane_curve.json", "xi_divisor.json"}) {
    CHECK(exists(dir, name));
  }
  CHECK(slurp(dir, "plane_curve.json").find("\"c13\": \"-41/24\"") != std::string::npos);
  CHECK(slurp(dir, "xi_divisor.json").find("xi-divisor-comparison") != std::string::npos);
  CHECK(slurp(dir, "matrix.json").find("\"2,4\": \"2\"") != std::string::npos);

  CHECK(run({"example", "gr492", "--out", out}) == 0);
  CHECK(exists(out + "/gr492", "divisor.json"));
  CHECK(exists(out + "/gr492", "soliton.png"));
  CHECK(!exists(out + "/gr492", "plane_curve.json"));
}
