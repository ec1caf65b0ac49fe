#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "positroid/curve.hpp"
#include "positroid/divisor.hpp"
#include "positroid/le.hpp"
#include "positroid/matrix.hpp"
#include "positroid/network.hpp"
#include "positroid/soliton.hpp"

namespace positroid {

using Json = nlohmann::ordered_json;

// floats as decimal strings with 17 significant digits, fractions as "p/q";
// keeps artifacts byte-identical across runs
std::string format_real(double v);
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

std::string vertex_name(const NetVertex& v);

Json tableau_to_json(const LeTableau& t);
LeTableau tableau_from_json(const Json& j);

Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

// RREF matrix plus maximal minors (all of them when their number is small,
// a summary otherwise)
Json matrix_report(const LeTableau& t, const GrassmannPoint& gp, std::size_t minor_cap = 512);

Json edge_vectors_report(const LeNetwork& net, const EdgeVectorSystem& sys);

Json curve_report(const LeNetwork& modified, const CurveModel& cm, const OvalMap& om);

struct GridSpec {
  double x0 = -10, x1 = 10;
  double y0 = -10, y1 = 10;
  int nx = 121, ny = 121;
  double t = 0;
};

struct RunConfig {
  LeTableau tableau;
  std::vector<Rational> phases;
  std::optional<double> t0x;  // override for the base time search
  int precision = 53;
  std::uint64_t seed = 75619;
  std::string out_dir;
  GridSpec grid;
};

Json config_to_json(const RunConfig& c);
RunConfig config_from_json(const Json& j);
RunConfig config_from_file(const std::string& path);

Json divisor_report(const LeNetwork& net, const DivisorConfig<double>& cfg, const OvalMap& om,
                    const ParityReport& par, const KPOvalReport& kp,
                    const std::vector<std::pair<std::string, bool>>& checks);

std::string csv_grid(const std::vector<double>& xs, const std::vector<double>& ys,
                     const std::vector<std::vector<double>>& u);

// schematic of the glued components: circles in a row, chords for gluings
std::string svg_curve_schematic(const LeNetwork& modified, const CurveModel& cm,
                                const OvalMap& om);

std::string json_text(const Json& j);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace positroid
