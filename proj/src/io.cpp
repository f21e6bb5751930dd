#include "covariogram/io.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "covariogram/errors.hpp"

namespace cov::io {

namespace {

Vec2 vec_from_json(const json& j)
{
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw PreconditionError("expected a point [x, y], got " + j.dump());
  }
  return Vec2(j[0].get<double>(), j[1].get<double>());
}

std::vector<double> numbers(const json& j, const char* key)
{
  if (!j.contains(key)) return {};
  if (!j[key].is_array()) throw PreconditionError(std::string("\"") + key + "\" must be an array");
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw PreconditionError(std::string("\"") + key + "\" holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

double number(const json& j, const char* key)
{
  if (!j.contains(key) || !j[key].is_number()) {
    throw PreconditionError(std::string("body needs a numeric \"") + key + "\"");
  }
  return j[key].get<double>();
}

std::ifstream open_input(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  return in;
}

template <class T>
json optional_json(const std::optional<T>& v)
{
  return v ? json(*v) : json(nullptr);
}

}  // namespace

ConvexBody body_from_json(const json& j)
{
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw PreconditionError("body JSON needs a \"type\" field");
  }
  const std::string type = j["type"].get<std::string>();
  const Vec2 center = j.contains("center") ? vec_from_json(j["center"]) : Vec2::Zero();
  if (type == "polygon") {
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw PreconditionError("polygon needs \"vertices\"");
    std::vector<Vec2> v;
    for (const auto& p : j["vertices"]) v.push_back(vec_from_json(p));
    return ConvexBody(ConvexPolygon(std::move(v)));
  }
  if (type == "support") {
    std::vector<double> a = numbers(j, "cos");
    std::vector<double> b = numbers(j, "sin");
    const std::size_t n = std::max(a.size(), b.size());
    a.resize(n, 0.0);
    b.resize(n, 0.0);
    const SupportBody s(TrigSeriesd(number(j, "a0"), a, b));
    return ConvexBody(center.isZero(0.0) ? s : s.translated(center));
  }
  if (type == "ellipse") return ConvexBody(SupportBody::ellipse(number(j, "a"), number(j, "b"), center));
  if (type == "disk") return ConvexBody(SupportBody::disk(number(j, "r"), center));
  throw PreconditionError("unknown body type \"" + type + "\"");
}

json body_to_json(const ConvexBody& k)
{
  if (const auto* p = std::get_if<ConvexPolygon>(&k)) {
    json v = json::array();
    for (const auto& q : p->vertices()) v.push_back(to_json(q));
    return {{"type", "polygon"}, {"vertices", v}};
  }
  const auto& h = std::get<SupportBody>(k).support();
  const std::vector<double> a(h.cos_coeffs().data(), h.cos_coeffs().data() + h.degree());
  const std::vector<double> b(h.sin_coeffs().data(), h.sin_coeffs().data() + h.degree());
  return {{"type", "support"}, {"a0", h.a0()}, {"cos", a}, {"sin", b}};
}

ConvexBody read_body(const std::string& path)
{
  std::ifstream in = open_input(path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw PreconditionError(path + ": " + e.what());
  }
  return body_from_json(j);
}

void write_grid_csv(std::ostream& os, const CovariogramGrid& g)
{
  os << "x,y,g\n" << std::setprecision(17);
  const int n = g.size();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vec2 p = g.node(i, j);
      os << p(0) << ',' << p(1) << ',' << g.values(i, j) << '\n';
    }
  }
}

CovariogramGrid read_grid_csv(std::istream& is)
{
  std::string line;
  if (!std::getline(is, line)) throw PreconditionError("grid CSV is empty");
  if (line.rfind("x,y,g", 0) != 0) throw PreconditionError("grid CSV must start with the header x,y,g");
  std::vector<std::array<double, 3>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::array<double, 3> r{};
    char c1 = 0;
    char c2 = 0;
    std::istringstream ss(line);
    if (!(ss >> r[0] >> c1 >> r[1] >> c2 >> r[2]) || c1 != ',' || c2 != ',') {
      throw PreconditionError("malformed grid CSV row: " + line);
    }
    rows.push_back(r);
  }
  const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rows.size()))));
  if (n < 32 || static_cast<std::size_t>(n) * n != rows.size()) {
    throw PreconditionError("grid CSV must hold n x n rows with n >= 32");
  }
  double xmin = rows[0][0];
  double ymin = rows[0][1];
  double xmax = xmin;
  for (const auto& r : rows) {
    xmin = std::min(xmin, r[0]);
    ymin = std::min(ymin, r[1]);
    xmax = std::max(xmax, r[0]);
  }
  CovariogramGrid g;
  g.origin = Vec2(xmin, ymin);
  g.spacing = (xmax - xmin) / (n - 1);
  if (!(g.spacing > 0.0)) throw PreconditionError("grid CSV has zero spacing");
  g.values = Eigen::MatrixXd::Constant(n, n, std::numeric_limits<double>::quiet_NaN());
  for (const auto& r : rows) {
    const double fi = (r[0] - xmin) / g.spacing;
    const double fj = (r[1] - ymin) / g.spacing;
    const long i = std::lround(fi);
    const long j = std::lround(fj);
    if (std::abs(fi - i) > 1e-6 || std::abs(fj - j) > 1e-6 || i < 0 || j < 0 || i >= n || j >= n) {
      throw PreconditionError("grid CSV nodes are not on a uniform square lattice");
    }
    g.values(i, j) = r[2];
  }
  if (!g.values.allFinite()) throw PreconditionError("grid CSV misses nodes");
  return g;
}

CovariogramGrid read_grid(const std::string& path)
{
  std::ifstream in = open_input(path);
  CovariogramGrid g = read_grid_csv(in);
  g.body_id = path;
  return g;
}

void write_polyline_csv(std::ostream& os, const std::vector<Vec2>& pts)
{
  os << "t,x,y\n" << std::setprecision(17);
  double t = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) t += (pts[i] - pts[i - 1]).norm();
    os << t << ',' << pts[i](0) << ',' << pts[i](1) << '\n';
  }
}

SymmetricHexagon hexagon_from_json(const json& j)
{
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].size() != 6) {
    throw PreconditionError("hexagon JSON needs six \"vertices\"");
  }
  std::array<Vec2, 6> h;
  for (std::size_t i = 0; i < 6; ++i) h[i] = vec_from_json(j["vertices"][i]);
  return SymmetricHexagon(h);
}

json to_json(const Vec2& v) { return json::array({v(0), v(1)}); }

json to_json(const Mat2& m) { return json::array({json::array({m(0, 0), m(0, 1)}), json::array({m(1, 0), m(1, 1)})}); }

json to_json(const HessianReport& r)
{
  return {{"x", to_json(r.x)},
          {"G", to_json(r.G)},
          {"detG", r.detG},
          {"residual_fd", r.residual_fd},
          {"residual_product", r.residual_product},
          {"residual_shifted", r.residual_shifted},
          {"residual_orthogonality", r.residual_orthogonality},
          {"form_discrepancy", r.form_discrepancy},
          {"residual_rgr", r.residual_rgr},
          {"residual_projection", r.residual_projection},
          {"min_normal_turn", r.min_normal_turn}};
}

json to_json(const SymmetryVerdict& v)
{
  return {{"is_symmetric", v.is_symmetric},
          {"max_residual", v.max_residual},
          {"witness", to_json(v.witness)},
          {"samples", v.samples},
          {"tol", v.tol},
          {"seed", v.seed},
          {"reflection_distance", optional_json(v.reflection_distance)},
          {"geometric_symmetric", optional_json(v.geometric_symmetric)},
          {"diagonal_mismatches", optional_json(v.diagonal_mismatches)}};
}

json to_json(const HexagonTestReport& r)
{
  json xs = json::array();
  for (const auto& x : r.x) xs.push_back(to_json(x));
  return {{"passed", r.passed},
          {"shifts", xs},
          {"residuals", r.residuals},
          {"one_plus_detG", r.one_plus_detG},
          {"product", r.product},
          {"tol", r.tol}};
}

json to_json(const Conjugate& c)
{
  return {{"x", to_json(c.x)},
          {"y", to_json(c.y)},
          {"diagonal", to_json(c.diagonal)},
          {"residual", c.residual},
          {"one_plus_detG", c.one_plus_detG},
          {"predicted_region", c.predicted_region},
          {"hexagon_passed", c.hexagon_passed},
          {"candidates", c.candidates},
          {"y_geometric", c.y_geometric ? to_json(*c.y_geometric) : json(nullptr)},
          {"strategy_gap", optional_json(c.strategy_gap)}};
}

json to_json(const NormalPair& np)
{
  return {{"x", to_json(np.x)},
          {"v1", to_json(np.v1)},
          {"v3", to_json(np.v3)},
          {"eigenvalues", np.eigenvalues},
          {"eigen_gap", np.eigen_gap},
          {"y", to_json(np.y)},
          {"conjugate", to_json(np.conjugate)}};
}

json to_json(const ArcTrace& tr)
{
  return {{"x0", to_json(tr.x0)},
          {"status", to_string(tr.status)},
          {"reason", tr.reason},
          {"points", tr.curve.size()},
          {"length", tr.length},
          {"step", tr.step},
          {"n_radius", tr.n_radius},
          {"held_normal", to_json(tr.held_normal)},
          {"other_normal", to_json(tr.other_normal)},
          {"max_constraint_residual", tr.max_constraint_residual},
          {"swap_violation", tr.swap_violation}};
}

json to_json(const Comparison& c)
{
  return {{"hausdorff", c.hausdorff}, {"reflected", c.reflected}, {"translation", to_json(c.translation)}};
}

}  // namespace cov::io
