#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covariogram/body.hpp"
#include "covariogram/covariogram.hpp"
#include "covariogram/errors.hpp"
#include "covariogram/identities.hpp"
#include "covariogram/io.hpp"
#include "covariogram/oracle.hpp"
#include "covariogram/reconstruct.hpp"
#include "covariogram/sampling.hpp"
#include "covariogram/symmetry.hpp"

namespace {

using namespace cov;
using io::json;

Vec2 parse_point(const std::string& s)
{
  std::istringstream ss(s);
  double a = 0.0;
  double b = 0.0;
  char comma = 0;
  if (!(ss >> a >> comma >> b) || comma != ',' || !(ss >> std::ws).eof()) {
    throw PreconditionError("expected a point \"x,y\", got \"" + s + "\"");
  }
  return Vec2(a, b);
}

std::ofstream open_output(const std::string& path)
{
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  return out;
}

// --body or --grid, exactly one
struct OracleSource {
  std::string body;
  std::string grid;

  void add(CLI::App* cmd)
  {
    auto* b = cmd->add_option("--body", body, "body JSON");
    auto* g = cmd->add_option("--grid", grid, "covariogram grid CSV");
    b->excludes(g);
    g->excludes(b);
  }

  std::unique_ptr<CovariogramOracle> make() const
  {
    if (!body.empty()) return std::make_unique<AnalyticOracle>(io::read_body(body));
    if (!grid.empty()) return std::make_unique<GridOracle>(io::read_grid(grid));
    throw PreconditionError("one of --body or --grid is required");
  }
};

void print(const json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"covariogram toolkit"};
  app.require_subcommand(1);

  std::string body_path;
  std::string out_path;
  std::string point;
  std::uint64_t seed = 0;
  double tol = 0.0;

  auto* eval = app.add_subcommand("cov-eval", "covariogram value at a point");
  eval->add_option("--body", body_path, "body JSON")->required();
  eval->add_option("--x", point, "shift \"x,y\"")->required();

  int grid_n = 512;
  auto* grid = app.add_subcommand("cov-grid", "sample the covariogram on an n x n grid");
  grid->add_option("--body", body_path, "body JSON")->required();
  grid->add_option("--n", grid_n, "grid size")->check(CLI::Range(4, 1 << 14));
  grid->add_option("--out", out_path, "output CSV")->required();

  std::string dir = "1,0";
  int chord_points = 201;
  auto* chord = app.add_subcommand("chordlen", "chord-length distribution in one direction");
  chord->add_option("--body", body_path, "body JSON")->required();
  chord->add_option("--dir", dir, "direction \"x,y\"");
  chord->add_option("--points", chord_points, "number of r values")->check(CLI::Range(2, 1 << 20));
  chord->add_option("--out", out_path, "output CSV (r,F)")->required();

  int id_samples = 200;
  auto* ident = app.add_subcommand("identities", "Hessian identity residuals as JSON lines");
  ident->add_option("--body", body_path, "body JSON (support body)")->required();
  ident->add_option("--samples", id_samples, "sample count")->check(CLI::PositiveNumber);
  ident->add_option("--seed", seed, "sampling seed");

  OracleSource sym_src;
  int sym_samples = 128;
  auto* sym = app.add_subcommand("symmetry", "central symmetry verdict");
  sym_src.add(sym);
  sym->add_option("--samples", sym_samples, "sample count")->check(CLI::PositiveNumber);
  sym->add_option("--tol", tol, "|det G + 1| tolerance (<= 0: oracle default)");
  sym->add_option("--seed", seed, "sampling seed");

  OracleSource hex_src;
  std::string hex_path;
  auto* hex = app.add_subcommand("hexagon", "hexagon inscription test");
  hex_src.add(hex);
  hex->add_option("--hex", hex_path, "hexagon JSON")->required();
  hex->add_option("--tol", tol, "residual tolerance (<= 0: oracle default)");

  OracleSource nrm_src;
  auto* nrm = app.add_subcommand("normals", "normal pair at x from covariogram data");
  nrm_src.add(nrm);
  nrm->add_option("--x", point, "shift \"x,y\"")->required();

  OracleSource tr_src;
  double arclen = 0.5;
  double step = 0.0;
  auto* tr = app.add_subcommand("trace-arc", "trace a boundary arc");
  tr_src.add(tr);
  tr->add_option("--x0", point, "start \"x,y\"")->required();
  tr->add_option("--arclen", arclen, "arc length to trace")->check(CLI::PositiveNumber);
  tr->add_option("--step", step, "continuation step (<= 0: 1e-3 diam DK)");
  tr->add_option("--out", out_path, "arc CSV (t,x,y)");

  OracleSource rec_src;
  auto* rec = app.add_subcommand("reconstruct", "recover a centrally symmetric body");
  rec_src.add(rec);
  rec->add_option("--out", out_path, "output body JSON")->required();
  std::string truth_path;
  rec->add_option("--truth", truth_path, "ground-truth body JSON to compare against");

  std::string a_path;
  std::string b_path;
  auto* cmp = app.add_subcommand("compare", "Hausdorff distance up to translation and reflection");
  cmp->add_option("--a", a_path, "body JSON")->required();
  cmp->add_option("--b", b_path, "body JSON")->required();

  int eq_n = 128;
  auto* eq = app.add_subcommand("equality", "max covariogram difference of two bodies");
  eq->add_option("--a", a_path, "body JSON")->required();
  eq->add_option("--b", b_path, "body JSON")->required();
  eq->add_option("--n", eq_n, "grid size")->check(CLI::Range(2, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", "precondition"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }

  try {
    if (*eval) {
      const ConvexBody k = io::read_body(body_path);
      print({{"x", io::to_json(parse_point(point))}, {"g", covariogram_value(k, parse_point(point))}});
    } else if (*grid) {
      const ConvexBody k = io::read_body(body_path);
      std::ofstream out = open_output(out_path);
      io::write_grid_csv(out, covariogram_grid(k, grid_n, body_path));
    } else if (*chord) {
      const ConvexBody k = io::read_body(body_path);
      const Vec2 d = parse_point(dir);
      if (!(d.norm() > 0.0)) throw PreconditionError("--dir must be nonzero");
      const Vec2 u = d.normalized();
      const double rmax = AnalyticOracle(k).dk_radius(angle_of(u));
      std::vector<double> rs;
      for (int i = 0; i < chord_points; ++i) rs.push_back(rmax * i / (chord_points - 1));
      const ChordLengthDistribution cdf = chord_length_cdf(k, u, rs);
      std::ofstream out = open_output(out_path);
      out << "r,F\n" << std::setprecision(17);
      for (std::size_t i = 0; i < cdf.r.size(); ++i) out << cdf.r[i] << ',' << cdf.F[i] << '\n';
    } else if (*ident) {
      const ConvexBody k = io::read_body(body_path);
      const SupportBody& s = require_support_body(k);
      const AnalyticOracle o(k);
      for (const Vec2& x : sample_domain(o, id_samples, seed)) print(io::to_json(hessian_report(s, o, x)));
    } else if (*sym) {
      const auto o = sym_src.make();
      print(io::to_json(central_symmetry_test(*o, sym_samples, tol, seed)));
    } else if (*hex) {
      const auto o = hex_src.make();
      std::ifstream in(hex_path);
      if (!in) throw PreconditionError("cannot open " + hex_path);
      json j;
      in >> j;
      print(io::to_json(hexagon_inscription_test(*o, io::hexagon_from_json(j), tol)));
    } else if (*nrm) {
      const auto o = nrm_src.make();
      print(io::to_json(normal_pair(*o, parse_point(point))));
    } else if (*tr) {
      const auto o = tr_src.make();
      TraceOptions opts;
      opts.step = step;
      const ArcTrace t = trace_arc(*o, parse_point(point), arclen, opts);
      if (!out_path.empty()) {
        std::ofstream out = open_output(out_path);
        io::write_polyline_csv(out, t.arc);
      }
      print(io::to_json(t));
    } else if (*rec) {
      const auto o = rec_src.make();
      const ConvexBody k = reconstruct_symmetric(*o);
      {
        std::ofstream out = open_output(out_path);
        out << io::body_to_json(k).dump(2) << '\n';
      }
      json report = {{"mode", "symmetric"}, {"area", area(k)}, {"comparison", nullptr}};
      if (!truth_path.empty()) report["comparison"] = io::to_json(compare_bodies(io::read_body(truth_path), k));
      print(report);
    } else if (*cmp) {
      print(io::to_json(compare_bodies(io::read_body(a_path), io::read_body(b_path))));
    } else if (*eq) {
      print({{"max_abs_diff", equality_harness(io::read_body(a_path), io::read_body(b_path), eq_n)}});
    }
  } catch (const PreconditionError& e) {
    std::cerr << json{{"error", "precondition"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "precondition"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << json{{"error", "numerical"}, {"message", e.what()}}.dump() << '\n';
    return 3;
  }
  return 0;
}
