// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "covariogram/covariogram.hpp"
#include "covariogram/errors.hpp"
#include "covariogram/identities.hpp"
#include "covariogram/parallelogram.hpp"
#include "covariogram/reconstruct.hpp"
#include "covariogram/sampling.hpp"
#include "covariogram/symmetry.hpp"
#include "fixtures.hpp"

using namespace cov;
using namespace fixtures;

namespace {

constexpr int kGridN = 1024;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what)
  {
    if (!ok) {
      pass = false;
      detail += "[violated: " + what + "] ";
    }
  }
  void note(const std::string& s) { detail += s + " "; }
};

std::string fmt(const char* f, double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string sci(double v) { return fmt("%.2e", v); }

// grids are expensive; build each once
const GridOracle& grid_of(const std::string& key, const std::function<ConvexBody()>& make)
{
  static std::map<std::string, std::unique_ptr<GridOracle>> cache;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<GridOracle>(covariogram_grid(make(), kGridN, key))).first;
  return *it->second;
}

Verdict gradient_identity()
{
  Verdict v;
  for (const auto& f : support_fixtures()) {
    const auto& k = std::get<SupportBody>(f.body);
    const AnalyticOracle o(f.body);
    double worst = 0.0;
    for (const Vec2& x : sample_domain(o, 100, 1)) {
      const Vec2 g = gradient_analytic(k, x);
      worst = std::max(worst, (g - fd_gradient(o, x)).norm() / (1.0 + g.norm()));
    }
    v.require(worst <= 1e-4, f.name + " gradient");
    v.note(f.name + " " + sci(worst));
  }
  return v;
}

Verdict hessian_identity()
{
  Verdict v;
  for (const auto& f : support_fixtures()) {
    const auto& k = std::get<SupportBody>(f.body);
    const AnalyticOracle o(f.body);
    double worst = 0.0;
    double forms = 0.0;
    for (const Vec2& x : sample_domain(o, 100, 1)) {
      const Mat2 g = hessian_analytic(k, x);
      worst = std::max(worst, (g - fd_hessian(o, x)).norm() / g.norm());
      forms = std::max(forms, hessian_forms(inscribed_parallelogram(k, x)).discrepancy);
    }
    v.require(worst <= 1e-3, f.name + " fd hessian");
    v.require(forms <= 1e-10, f.name + " forms");
    v.note(f.name + " fd " + sci(worst) + " forms " + sci(forms));
  }
  return v;
}

Verdict determinant_relations()
{
  Verdict v;
  double prod = 0.0, shifted = 0.0, orth = 0.0, max_det = -1e300, min_turn = 1e300;
  for (const auto& f : support_fixtures()) {
    const auto& k = std::get<SupportBody>(f.body);
    const AnalyticOracle o(f.body);
    for (const Vec2& x : sample_domain(o, 100, 1)) {
      const auto par = inscribed_parallelogram(k, x);
      const auto d = det_relations(par);
      max_det = std::max(max_det, d.detG);
      prod = std::max(prod, d.res_product);
      shifted = std::max(shifted, d.res_shifted);
      orth = std::max(orth, orthogonality_residual(par));
      min_turn = std::min(min_turn, par.min_normal_turn());
    }
  }
  std::mt19937_64 rng(5);
  std::normal_distribution<double> N(0.0, 1.0);
  double pl = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Vec2 a(N(rng), N(rng)), b(N(rng), N(rng)), c(N(rng), N(rng)), d(N(rng), N(rng));
    pl = std::max(pl, std::abs(plucker(a, b, c, d)) / (a.norm() * b.norm() * c.norm() * d.norm()));
  }
  v.require(max_det < 0.0, "det G < 0");
  v.require(prod <= 1e-9 && shifted <= 1e-9, "determinant products");
  v.require(orth <= 1e-9, "orthogonality");
  v.require(pl <= 1e-12, "plucker");
  v.require(min_turn > 0.0, "normal turn positivity");
  v.note("max detG " + sci(max_det) + " prod " + sci(prod) + " shifted " + sci(shifted) + " orth " + sci(orth) +
         " plucker " + sci(pl) + " min turn " + sci(min_turn));
  return v;
}

Verdict quadrilateral()
{
  Verdict v;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (const auto& f : support_fixtures()) {
    const auto& k = std::get<SupportBody>(f.body);
    const AnalyticOracle o(f.body);
    double worst = 0.0;
    int pairs = 0;
    int drawn = 0;
    for (const Vec2& x : sample_domain(o, 400, 6)) {
      if (pairs == 100) break;
      ++drawn;
      const auto par = inscribed_parallelogram(k, x);
      const Mat2 g = hessian_analytic(k, x);
      for (int tries = 0; tries < 400; ++tries) {
        const Vec2 h = (0.05 + U(rng)) * unit_vector(kTwoPi * U(rng));
        if (!fan_order_holds(par, h)) continue;
        const auto q = quadrilateral_Q(par, h);
        worst = std::max(worst, ((q.q[3] - q.q[1]) + rot90(Vec2(g * h))).norm() / h.norm());
        ++pairs;
        break;
      }
    }
    v.require(pairs == 100, f.name + " found 100 admissible pairs");
    v.require(worst <= 1e-8, f.name + " residual");
    v.note(f.name + " " + sci(worst) + " (" + std::to_string(pairs) + " pairs, " + std::to_string(drawn) + " x)");
  }
  return v;
}

// threshold from an independent polar scan of |1 + det G|: half its maximum
double asymmetry_threshold(const SupportBody& k)
{
  const AnalyticOracle o{ConvexBody(k)};
  double m = 0.0;
  for (int i = 0; i < 48; ++i) {
    const double psi = kTwoPi * i / 48;
    for (int j = 1; j < 16; ++j) {
      const Vec2 x = (o.dk_radius(psi) * j / 16.0) * unit_vector(psi);
      m = std::max(m, std::abs(1.0 + det_relations(k, x).detG));
    }
  }
  return 0.5 * m;
}

Verdict symmetry()
{
  Verdict v;
  for (const auto& f : support_fixtures()) {
    const auto& k = std::get<SupportBody>(f.body);
    const AnalyticOracle o(f.body);
    const auto s = central_symmetry_test(o, 128, 0.0, 1);
    const bool symmetric_body = f.name == "disk" || f.name == "ellipse";
    if (symmetric_body) {
      v.require(s.is_symmetric && s.max_residual <= 1e-6, f.name + " symmetric");
      v.note(f.name + " max|detG+1| " + sci(s.max_residual));
    } else {
      const double thr = asymmetry_threshold(k);
      const double at_witness = std::abs(1.0 + hessian_analytic(k, s.witness).determinant());
      v.require(!s.is_symmetric && at_witness > thr, f.name + " asymmetric witness");
      v.note(f.name + " witness " + sci(at_witness) + " > " + sci(thr));
    }
    v.require(s.diagonal_mismatches.value_or(-1) == 0, f.name + " diagonal equivalence");
  }
  return v;
}

Verdict hexagons()
{
  Verdict v;
  for (const auto& f : asymmetric_fixtures()) {
    const auto& k = std::get<SupportBody>(f.body);
    const AnalyticOracle o(f.body);
    const AnalyticOracle moved(translated(f.body, Vec2(0.7, -0.4)));
    const AnalyticOracle flipped(reflect_about(f.body, Vec2(-0.2, 0.3)));
    int built = 0, attempts = 0, no_conjugate = 0, rim = 0, passed = 0, perturbed_rejected = 0;
    for (const Vec2& x : sample_domain(o, 400, 2)) {
      if (built == 50) break;
      ++attempts;
      Conjugate c;
      try {
        c = find_conjugate(o, x);
      } catch (const NumericalError&) {
        ++no_conjugate;
        continue;
      }
      const SymmetricHexagon hex =
          hexagon_from_parallelograms(inscribed_parallelogram(k, x), inscribed_parallelogram(k, c.y));
      bool applicable = true;
      for (int i = 1; i <= 3; ++i) applicable = applicable && o.inside(hex.diagonal_shift(i), 2.0 * o.step());
      if (!applicable) {
        ++rim;
        continue;
      }
      ++built;
      passed += hexagon_inscription_test(o, hex).passed && hexagon_inscription_test(moved, hex).passed &&
                hexagon_inscription_test(flipped, hex).passed;
      auto w = hex.vertices();
      const Vec2 bump = 1e-2 * rot90(Vec2((w[1] - w[0]).normalized()));
      w[0] += bump;
      w[3] -= bump;
      try {
        perturbed_rejected += !hexagon_inscription_test(o, SymmetricHexagon(w)).passed;
      } catch (const PreconditionError&) {
        ++perturbed_rejected;  // no longer a convex symmetric hexagon
      }
    }
    v.require(built == 50, f.name + " 50 hexagons");
    v.require(passed == built, f.name + " inscribed");
    v.require(perturbed_rejected == built, f.name + " perturbed rejected");
    v.note(f.name + " " + std::to_string(passed) + "/" + std::to_string(built) + " pass (own, translated, reflected), " +
           std::to_string(perturbed_rejected) + " perturbed rejected; " + std::to_string(attempts) + " x drawn, " +
           std::to_string(no_conjugate) + " without conjugate in domain, " + std::to_string(rim) + " with a shift on the rim");
  }
  return v;
}

struct PairStats {
  int ok = 0;
  int attempts = 0;
  std::map<std::string, int> skipped;
  double worst = 0.0;
};

PairStats normal_pairs(const CovariogramOracle& o, const SupportBody& k, int want, std::uint64_t seed)
{
  PairStats s;
  for (const Vec2& x : sample_domain(o, 400, seed)) {
    if (s.ok == want) break;
    ++s.attempts;
    try {
      const NormalPair np = normal_pair(o, x);
      s.worst = std::max(s.worst, normal_pair_error(np, k));
      ++s.ok;
    } catch (const std::exception& e) {
      ++s.skipped[e.what()];
    }
  }
  return s;
}

std::string describe(const PairStats& s)
{
  std::string out = std::to_string(s.ok) + "/" + std::to_string(s.attempts) + " max err " + sci(s.worst) + " rad";
  for (const auto& [why, n] : s.skipped) out += "; skipped " + std::to_string(n) + ": " + why;
  return out;
}

Verdict normal_pair_recovery()
{
  Verdict v;
  for (const auto& f : asymmetric_fixtures()) {
    const auto& k = std::get<SupportBody>(f.body);
    const AnalyticOracle o(f.body);
    const PairStats a = normal_pairs(o, k, 50, 3);
    v.require(a.ok == 50 && a.worst <= 1e-3, f.name + " analytic");
    v.note(f.name + " analytic " + describe(a) + ".");
    const GridOracle& g = grid_of(f.name, [&] { return f.body; });
    const PairStats b = normal_pairs(g, k, 50, 3);
    v.require(b.ok == 50 && b.worst <= 1e-2, f.name + " grid");
    v.note(f.name + " grid " + describe(b) + ".");
  }
  return v;
}

Verdict arc_tracing()
{
  Verdict v;
  for (const auto& f : asymmetric_fixtures()) {
    const auto& k = std::get<SupportBody>(f.body);
    const SupportBody reflected = k.reflected(Vec2::Zero());
    struct Side {
      std::string name;
      const SupportBody* body;
      const GridOracle* oracle;
    };
    const std::vector<Side> sides = {
        {f.name, &k, &grid_of(f.name, [&] { return f.body; })},
        {"-" + f.name, &reflected, &grid_of("-" + f.name, [&] { return ConvexBody(reflected); })}};
    for (const auto& side : sides) {
      int long_traces = 0, tried = 0, swaps = 0;
      double worst = 0.0;
      double longest = 0.0;
      std::map<std::string, int> stops;
      for (const Vec2& x0 : sample_domain(*side.oracle, 40, 8)) {
        if (long_traces == 3 || tried == 20) break;
        ++tried;
        ArcTrace tr;
        try {
          tr = trace_arc(*side.oracle, x0, 0.5);
        } catch (const std::exception& e) {
          ++stops[std::string("no start: ") + e.what() + ";"];
          continue;
        }
        ++stops[to_string(tr.status)];
        if (tr.curve.size() < 5) continue;
        swaps += tr.swap_violation;
        const double d = compare_arcs(reference_arc(*side.body, tr), tr.arc).hausdorff;
        worst = std::max(worst, d);
        longest = std::max(longest, tr.length);
        long_traces += tr.length >= 0.1;
      }
      v.require(long_traces == 3, side.name + " three arcs of length >= 0.1");
      v.require(worst <= 5e-3, side.name + " hausdorff");
      v.require(swaps == 0, side.name + " swap resolution");
      std::string st;
      for (const auto& [s, n] : stops) st += s + " " + std::to_string(n) + " ";
      v.note(side.name + ": hausdorff " + sci(worst) + ", longest " + fmt("%.3f", longest) + ", starts " +
             std::to_string(tried) + " (" + st + "), swaps " + std::to_string(swaps) + ".");
    }
  }
  return v;
}

Verdict symmetric_reconstruction()
{
  Verdict v;
  const ConvexBody e = ellipse();
  const GridOracle& g = grid_of("ellipse", [&] { return e; });
  const auto cmp = compare_bodies(reconstruct_symmetric(g), e);
  v.require(cmp.hausdorff <= 1e-3, "ellipse hausdorff");
  v.note("ellipse from n=" + std::to_string(kGridN) + " grid: hausdorff " + sci(cmp.hausdorff));
  return v;
}

Verdict chord_lengths()
{
  Verdict v;
  const Vec2 u = unit_vector(0.3);
  const Vec2 nrm = rot90(u);
  for (const auto& f : all_fixtures()) {
    const double lo = -support(f.body, angle_of(-nrm));
    const double hi = support(f.body, angle_of(nrm));
    std::vector<double> rs;
    const double rmax = AnalyticOracle(f.body).dk_radius(angle_of(u));
    for (int i = 0; i < 400; ++i) rs.push_back(rmax * i / 400.0);
    const auto cdf = chord_length_cdf(f.body, u, rs);
    double rise = 0.0;
    for (std::size_t i = 1; i < rs.size(); ++i) rise = std::max(rise, cdf.F[i] - cdf.F[i - 1]);
    v.require(rise <= 1e-9, f.name + " monotone");
    if (f.name != "square" && f.name != "disk") continue;
    const ConvexPolygon ref = chord_reference(f.body);
    const int lines = 10000;
    std::vector<double> len(lines);
    for (int i = 0; i < lines; ++i) len[i] = chord_length(ref, (lo + (hi - lo) * (i + 0.5) / lines) * nrm, u);
    std::sort(len.begin(), len.end());
    double sup = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      // F jumps at rmax for the square; sup over r < rmax
      const auto above = len.end() - std::upper_bound(len.begin(), len.end(), rs[i]);
      sup = std::max(sup, std::abs(cdf.F[i] - (hi - lo) * double(above) / lines));
    }
    v.require(sup <= 1e-2, f.name + " sweep");
    v.note(f.name + " sup " + sci(sup) + ";");
  }
  v.note("monotone on all six fixtures");
  return v;
}

Verdict invariances()
{
  Verdict v;
  for (const auto& f : all_fixtures()) {
    const bool poly = std::holds_alternative<ConvexPolygon>(f.body);
    const double tol = poly ? 1e-12 : 1e-6;
    const double t = equality_harness(f.body, translated(f.body, Vec2(0.37, -1.1)), 48);
    const double r = equality_harness(f.body, reflect_about(f.body, Vec2(0.2, 0.1)), 48);
    v.require(t <= tol && r <= tol, f.name + " equality");
    const int n = 128;
    const auto conv = convolution_check(f.body, n);
    v.require(conv.spectral_vs_direct <= 1e-9 * n * n, f.name + " spectral");
    v.note(f.name + " " + sci(std::max(t, r)) + "/" + sci(conv.spectral_vs_direct) + ";");
  }
  return v;
}

}  // namespace

int main()
{
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  try {
    support(1.0, {0, 0, 0.08, 0}, {0, 0, 0, 0.05});
    std::printf("fixture 1 + 0.08 cos 3t + 0.05 sin 4t: accepted\n");
  } catch (const PreconditionError& e) {
    std::printf("fixture 1 + 0.08 cos 3t + 0.05 sin 4t: REJECTED (%s); using 1 + 0.04 cos 3t + 0.025 sin 4t\n", e.what());
  }

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"gradient identity", gradient_identity},
      {"hessian identity", hessian_identity},
      {"determinant relations", determinant_relations},
      {"normal-fan quadrilateral", quadrilateral},
      {"central symmetry test", symmetry},
      {"hexagon inscription", hexagons},
      {"normal pairs from covariogram data", normal_pair_recovery},
      {"boundary arc tracing", arc_tracing},
      {"symmetric reconstruction", symmetric_reconstruction},
      {"chord-length distribution", chord_lengths},
      {"covariogram invariances", invariances},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !v.pass;
    std::printf("%s %2zu %s (%.1fs): %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                v.detail.c_str());
  }
  return failed;
}
