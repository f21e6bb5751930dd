#include <doctest.h>

#include "covariogram/covariogram.hpp"
#include "covariogram/errors.hpp"
#include "covariogram/parallelogram.hpp"
#include "covariogram/reconstruct.hpp"
#include "covariogram/sampling.hpp"
#include "fixtures.hpp"

using namespace cov;
using namespace fixtures;

namespace {

Vec2 diagonal_of(const SupportBody& k, const Vec2& x)
{
  const auto par = inscribed_parallelogram(k, x);
  return par.p[0] - par.p[2];
}

}  // namespace

TEST_CASE("conjugate points share the diagonal and agree with the boundary construction")
{
  const auto k = trefoil();
  const AnalyticOracle o{ConvexBody(k)};
  int found = 0;
  for (const Vec2& x : sample_domain(o, 30, 1)) {
    Conjugate c;
    try {
      c = find_conjugate(o, x);
    } catch (const NumericalError&) {
      continue;
    }
    ++found;
    CHECK((c.y - x).norm() > 1e-6);
    CHECK(c.residual <= 1e-8);
    CHECK((diagonal_of(k, x) - diagonal_of(k, c.y)).norm() <= 1e-8);
    REQUIRE(c.strategy_gap.has_value());
    CHECK(*c.strategy_gap <= 1e-6);
    // going back from y gives the same diagonal
    const Conjugate back = find_conjugate(o, c.y);
    CHECK((back.diagonal - c.diagonal).norm() <= 1e-8);
  }
  CHECK(found >= 20);
}

TEST_CASE("disk has no isolated conjugate points")
{
  const AnalyticOracle o(disk());
  CHECK_THROWS_AS(find_conjugate(o, Vec2(0.5, 0.3)), PreconditionError);
  CHECK_THROWS_AS(normal_pair(o, Vec2(0.5, 0.3)), PreconditionError);
}

TEST_CASE("normal pairs recover the outer normals")
{
  for (const auto& f : asymmetric_fixtures()) {
    INFO(f.name);
    const auto& k = std::get<SupportBody>(f.body);
    const AnalyticOracle o(f.body);
    int ok = 0;
    for (const Vec2& x : sample_domain(o, 25, 3)) {
      NormalPair np;
      try {
        np = normal_pair(o, x);
      } catch (const NumericalError&) {
        continue;
      }
      ++ok;
      CHECK(x.dot(np.v1) >= 0.0);
      CHECK(x.dot(np.v3) >= 0.0);
      CHECK(det2(np.v1, np.v3) > 0.0);
      CHECK(np.eigen_gap > 0.0);
      CHECK(normal_pair_error(np, k) < 1e-6);
    }
    CHECK(ok >= 15);
  }
}

TEST_CASE("reflected body gives the relabeled pair")
{
  const auto k = trefoil();
  const SupportBody l = k.reflected(Vec2::Zero());
  const AnalyticOracle ok_(ConvexBody{k});
  const AnalyticOracle ol(ConvexBody{l});
  // g is even, so -K has the same covariogram; the pair at x must coincide
  const Vec2 x = sample_domain(ok_, 1, 3)[0];
  const auto a = normal_pair(ok_, x);
  const auto b = normal_pair(ol, x);
  CHECK(std::min((a.v1 - b.v1).norm() + (a.v3 - b.v3).norm(), (a.v1 - b.v3).norm() + (a.v3 - b.v1).norm()) < 1e-8);
  // and the roles swap: u1 of -K at x is -u3 of K at x
  const auto pk = inscribed_parallelogram(k, x);
  const auto pl = inscribed_parallelogram(l, x);
  CHECK((pl.u[0] + pk.u[2]).norm() < 1e-9);
}

TEST_CASE("analytic trace follows a translate of the boundary")
{
  const auto k = trefoil();
  const AnalyticOracle o{ConvexBody(k)};
  const Vec2 x0 = sample_domain(o, 4, 1)[3];
  const ArcTrace tr = trace_arc(o, x0, 0.2);
  CHECK(tr.length > 0.05);
  CHECK_FALSE(tr.swap_violation);
  CHECK(tr.max_constraint_residual < 1e-8);
  const auto cmp = compare_arcs(reference_arc(k, tr), tr.arc);
  CHECK(cmp.hausdorff < 1e-3);

  // same covariogram, same curve
  const AnalyticOracle moved(translated(ConvexBody(k), Vec2(2, 1)));
  const ArcTrace tm = trace_arc(moved, x0, 0.2);
  REQUIRE(tm.curve.size() == tr.curve.size());
  double dev = 0.0;
  for (std::size_t i = 0; i < tm.curve.size(); ++i) dev = std::max(dev, (tm.curve[i] - tr.curve[i]).norm());
  CHECK(dev < 1e-9);
}

TEST_CASE("trace step halving converges")
{
  const auto k = trefoil();
  const AnalyticOracle o{ConvexBody(k)};
  const Vec2 x0 = sample_domain(o, 4, 1)[3];
  TraceOptions coarse;
  coarse.step = 0.01;
  TraceOptions fine;
  fine.step = 0.005;
  const ArcTrace a = trace_arc(o, x0, 0.1, coarse);
  const ArcTrace b = trace_arc(o, x0, 0.1, fine);
  // the two traces end at different overshoots; compare the coarse nodes
  // against the fine polyline
  double dev = 0.0;
  for (const Vec2& p : a.arc) {
    double best = 1e300;
    for (std::size_t i = 0; i + 1 < b.arc.size(); ++i) {
      const Vec2 e = b.arc[i + 1] - b.arc[i];
      const double t = std::clamp((p - b.arc[i]).dot(e) / e.squaredNorm(), 0.0, 1.0);
      best = std::min(best, (b.arc[i] + t * e - p).norm());
    }
    if ((p - a.arc.back()).norm() > coarse.step) dev = std::max(dev, best);
  }
  CHECK(dev < 1e-6);
}

TEST_CASE("body comparison up to translation and reflection")
{
  for (const auto& f : all_fixtures()) {
    INFO(f.name);
    const auto same = compare_bodies(f.body, translated(f.body, Vec2(0.3, -0.2)));
    CHECK(same.hausdorff <= 1e-9);
    CHECK_FALSE(same.reflected);
  }
  const auto t = compare_bodies(triangle(), reflect_about(triangle(), Vec2(0.7, 0.1)));
  CHECK(t.hausdorff <= 1e-9);
  CHECK(t.reflected);
  const auto tk = compare_bodies(trefoil(), reflect_about(trefoil(), Vec2(-0.5, 0.5)));
  CHECK(tk.hausdorff <= 1e-9);
  CHECK(tk.reflected);
  const ConvexBody sq = ConvexPolygon({Vec2(-1, -1), Vec2(1, -1), Vec2(1, 1), Vec2(-1, 1)});
  CHECK(compare_bodies(sq, SupportBody::disk(2.0 / std::sqrt(kPi))).hausdorff > 0.1);
}

TEST_CASE("equality harness")
{
  CHECK(equality_harness(triangle(), translated(triangle(), Vec2(0.4, 0.9)), 48) <= 1e-12);
  CHECK(equality_harness(triangle(), reflect_about(triangle(), Vec2::Zero()), 48) <= 1e-12);
  CHECK(equality_harness(trefoil(), reflect_about(trefoil(), Vec2(1, 1)), 32) <= 1e-6);
  const ConvexBody big = ConvexPolygon({Vec2(0, 0), Vec2(1.01, 0), Vec2(0, 1.01)});
  CHECK(equality_harness(triangle(), big, 33) > 1e-3);
}

TEST_CASE("symmetric reconstruction")
{
  const AnalyticOracle oe(ellipse().translated(Vec2(1, 1)));
  CHECK(compare_bodies(reconstruct_symmetric(oe), ellipse()).hausdorff < 1e-9);
  const AnalyticOracle ot{ConvexBody(trefoil())};
  CHECK_THROWS_AS(reconstruct_symmetric(ot), PreconditionError);

  const GridOracle gd(covariogram_grid(disk(), 512));
  const ConvexBody r = reconstruct_symmetric(gd);
  const double spacing = gd.grid().spacing;
  for (int i = 0; i < 16; ++i) CHECK(std::abs(support(r, 0.39 * i) - 1.0) <= 2.0 * spacing);
}
