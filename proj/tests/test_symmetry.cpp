#include <doctest.h>

#include "covariogram/errors.hpp"
#include "covariogram/identities.hpp"
#include "covariogram/parallelogram.hpp"
#include "covariogram/reconstruct.hpp"
#include "covariogram/sampling.hpp"
#include "covariogram/symmetry.hpp"
#include "fixtures.hpp"

using namespace cov;
using namespace fixtures;

TEST_CASE("sampling domain stays inside DK away from o")
{
  const AnalyticOracle o(trefoil());
  const SamplingDomain dom;
  const auto pts = sample_domain(o, 300, 42);
  REQUIRE(pts.size() == 300);
  for (const auto& x : pts) CHECK(dom.contains(o, x));
  CHECK(sample_domain(o, 300, 42) == pts);  // deterministic in the seed
  CHECK(sample_domain(o, 300, 43) != pts);
}

TEST_CASE("symmetric bodies pass the determinant test")
{
  for (const auto& body : {ConvexBody(disk()), ConvexBody(ellipse()), ConvexBody(ellipse().translated(Vec2(3, -1)))}) {
    const AnalyticOracle o(body);
    const auto v = central_symmetry_test(o, 128);
    CHECK(v.is_symmetric);
    CHECK(v.max_residual <= 1e-6);
    REQUIRE(v.geometric_symmetric.has_value());
    CHECK(*v.geometric_symmetric);
    CHECK(v.diagonal_mismatches.value_or(-1) == 0);
  }
}

TEST_CASE("asymmetric bodies fail with a witness")
{
  for (const auto& f : asymmetric_fixtures()) {
    INFO(f.name);
    const AnalyticOracle o(f.body);
    const auto v = central_symmetry_test(o, 128);
    CHECK_FALSE(v.is_symmetric);
    CHECK(v.max_residual > 0.01);
    const double at_witness = std::abs(hessian_analytic(std::get<SupportBody>(f.body), v.witness).determinant() + 1.0);
    CHECK(at_witness == doctest::Approx(v.max_residual).epsilon(1e-9));
    CHECK(v.diagonal_mismatches.value_or(-1) == 0);
    CHECK_FALSE(v.geometric_symmetric.value_or(true));
  }
}

TEST_CASE("symmetric polygon passes through the finite-difference path")
{
  const ConvexBody sq = square();
  const AnalyticOracle o(sq);
  // polygons have piecewise-constant Hessians away from lines; use a loose tolerance
  const auto v = central_symmetry_test(o, 64, 1e-3);
  CHECK(v.geometric_symmetric.value_or(false));
}

TEST_CASE("diagonal is an affine diameter exactly when det G = -1")
{
  const auto e = ellipse();
  const auto t = trefoil();
  const Vec2 x(0.5, 0.3);
  const auto de = affine_diameter_diagonals(e, x, diagonal_tolerance(e));
  CHECK((de.diag13 || de.diag24));
  const auto dt = affine_diameter_diagonals(t, x, diagonal_tolerance(t));
  const double r = std::abs(hessian_analytic(t, x).determinant() + 1.0);
  CHECK((dt.diag13 || dt.diag24) == (r <= 1e-6));
}

TEST_CASE("hexagon validation")
{
  const std::array<Vec2, 6> regular = {unit_vector(0.0),    unit_vector(kPi / 3), unit_vector(2 * kPi / 3),
                                       unit_vector(kPi),    unit_vector(4 * kPi / 3), unit_vector(5 * kPi / 3)};
  const SymmetricHexagon h(regular);
  CHECK(h.center().norm() < 1e-15);
  CHECK((h.diagonal_shift(1) - (regular[2] - regular[0])).norm() < 1e-15);
  auto skew = regular;
  skew[1] += Vec2(0.01, 0.0);
  CHECK_THROWS_AS(SymmetricHexagon{skew}, PreconditionError);
  auto cw = regular;
  std::reverse(cw.begin(), cw.end());
  CHECK_THROWS_AS(SymmetricHexagon{cw}, PreconditionError);
}

// hexagons assembled from two inscribed parallelograms sharing a diagonal
TEST_CASE("conjugate hexagons are inscribed; perturbed ones are not")
{
  for (const auto& f : asymmetric_fixtures()) {
    INFO(f.name);
    const auto& k = std::get<SupportBody>(f.body);
    const AnalyticOracle o(f.body);
    const AnalyticOracle moved(translated(f.body, Vec2(0.4, -1.3)));
    const AnalyticOracle flipped(reflect_about(f.body, Vec2(0.1, 0.2)));
    int built = 0;
    for (const Vec2& x : sample_domain(o, 30, 17)) {
      Conjugate c;
      try {
        c = find_conjugate(o, x);
      } catch (const std::exception&) {
        continue;
      }
      const SymmetricHexagon hex = hexagon_from_parallelograms(inscribed_parallelogram(k, x), inscribed_parallelogram(k, c.y));
      // a diagonal shift may sit on the rim of DK where the test cannot run
      bool applicable = true;
      for (int i = 1; i <= 3; ++i) applicable = applicable && o.inside(hex.diagonal_shift(i), 2.0 * o.step());
      if (!applicable) continue;
      for (const CovariogramOracle* q : {static_cast<const CovariogramOracle*>(&o), static_cast<const CovariogramOracle*>(&moved),
                                         static_cast<const CovariogramOracle*>(&flipped)}) {
        CHECK(hexagon_inscription_test(*q, hex).passed);
      }
      auto v = hex.vertices();
      const Vec2 bump = 1e-2 * rot90(Vec2((v[1] - v[0]).normalized()));
      v[0] += bump;
      v[3] -= bump;
      try {
        CHECK_FALSE(hexagon_inscription_test(o, SymmetricHexagon(v)).passed);
      } catch (const PreconditionError&) {
        // perturbation left convex position; still not inscribed
      }
      ++built;
    }
    CHECK(built >= 10);
  }
}
