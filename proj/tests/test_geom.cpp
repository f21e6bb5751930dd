#include <doctest.h>

#include <random>

#include "covariogram/errors.hpp"
#include "fixtures.hpp"

using namespace cov;
using namespace fixtures;

TEST_CASE("polygon validation rejects degenerate and clockwise input")
{
  CHECK_THROWS_AS(ConvexPolygon({Vec2(0, 0), Vec2(1, 0)}), PreconditionError);
  CHECK_THROWS_AS(ConvexPolygon({Vec2(0, 0), Vec2(0, 1), Vec2(1, 0)}), PreconditionError);
  CHECK_THROWS_AS(ConvexPolygon({Vec2(0, 0), Vec2(1, 0), Vec2(2, 0), Vec2(0, 1)}), PreconditionError);
  CHECK_THROWS_AS(ConvexPolygon({Vec2(0, 0), Vec2(2, 0), Vec2(1, 0.1), Vec2(2, 1), Vec2(0, 1)}), PreconditionError);
}

TEST_CASE("make_polygon coalesces collinear vertices")
{
  auto p = make_polygon({Vec2(0, 0), Vec2(0.5, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1), Vec2(0, 1)});
  REQUIRE(p.has_value());
  CHECK(p->size() == 4);
  CHECK(p->area() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_FALSE(make_polygon({Vec2(0, 0), Vec2(1, 0), Vec2(2, 0)}).has_value());
}

TEST_CASE("polygon area, centroid, support")
{
  const auto t = std::get<ConvexPolygon>(triangle());
  CHECK(t.area() == doctest::Approx(0.5));
  CHECK((t.centroid() - Vec2(1.0 / 3, 1.0 / 3)).norm() < 1e-15);
  CHECK(t.support(Vec2(1, 1)) == doctest::Approx(1.0));
  CHECK(t.support(Vec2(-1, 0)) == doctest::Approx(0.0));
  CHECK(t.signed_distance(Vec2(0.25, 0.25)) == doctest::Approx(-0.25));
  CHECK(t.signed_distance(Vec2(2, 0)) == doctest::Approx(1.0));
}

// intersection area against a fine point-count raster
TEST_CASE("convex intersection matches raster count")
{
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-0.6, 0.6);
  const ConvexPolygon a({Vec2(0, 0), Vec2(1, 0.1), Vec2(1.2, 0.8), Vec2(0.3, 1.1), Vec2(-0.2, 0.5)});
  for (int trial = 0; trial < 10; ++trial) {
    const Vec2 t(U(rng), U(rng));
    const ConvexPolygon b = a.reflected(Vec2(0.5, 0.5)).translated(t);
    const auto c = convex_intersection(a, b);
    const int n = 800;
    const auto [lo, hi] = a.bounds();
    const Vec2 ext = hi - lo;
    long hits = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Vec2 p = lo + Vec2((i + 0.5) * ext(0) / n, (j + 0.5) * ext(1) / n);
        hits += a.contains(p) && b.contains(p);
      }
    }
    const double raster = hits * ext(0) * ext(1) / (double(n) * n);
    const double exact = c ? c->area() : 0.0;
    CHECK(std::abs(raster - exact) < 5e-3);
  }
}

TEST_CASE("disjoint and touching intersections are empty")
{
  const auto s = std::get<ConvexPolygon>(square());
  CHECK_FALSE(convex_intersection(s, s.translated(Vec2(2, 0))).has_value());
  CHECK_FALSE(convex_intersection(s, s.translated(Vec2(1, 0))).has_value());
}

TEST_CASE("minkowski sum support is additive")
{
  const auto s = std::get<ConvexPolygon>(square());
  const auto t = std::get<ConvexPolygon>(triangle());
  const ConvexPolygon m = minkowski_sum(s, t);
  for (int i = 0; i < 64; ++i) {
    const Vec2 u = unit_vector(kTwoPi * i / 64 + 0.01);
    CHECK(m.support(u) == doctest::Approx(s.support(u) + t.support(u)).epsilon(1e-12));
  }
  CHECK(m.area() == doctest::Approx(1.0 + 0.5 + 2.0 * 1.0).epsilon(1e-12));  // mixed area of square and triangle is 1
}

TEST_CASE("support body boundary is consistent with its support function")
{
  for (const auto& f : support_fixtures()) {
    const auto& k = std::get<SupportBody>(f.body);
    for (int i = 0; i < 50; ++i) {
      const double t = kTwoPi * i / 50 + 0.003;
      const auto jet = k.boundary(t);
      CHECK(jet.point.dot(unit_vector(t)) == doctest::Approx(k.support_value(t)).epsilon(1e-12));
      CHECK(std::abs(k.signed_distance(jet.point)) < 1e-10);
      CHECK(jet.rho > 0.0);
    }
  }
}

TEST_CASE("support body area against polygonization and shoelace")
{
  for (const auto& f : support_fixtures()) {
    const auto& k = std::get<SupportBody>(f.body);
    CHECK(k.polygonize(20000).area() == doctest::Approx(k.area()).epsilon(1e-7));
  }
  CHECK(disk().area() == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(ellipse().area() == doctest::Approx(kPi * 0.6).epsilon(1e-12));
}

TEST_CASE("nonconvex support series is rejected")
{
  CHECK_THROWS_AS(support(1.0, {0, 0, 0.08, 0}, {0, 0, 0, 0.05}), PreconditionError);
  CHECK_THROWS_AS(support(1.0, {0, 0.4}, {}), PreconditionError);
  CHECK_NOTHROW(mixed());
}

TEST_CASE("difference body support is the width function")
{
  for (const auto& f : all_fixtures()) {
    const ConvexBody dk = difference_body(f.body);
    for (int i = 0; i < 40; ++i) {
      const double t = kTwoPi * i / 40 + 0.017;
      CHECK(support(dk, t) == doctest::Approx(support(f.body, t) + support(f.body, t + kPi)).epsilon(1e-10));
      CHECK(support(dk, t) == doctest::Approx(support(dk, t + kPi)).epsilon(1e-10));
    }
  }
}

TEST_CASE("translation and reflection move the steiner point")
{
  const Vec2 tv(0.3, -0.7);
  for (const auto& f : all_fixtures()) {
    const Vec2 s = steiner_point(f.body);
    CHECK((steiner_point(translated(f.body, tv)) - (s + tv)).norm() < 1e-9);
    CHECK((steiner_point(reflect_about(f.body, Vec2(1, 2))) - (Vec2(2, 4) - s)).norm() < 1e-9);
    CHECK(area(translated(f.body, tv)) == doctest::Approx(area(f.body)).epsilon(1e-12));
  }
}

TEST_CASE("affine diameters")
{
  const ConvexBody s = square();
  CHECK(is_affine_diameter(s, Vec2(0, 0), Vec2(1, 1), 1e-12));
  CHECK(is_affine_diameter(s, Vec2(0.2, 0), Vec2(0.7, 1), 1e-12));  // parallel supporting lines y = 0, 1
  CHECK_FALSE(is_affine_diameter(s, Vec2(0.5, 0), Vec2(1, 0.5), 1e-9));
  const ConvexBody e = ellipse();
  CHECK(is_affine_diameter(e, Vec2(1, 0), Vec2(-1, 0), 1e-9));
  CHECK(is_affine_diameter(e, Vec2(0.6, 0.48), Vec2(-0.6, -0.48), 1e-9));
  CHECK_FALSE(is_affine_diameter(e, Vec2(1, 0), Vec2(0, 0.6), 1e-9));
}

TEST_CASE("row spans agree with the independent chord routine")
{
  for (const auto& f : all_fixtures()) {
    const auto [lo, hi] = bounding_box(f.body);
    const ConvexPolygon ref = chord_reference(f.body);
    for (int i = 1; i < 20; ++i) {
      const double y = lo(1) + (hi(1) - lo(1)) * i / 20.0;
      const auto span = row_span(f.body, y);
      REQUIRE(span.has_value());
      CHECK(span->second - span->first == doctest::Approx(chord_length(ref, Vec2(0, y), Vec2(1, 0))).epsilon(1e-7));
    }
  }
}
