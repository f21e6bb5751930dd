#pragma once

#include <optional>
#include <span>
#include <vector>

#include "covariogram/linalg.hpp"

namespace cov {

/// Convex polygon with counterclockwise, strictly convex vertices.
class ConvexPolygon {
 public:
  /// Validates: >= 3 vertices, no repeats, strictly positive turn at every
  /// vertex, positive area. Throws PreconditionError otherwise.
  explicit ConvexPolygon(std::vector<Vec2> ccw_vertices);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vec2& operator[](std::size_t i) const { return vertices_[i]; }

  double area() const;
  Vec2 centroid() const;
  double support(const Vec2& direction) const;
  /// Negative inside, positive outside, Euclidean distance to the boundary.
  double signed_distance(const Vec2& p) const;
  bool contains(const Vec2& p, double tol = 0.0) const;

  ConvexPolygon translated(const Vec2& t) const;
  /// {2c - p : p in P}
  ConvexPolygon reflected(const Vec2& c) const;
  ConvexPolygon scaled(double s) const;

  /// Axis-aligned bounds as (min, max).
  std::pair<Vec2, Vec2> bounds() const;

 private:
  std::vector<Vec2> vertices_;
};

double polygon_area(const ConvexPolygon& p);

/// Removes repeated and collinear vertices (relative tolerance) from a CCW
/// vertex loop; returns nullopt when what is left has no interior.
std::optional<ConvexPolygon> make_polygon(std::vector<Vec2> ccw_loop, double rel_tol = 1e-12);

/// Convex hull (monotone chain), collinear points dropped.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

/// A ∩ B by clipping A against each edge half-plane of B. An empty or
/// measure-zero intersection is reported as nullopt.
std::optional<ConvexPolygon> convex_intersection(const ConvexPolygon& a, const ConvexPolygon& b);

/// A + B by merging edge sequences in angular order.
ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b);

}  // namespace cov
