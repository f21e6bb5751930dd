#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "covariogram/polygon.hpp"
#include "covariogram/support_body.hpp"

namespace cov {

using ConvexBody = std::variant<ConvexPolygon, SupportBody>;

double area(const ConvexBody& k);
/// Support value in direction u(t).
double support(const ConvexBody& k, double t);
double diameter(const ConvexBody& k);
/// (1/pi) * integral of h(t) u(t); exact for support bodies, 4096-point
/// quadrature for polygons.
Vec2 steiner_point(const ConvexBody& k);
/// Axis-aligned bounds (min, max).
std::pair<Vec2, Vec2> bounding_box(const ConvexBody& k);

ConvexBody translated(const ConvexBody& k, const Vec2& t);
/// {2c - p : p in K}
ConvexBody reflect_about(const ConvexBody& k, const Vec2& c);
/// K + (-K), centrally symmetric about o.
ConvexBody difference_body(const ConvexBody& k);

/// Negative inside, positive outside; magnitude is the distance to bd K.
double signed_distance(const ConvexBody& k, const Vec2& q);

/// [q1, q2] is an affine diameter iff q1 - q2 lies on bd DK. Both points must
/// be on bd K within tol.
bool is_affine_diameter(const ConvexBody& k, const Vec2& q1, const Vec2& q2, double tol);
/// Same test with a precomputed difference body.
bool is_affine_diameter(const ConvexBody& k, const ConvexBody& dk, const Vec2& q1, const Vec2& q2,
                        double tol);

/// x-extent of K on the horizontal line at height y.
std::optional<std::pair<double, double>> row_span(const ConvexBody& k, double y);

const SupportBody& require_support_body(const ConvexBody& k);

}  // namespace cov
