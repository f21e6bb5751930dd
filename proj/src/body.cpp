#include "covariogram/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "covariogram/errors.hpp"

namespace cov {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double area(const ConvexBody& k)
{
  return std::visit([](const auto& b) { return b.area(); }, k);
}

double support(const ConvexBody& k, double t)
{
  return std::visit(overloaded{[&](const ConvexPolygon& p) { return p.support(unit_vector(t)); },
                               [&](const SupportBody& s) { return s.support_value(t); }},
                    k);
}

double diameter(const ConvexBody& k)
{
  return std::visit(overloaded{[](const ConvexPolygon& p) {
                                 double d = 0.0;
                                 for (const auto& a : p.vertices())
                                   for (const auto& b : p.vertices()) d = std::max(d, (a - b).norm());
                                 return d;
                               },
                               [](const SupportBody& s) { return s.diameter(); }},
                    k);
}

Vec2 steiner_point(const ConvexBody& k)
{
  if (const auto* s = std::get_if<SupportBody>(&k)) return s->steiner_point();
  const auto& p = std::get<ConvexPolygon>(k);
  constexpr int kDirections = 4096;
  Vec2 acc = Vec2::Zero();
  for (int i = 0; i < kDirections; ++i) {
    const Vec2 u = unit_vector(kTwoPi * i / kDirections);
    acc += p.support(u) * u;
  }
  return acc * (2.0 / kDirections);
}

std::pair<Vec2, Vec2> bounding_box(const ConvexBody& k)
{
  return std::visit(overloaded{[](const ConvexPolygon& p) { return p.bounds(); },
                               [](const SupportBody& s) {
                                 return std::make_pair(Vec2(-s.support_value(kPi), -s.support_value(1.5 * kPi)),
                                                       Vec2(s.support_value(0.0), s.support_value(0.5 * kPi)));
                               }},
                    k);
}

ConvexBody translated(const ConvexBody& k, const Vec2& t)
{
  return std::visit([&](const auto& b) { return ConvexBody(b.translated(t)); }, k);
}

ConvexBody reflect_about(const ConvexBody& k, const Vec2& c)
{
  return std::visit([&](const auto& b) { return ConvexBody(b.reflected(c)); }, k);
}

ConvexBody difference_body(const ConvexBody& k)
{
  return std::visit(
      overloaded{[](const ConvexPolygon& p) { return ConvexBody(minkowski_sum(p, p.reflected(Vec2::Zero()))); },
                 [](const SupportBody& s) { return ConvexBody(s.difference_body()); }},
      k);
}

double signed_distance(const ConvexBody& k, const Vec2& q)
{
  return std::visit([&](const auto& b) { return b.signed_distance(q); }, k);
}

bool is_affine_diameter(const ConvexBody& k, const Vec2& q1, const Vec2& q2, double tol)
{
  return is_affine_diameter(k, difference_body(k), q1, q2, tol);
}

bool is_affine_diameter(const ConvexBody& k, const ConvexBody& dk, const Vec2& q1, const Vec2& q2,
                        double tol)
{
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  if (std::abs(signed_distance(k, q1)) > tol || std::abs(signed_distance(k, q2)) > tol) {
    throw PreconditionError("affine diameter test needs both points on the boundary");
  }
  return std::abs(signed_distance(dk, q1 - q2)) <= tol;
}

std::optional<std::pair<double, double>> row_span(const ConvexBody& k, double y)
{
  return std::visit(
      overloaded{[&](const ConvexPolygon& p) -> std::optional<std::pair<double, double>> {
                   double lo = std::numeric_limits<double>::infinity();
                   double hi = -lo;
                   const auto& v = p.vertices();
                   for (std::size_t i = 0, n = v.size(); i < n; ++i) {
                     const Vec2& a = v[i];
                     const Vec2& b = v[(i + 1) % n];
                     if ((a(1) - y) * (b(1) - y) > 0.0 || a(1) == b(1)) continue;
                     const double t = (y - a(1)) / (b(1) - a(1));
                     const double xx = a(0) + t * (b(0) - a(0));
                     lo = std::min(lo, xx);
                     hi = std::max(hi, xx);
                   }
                   if (!(hi > lo)) return std::nullopt;
                   return std::make_pair(lo, hi);
                 },
                 [&](const SupportBody& s) { return s.chord_at_offset(Vec2(1.0, 0.0), y); }},
      k);
}

const SupportBody& require_support_body(const ConvexBody& k)
{
  const auto* s = std::get_if<SupportBody>(&k);
  if (s == nullptr) {
    throw PreconditionError("operation needs a strictly convex smooth body; polygons are not admitted");
  }
  return *s;
}

}  // namespace cov
