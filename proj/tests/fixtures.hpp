#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "covariogram/body.hpp"

namespace fixtures {

using namespace cov;

inline ConvexBody square() { return ConvexPolygon({Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)}); }
inline ConvexBody triangle() { return ConvexPolygon({Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)}); }
inline SupportBody disk() { return SupportBody::disk(1.0); }
inline SupportBody ellipse() { return SupportBody::ellipse(1.0, 0.6); }

inline SupportBody support(double a0, std::vector<double> a, std::vector<double> b)
{
  return SupportBody(TrigSeriesd(a0, std::move(a), std::move(b)));
}

inline SupportBody trefoil() { return support(1.0, {0, 0, 0.1}, {0, 0, 0}); }

// the 0.08 cos 3t + 0.05 sin 4t body has negative curvature radius; this one
// keeps both harmonics and stays strictly convex
inline SupportBody mixed() { return support(1.0, {0, 0, 0.04, 0}, {0, 0, 0, 0.025}); }

struct Named {
  std::string name;
  ConvexBody body;
};

inline std::vector<Named> support_fixtures()
{
  return {{"disk", disk()}, {"ellipse", ellipse()}, {"trefoil", trefoil()}, {"mixed", mixed()}};
}

inline std::vector<Named> asymmetric_fixtures() { return {{"trefoil", trefoil()}, {"mixed", mixed()}}; }

inline std::vector<Named> all_fixtures()
{
  std::vector<Named> out = {{"square", square()}, {"triangle", triangle()}};
  for (auto& f : support_fixtures()) out.push_back(f);
  return out;
}

// unit disk covariogram at distance r
inline double disk_covariogram(double r)
{
  if (r >= 2.0) return 0.0;
  return 2.0 * std::acos(r / 2.0) - 0.5 * r * std::sqrt(4.0 - r * r);
}

// polygons as they are, support bodies as a fine inscribed polygon (chord
// error O(n^-2))
inline ConvexPolygon chord_reference(const ConvexBody& k)
{
  if (const auto* p = std::get_if<ConvexPolygon>(&k)) return *p;
  return std::get<SupportBody>(k).polygonize(1 << 15);
}

// length of the chord on the line {p0 + s u}, clipped against the edge
// half-planes; independent of the library's chord code
inline double chord_length(const ConvexPolygon& poly, const Vec2& p0, const Vec2& u)
{
  {
    const auto* p = &poly;
    double lo = -1e300;
    double hi = 1e300;
    const auto& v = p->vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec2 e = v[(i + 1) % v.size()] - v[i];
      const Vec2 n(e(1), -e(0));  // outward for ccw
      const double a = n.dot(u);
      const double b = n.dot(v[i] - p0);
      if (std::abs(a) < 1e-300) {
        if (b < 0.0) return 0.0;
        continue;
      }
      if (a > 0.0)
        hi = std::min(hi, b / a);
      else
        lo = std::max(lo, b / a);
    }
    return std::max(0.0, hi - lo);
  }
}

}  // namespace fixtures
