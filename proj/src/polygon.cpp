#include "covariogram/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "covariogram/errors.hpp"

namespace cov {

namespace {

double scale_of(const std::vector<Vec2>& pts)
{
  double s = 0.0;
  for (const auto& p : pts) s = std::max(s, p.cwiseAbs().maxCoeff());
  return std::max(s, 1e-300);
}

double loop_area(const std::vector<Vec2>& v)
{
  double a = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) a += det2(v[i], v[(i + 1) % n]);
  return 0.5 * a;
}

std::size_t lowest_vertex(const std::vector<Vec2>& v)
{
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i](1) < v[best](1) || (v[i](1) == v[best](1) && v[i](0) < v[best](0))) best = i;
  }
  return best;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Vec2> ccw_vertices) : vertices_(std::move(ccw_vertices))
{
  const std::size_t n = vertices_.size();
  if (n < 3) throw PreconditionError("polygon needs at least 3 vertices");
  for (const auto& v : vertices_) {
    if (!all_finite(v)) throw PreconditionError("polygon vertex is not finite");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = vertices_[i];
    const Vec2& b = vertices_[(i + 1) % n];
    const Vec2& c = vertices_[(i + 2) % n];
    if (a == b) throw PreconditionError("polygon has a repeated vertex");
    if (!(det2(b - a, c - b) > 0.0)) {
      throw PreconditionError("polygon is not strictly convex and counterclockwise at vertex " +
                              std::to_string((i + 1) % n));
    }
  }
  if (!(loop_area(vertices_) > 0.0)) throw PreconditionError("polygon has non-positive area");
}

double ConvexPolygon::area() const { return loop_area(vertices_); }

double polygon_area(const ConvexPolygon& p) { return p.area(); }

Vec2 ConvexPolygon::centroid() const
{
  Vec2 acc = Vec2::Zero();
  double a2 = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = vertices_[i];
    const Vec2& q = vertices_[(i + 1) % n];
    const double c = det2(p, q);
    acc += c * (p + q);
    a2 += c;
  }
  return acc / (3.0 * a2);
}

double ConvexPolygon::support(const Vec2& direction) const
{
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices_) best = std::max(best, v.dot(direction));
  return best;
}

double ConvexPolygon::signed_distance(const Vec2& p) const
{
  const std::size_t n = vertices_.size();
  double max_line = -std::numeric_limits<double>::infinity();
  double min_seg = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = vertices_[i];
    const Vec2& b = vertices_[(i + 1) % n];
    const Vec2 e = b - a;
    const double len = e.norm();
    // outward normal of a CCW edge is -R e / |e|
    max_line = std::max(max_line, -det2(e, p - a) / len);
    const double t = std::clamp((p - a).dot(e) / (len * len), 0.0, 1.0);
    min_seg = std::min(min_seg, (a + t * e - p).norm());
  }
  return max_line <= 0.0 ? max_line : min_seg;
}

bool ConvexPolygon::contains(const Vec2& p, double tol) const { return signed_distance(p) <= tol; }

ConvexPolygon ConvexPolygon::translated(const Vec2& t) const
{
  std::vector<Vec2> v = vertices_;
  for (auto& p : v) p += t;
  return ConvexPolygon(std::move(v));
}

ConvexPolygon ConvexPolygon::reflected(const Vec2& c) const
{
  // a point reflection is a half turn, so CCW order is preserved
  std::vector<Vec2> v = vertices_;
  for (auto& p : v) p = 2.0 * c - p;
  return ConvexPolygon(std::move(v));
}

ConvexPolygon ConvexPolygon::scaled(double s) const
{
  if (!(s > 0.0)) throw PreconditionError("scale factor must be positive");
  std::vector<Vec2> v = vertices_;
  for (auto& p : v) p *= s;
  return ConvexPolygon(std::move(v));
}

std::pair<Vec2, Vec2> ConvexPolygon::bounds() const
{
  Vec2 lo = vertices_.front();
  Vec2 hi = vertices_.front();
  for (const auto& v : vertices_) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  return {lo, hi};
}

std::optional<ConvexPolygon> make_polygon(std::vector<Vec2> loop, double rel_tol)
{
  if (loop.size() < 3) return std::nullopt;
  const double s = scale_of(loop);
  const double dup_tol = rel_tol * s;
  const double col_tol = rel_tol * s * s;

  std::vector<Vec2> v;
  v.reserve(loop.size());
  for (const auto& p : loop) {
    if (v.empty() || (p - v.back()).norm() > dup_tol) v.push_back(p);
  }
  while (v.size() > 1 && (v.front() - v.back()).norm() <= dup_tol) v.pop_back();

  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
      const std::size_t n = v.size();
      const Vec2& a = v[(i + n - 1) % n];
      const Vec2& b = v[i];
      const Vec2& c = v[(i + 1) % n];
      if (det2(b - a, c - b) <= col_tol) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (v.size() < 3 || loop_area(v) <= col_tol) return std::nullopt;
  return ConvexPolygon(std::move(v));
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts)
{
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1));
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && det2(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0.0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    const Vec2& p = pts[i];
    while (k >= t && det2(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0.0) --k;
    h[k++] = p;
  }
  h.resize(k - 1);
  return h;
}

std::optional<ConvexPolygon> convex_intersection(const ConvexPolygon& a, const ConvexPolygon& b)
{
  std::vector<Vec2> out = a.vertices();
  std::vector<Vec2> in;
  const auto& clip = b.vertices();
  const std::size_t m = clip.size();
  for (std::size_t j = 0; j < m && !out.empty(); ++j) {
    const Vec2& c0 = clip[j];
    const Vec2 e = clip[(j + 1) % m] - c0;
    in.swap(out);
    out.clear();
    const std::size_t n = in.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& p = in[i];
      const Vec2& q = in[(i + 1) % n];
      const double sp = det2(e, p - c0);
      const double sq = det2(e, q - c0);
      if (sp >= 0.0) out.push_back(p);
      if ((sp >= 0.0) != (sq >= 0.0)) {
        const double t = sp / (sp - sq);
        out.push_back(p + t * (q - p));
      }
    }
  }
  return make_polygon(std::move(out));
}

ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b)
{
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  const std::size_t na = va.size();
  const std::size_t nb = vb.size();
  std::size_t i = lowest_vertex(va);
  std::size_t j = lowest_vertex(vb);
  std::vector<Vec2> out;
  out.reserve(na + nb);
  std::size_t ia = 0;
  std::size_t jb = 0;
  while (ia < na || jb < nb) {
    out.push_back(va[i] + vb[j]);
    const Vec2 ea = va[(i + 1) % na] - va[i];
    const Vec2 eb = vb[(j + 1) % nb] - vb[j];
    const double c = det2(ea, eb);
    if (jb == nb || (ia < na && c > 0.0)) {
      i = (i + 1) % na;
      ++ia;
    } else if (ia == na || c < 0.0) {
      j = (j + 1) % nb;
      ++jb;
    } else {
      i = (i + 1) % na;
      j = (j + 1) % nb;
      ++ia;
      ++jb;
    }
  }
  auto p = make_polygon(std::move(out));
  if (!p) throw NumericalError("Minkowski sum degenerated");
  return *p;
}

}  // namespace cov
