#include "covariogram/support_body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "covariogram/errors.hpp"
#include "covariogram/roots.hpp"

namespace cov {

namespace {

// Location and value of the maximum of a trig series: dense scan, then Newton
// on the derivative.
std::pair<double, double> series_max(const TrigSeriesd& f)
{
  const int n = std::max(256, 16 * f.degree());
  double best_t = 0.0;
  double best_v = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    const double v = f(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  const double h = kTwoPi / n;
  double t = best_t;
  for (int it = 0; it < 30; ++it) {
    const auto j = f.jet(t);
    if (!(j.d2f < 0.0)) break;
    const double step = std::clamp(-j.df / j.d2f, -h, h);
    t += step;
    if (std::abs(step) < 1e-15) break;
  }
  const double v = f(t);
  if (v >= best_v) return {t, v};
  return {best_t, best_v};
}

// Normal angle on the front (increasing offset) or rear (decreasing offset)
// chain where p(t).n equals s; n = R u(beta).
double angle_at_offset(const SupportBody& k, double beta, double s, bool front)
{
  const Vec2 n = unit_vector(beta + 0.5 * kPi);
  auto fdf = [&](double t) {
    const auto b = k.boundary(t);
    return std::pair<double, double>(b.point.dot(n) - s, b.rho * std::cos(t - beta));
  };
  if (front) return roots::bracketed_newton(fdf, beta - 0.5 * kPi, beta + 0.5 * kPi);
  return roots::bracketed_newton(fdf, beta + 0.5 * kPi, beta + 1.5 * kPi);
}

}  // namespace

SupportBody::SupportBody(TrigSeriesd h, double precision) : h_(std::move(h)), precision_(precision)
{
  if (!(precision_ > 0.0) || !std::isfinite(precision_)) {
    throw PreconditionError("support body precision must be positive");
  }
  if (!std::isfinite(h_.a0()) || !h_.cos_coeffs().allFinite() || !h_.sin_coeffs().allFinite()) {
    throw PreconditionError("support coefficients must be finite");
  }
  min_rho_ = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kValidationGrid; ++i) {
    const auto j = h_.jet(kTwoPi * i / kValidationGrid);
    min_rho_ = std::min(min_rho_, j.f + j.d2f);
  }
  if (!(min_rho_ >= kMinCurvatureRadius)) {
    throw PreconditionError("support function is not strictly convex: min(h + h'') = " +
                            std::to_string(min_rho_));
  }
  h_rho_ = h_ * (h_ + h_.derivative().derivative());
  diameter_ = series_max(h_ + h_.half_turn()).second;
}

SupportBody SupportBody::disk(double radius, const Vec2& center)
{
  if (!(radius > 0.0)) throw PreconditionError("disk radius must be positive");
  TrigSeriesd h(radius, TrigSeriesd::Vector::Zero(1), TrigSeriesd::Vector::Zero(1));
  return SupportBody(h.plus_first_harmonic(center(0), center(1)).trimmed());
}

SupportBody SupportBody::ellipse(double semi_x, double semi_y, const Vec2& center)
{
  if (!(semi_x > 0.0) || !(semi_y > 0.0)) throw PreconditionError("ellipse semi-axes must be positive");
  constexpr int kSamples = 1024;
  constexpr int kMaxDegree = 96;
  Eigen::VectorXd vals(kSamples);
  for (int j = 0; j < kSamples; ++j) {
    const double t = kTwoPi * j / kSamples;
    vals[j] = std::hypot(semi_x * std::cos(t), semi_y * std::sin(t));
  }
  TrigSeriesd::Vector a = TrigSeriesd::Vector::Zero(kMaxDegree);
  TrigSeriesd::Vector b = TrigSeriesd::Vector::Zero(kMaxDegree);
  // odd harmonics vanish by symmetry; leaving them at zero keeps the
  // truncated body exactly centrally symmetric. Stop at the round-off floor.
  const double scale = std::max(semi_x, semi_y);
  int degree = kMaxDegree;
  for (int k = 2; k <= kMaxDegree; k += 2) {
    double ca = 0.0;
    for (int j = 0; j < kSamples; ++j) ca += vals[j] * std::cos(k * kTwoPi * j / kSamples);
    a[k - 1] = 2.0 * ca / kSamples;
    if (std::abs(a[k - 1]) < 1e-15 * scale) {
      a[k - 1] = 0.0;
      degree = k;
      break;
    }
  }
  const double a0 = vals.mean();
  TrigSeriesd h = TrigSeriesd(a0, TrigSeriesd::Vector(a.head(degree)), TrigSeriesd::Vector(b.head(degree))).trimmed();
  return SupportBody(h.plus_first_harmonic(center(0), center(1)));
}

SupportBody::BoundaryJet SupportBody::boundary(double t) const
{
  const auto j = h_.jet(t);
  const Vec2 u = unit_vector(t);
  const Vec2 ru = rot90(u);
  const double rho = j.f + j.d2f;
  return {j.f * u + j.df * ru, u, rho * ru, rho};
}

Vec2 SupportBody::point(double t) const
{
  const auto j = h_.jet(t);
  const Vec2 u = unit_vector(t);
  return j.f * u + j.df * rot90(u);
}

double SupportBody::radius_of_curvature(double t) const
{
  const auto j = h_.jet(t);
  return j.f + j.d2f;
}

double SupportBody::width(double t) const { return h_(t) + h_(t + kPi); }

double SupportBody::area() const
{
  double acc = h_.a0() * h_.a0();
  for (int i = 0; i < h_.degree(); ++i) {
    const double k = i + 1.0;
    const double ak = h_.cos_coeffs()[i];
    const double bk = h_.sin_coeffs()[i];
    acc += 0.5 * (1.0 - k * k) * (ak * ak + bk * bk);
  }
  return kPi * acc;
}

Vec2 SupportBody::steiner_point() const
{
  if (h_.degree() == 0) return Vec2::Zero();
  return Vec2(h_.cos_coeffs()[0], h_.sin_coeffs()[0]);
}

SupportBody SupportBody::translated(const Vec2& t) const
{
  return SupportBody(h_.plus_first_harmonic(t(0), t(1)), precision_);
}

SupportBody SupportBody::reflected(const Vec2& c) const
{
  return SupportBody(h_.half_turn().plus_first_harmonic(2.0 * c(0), 2.0 * c(1)), precision_);
}

SupportBody SupportBody::difference_body() const
{
  return SupportBody(h_ + h_.half_turn(), precision_);
}

ConvexPolygon SupportBody::polygonize(int n) const
{
  if (n < 16) throw PreconditionError("polygonize needs at least 16 vertices");
  std::vector<Vec2> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = point(kTwoPi * i / n);
  return ConvexPolygon(std::move(v));
}

std::pair<double, double> SupportBody::maximize_support_gap(const Vec2& q) const
{
  const int n = std::max(512, 32 * h_.degree());
  const double dt = kTwoPi / n;
  double best_t = 0.0;
  double best_v = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double t = dt * i;
    const double v = q.dot(unit_vector(t)) - h_(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  double t = best_t;
  for (int it = 0; it < 40; ++it) {
    const auto j = h_.jet(t);
    const Vec2 u = unit_vector(t);
    const double d1 = q.dot(rot90(u)) - j.df;
    const double d2 = -q.dot(u) - j.d2f;
    if (!(d2 < 0.0)) break;
    const double step = std::clamp(-d1 / d2, -dt, dt);
    t += step;
    if (std::abs(step) < 1e-15) break;
  }
  const double v = q.dot(unit_vector(t)) - h_(t);
  if (v >= best_v) return {wrap_angle(t), v};
  return {best_t, best_v};
}

double SupportBody::signed_distance(const Vec2& q) const { return maximize_support_gap(q).second; }

double SupportBody::nearest_normal_angle(const Vec2& q) const { return maximize_support_gap(q).first; }

std::optional<std::pair<double, double>> SupportBody::chord_at_offset(const Vec2& e, double s) const
{
  const double beta = angle_of(e);
  const double top = h_(beta + 0.5 * kPi);
  const double bottom = -h_(beta - 0.5 * kPi);
  if (!(s > bottom && s < top)) return std::nullopt;
  const Vec2 d = e.normalized();
  const double tf = angle_at_offset(*this, beta, s, true);
  const double tr = angle_at_offset(*this, beta, s, false);
  return std::make_pair(point(tr).dot(d), point(tf).dot(d));
}

ChordProfile chord_profile(const SupportBody& k, const Vec2& direction)
{
  const double beta = angle_of(direction);
  const Vec2 e = unit_vector(beta);
  auto fdf = [&](double g) {
    const auto a = k.boundary(g);
    const auto b = k.boundary(g + kPi);
    return std::pair<double, double>(det2(a.point - b.point, e), -(a.rho + b.rho) * std::cos(g - beta));
  };
  const double gamma = roots::bracketed_newton(fdf, beta - 0.5 * kPi, beta + 0.5 * kPi);
  const double len = (k.point(gamma) - k.point(gamma + kPi)).dot(e);
  return {beta, gamma, len};
}

std::optional<Crossings> solve_crossings(const SupportBody& k, const Vec2& x)
{
  const double len = x.norm();
  if (!(len > 0.0)) return std::nullopt;
  const ChordProfile prof = chord_profile(k, x);
  if (!(len < prof.max_chord)) return std::nullopt;
  const double beta = prof.beta;
  const Vec2 e = unit_vector(beta);
  const Vec2 n = rot90(e);

  // chord length as a function of the normal angle at its front end
  auto chord = [&](double tb) {
    const auto fb = k.boundary(tb);
    const double s = fb.point.dot(n);
    const double ta = angle_at_offset(k, beta, s, false);
    const auto ra = k.boundary(ta);
    const double l = (fb.point - ra.point).dot(e);
    const double dl = fb.rho * std::sin(ta - tb) / std::cos(ta - beta);
    return std::pair<double, double>(l - len, dl);
  };
  double t4 = roots::bracketed_newton(chord, beta - 0.5 * kPi, prof.gamma);
  double t1 = roots::bracketed_newton(chord, prof.gamma, beta + 0.5 * kPi);
  double t2 = angle_at_offset(k, beta, k.point(t1).dot(n), false);
  double t3 = angle_at_offset(k, beta, k.point(t4).dot(n), false);

  // Newton polish of p(front) - p(rear) = x on each chord
  auto polish = [&](double& tf, double& tr) {
    for (int it = 0; it < 3; ++it) {
      const auto f = k.boundary(tf);
      const auto r = k.boundary(tr);
      const Vec2 res = f.point - r.point - x;
      if (res.norm() == 0.0) return;
      Mat2 j;
      j.col(0) = f.tangent;
      j.col(1) = -r.tangent;
      const Vec2 step = adjugate_inverse(j) * res;
      if (!all_finite(step)) return;
      const double nf = tf - step(0);
      const double nr = tr - step(1);
      const Vec2 res2 = k.point(nf) - k.point(nr) - x;
      if (!(res2.norm() < res.norm())) return;
      tf = nf;
      tr = nr;
    }
  };
  polish(t1, t2);
  polish(t4, t3);
  return Crossings{t1, t2, t3, t4};
}

double intersection_area(const SupportBody& k, const Vec2& x, const Crossings& c)
{
  const Vec2 p2 = k.point(c.t2);
  const Vec2 p3 = k.point(c.t3);
  return 0.5 * (k.area_element_integral(c.t4, c.t1) + k.area_element_integral(c.t2, c.t3) +
                det2(x, p3 - p2));
}

BoundaryArc boundary_arc(const SupportBody& k, double theta_a, double theta_b, int n_samples)
{
  if (n_samples < 2) throw PreconditionError("an arc needs at least 2 samples");
  if (!(theta_b >= theta_a)) throw PreconditionError("arc end angle must not precede its start");
  BoundaryArc arc;
  arc.theta_a = wrap_angle(theta_a);
  arc.theta_b = arc.theta_a + (theta_b - theta_a);
  arc.samples.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    arc.samples.push_back(k.point(theta_a + (theta_b - theta_a) * i / (n_samples - 1)));
  }
  return arc;
}

}  // namespace cov
