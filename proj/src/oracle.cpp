#include "covariogram/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "covariogram/errors.hpp"
#include "covariogram/identities.hpp"
#include "covariogram/parallelogram.hpp"

namespace cov {

namespace {

// Cubic B-spline interpolation prefilter (single pole, mirror boundaries).
void bspline_prefilter(double* c, int n, std::ptrdiff_t stride)
{
  if (n < 2) return;
  const double z = std::sqrt(3.0) - 2.0;
  const double gain = (1.0 - z) * (1.0 - 1.0 / z);
  auto at = [&](int k) -> double& { return c[k * stride]; };
  for (int k = 0; k < n; ++k) at(k) *= gain;

  const int horizon = std::min(n, static_cast<int>(std::ceil(std::log(1e-17) / std::log(std::abs(z)))));
  double sum = at(0);
  double zk = z;
  for (int k = 1; k < horizon; ++k) {
    sum += zk * at(k);
    zk *= z;
  }
  at(0) = sum;
  for (int k = 1; k < n; ++k) at(k) += z * at(k - 1);
  at(n - 1) = (z / (z * z - 1.0)) * (z * at(n - 2) + at(n - 1));
  for (int k = n - 2; k >= 0; --k) at(k) = z * (at(k + 1) - at(k));
}

int mirror_index(int k, int n)
{
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  k %= period;
  if (k < 0) k += period;
  return k < n ? k : period - k;
}

void bspline_weights(double t, double w[4])
{
  const double s = 1.0 - t;
  w[0] = s * s * s / 6.0;
  w[1] = (4.0 - 6.0 * t * t + 3.0 * t * t * t) / 6.0;
  w[2] = (4.0 - 6.0 * s * s + 3.0 * s * s * s) / 6.0;
  w[3] = t * t * t / 6.0;
}

Vec2 checked_stencil_point(const CovariogramOracle& o, const Vec2& x, double step)
{
  if (!all_finite(x)) throw PreconditionError("evaluation point is not finite");
  if (!(step > 0.0)) throw PreconditionError("finite-difference step must be positive");
  if (!o.inside(x, 2.0 * step)) {
    throw PreconditionError("finite-difference stencil leaves the interior of the support or reaches the origin");
  }
  return x;
}

}  // namespace

Vec2 CovariogramOracle::gradient(const Vec2& x) const { return fd_gradient(*this, x); }

Mat2 CovariogramOracle::hessian(const Vec2& x) const { return fd_hessian(*this, x); }

bool CovariogramOracle::inside(const Vec2& x, double margin) const
{
  const double r = x.norm();
  if (!(r >= margin) || r == 0.0) return false;
  return dk_radius(angle_of(x)) - r >= margin;
}

Vec2 fd_gradient(const CovariogramOracle& o, const Vec2& x) { return fd_gradient(o, x, o.step()); }

Vec2 fd_gradient(const CovariogramOracle& o, const Vec2& x, double h)
{
  checked_stencil_point(o, x, h);
  const Vec2 ex(h, 0.0);
  const Vec2 ey(0.0, h);
  return Vec2(o.value(x + ex) - o.value(x - ex), o.value(x + ey) - o.value(x - ey)) / (2.0 * h);
}

Mat2 fd_hessian(const CovariogramOracle& o, const Vec2& x) { return fd_hessian(o, x, o.step()); }

Mat2 fd_hessian(const CovariogramOracle& o, const Vec2& x, double h)
{
  checked_stencil_point(o, x, h);
  const Vec2 ex(h, 0.0);
  const Vec2 ey(0.0, h);
  const double g0 = o.value(x);
  const double hh = h * h;
  Mat2 m;
  m(0, 0) = (o.value(x + ex) - 2.0 * g0 + o.value(x - ex)) / hh;
  m(1, 1) = (o.value(x + ey) - 2.0 * g0 + o.value(x - ey)) / hh;
  m(0, 1) = (o.value(x + ex + ey) - o.value(x + ex - ey) - o.value(x - ex + ey) + o.value(x - ex - ey)) / (4.0 * hh);
  m(1, 0) = m(0, 1);
  return m;
}

AnalyticOracle::AnalyticOracle(ConvexBody k) : body_(std::move(k)), dk_(difference_body(body_))
{
  dk_diameter_ = diameter(dk_);
  step_ = 1e-4 * dk_diameter_;
}

double AnalyticOracle::value(const Vec2& x) const { return covariogram_value(body_, x); }

Vec2 AnalyticOracle::gradient(const Vec2& x) const
{
  if (const auto* s = std::get_if<SupportBody>(&body_)) return gradient_analytic(*s, x);
  return fd_gradient(*this, x);
}

Mat2 AnalyticOracle::hessian(const Vec2& x) const
{
  if (const auto* s = std::get_if<SupportBody>(&body_)) return hessian_analytic(*s, x);
  return fd_hessian(*this, x);
}

double AnalyticOracle::dk_radius(double psi) const
{
  const Vec2 u = unit_vector(psi);
  if (const auto* s = std::get_if<SupportBody>(&body_)) return chord_profile(*s, u).max_chord;
  const auto& v = std::get<ConvexPolygon>(dk_).vertices();
  double r = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const Vec2 e = v[(i + 1) % n] - v[i];
    const Vec2 normal(e(1), -e(0));
    const double nu = normal.dot(u);
    if (nu > 0.0) r = std::min(r, normal.dot(v[i]) / nu);
  }
  return r;
}

GridOracle::GridOracle(CovariogramGrid grid, int radial_samples) : grid_(std::move(grid))
{
  const int n = grid_.size();
  if (n < 4 || grid_.values.cols() != n) throw PreconditionError("grid must be square with at least 4 nodes");
  if (!(grid_.spacing > 0.0)) throw PreconditionError("grid spacing must be positive");
  if (!grid_.values.allFinite()) throw PreconditionError("grid contains non-finite values");
  if (radial_samples < 16 || radial_samples % 2 != 0) {
    throw PreconditionError("radial table needs an even number of at least 16 samples");
  }
  coeffs_ = grid_.values;
  for (int j = 0; j < n; ++j) bspline_prefilter(&coeffs_(0, j), n, 1);
  for (int i = 0; i < n; ++i) bspline_prefilter(&coeffs_(i, 0), n, coeffs_.outerStride());
  build_radial_table(radial_samples);
}

double GridOracle::spline(const Vec2& x) const
{
  const int n = grid_.size();
  const Vec2 xi = (x - grid_.origin) / grid_.spacing;
  const double fx = std::floor(xi(0));
  const double fy = std::floor(xi(1));
  double wx[4];
  double wy[4];
  bspline_weights(xi(0) - fx, wx);
  bspline_weights(xi(1) - fy, wy);
  const int ix = static_cast<int>(fx) - 1;
  const int iy = static_cast<int>(fy) - 1;
  double acc = 0.0;
  for (int b = 0; b < 4; ++b) {
    const int jj = mirror_index(iy + b, n);
    double row = 0.0;
    for (int a = 0; a < 4; ++a) row += wx[a] * coeffs_(mirror_index(ix + a, n), jj);
    acc += wy[b] * row;
  }
  return acc;
}

double GridOracle::value(const Vec2& x) const
{
  if (!all_finite(x)) throw PreconditionError("evaluation point is not finite");
  const double r = x.norm();
  if (r > 0.0 && r >= dk_radius(angle_of(x))) return 0.0;
  return std::max(0.0, spline(x));
}

double GridOracle::dk_radius(double psi) const
{
  const int m = static_cast<int>(radial_.size());
  const double pos = wrap_angle(psi) / kTwoPi * m;
  const int i0 = static_cast<int>(std::floor(pos)) % m;
  const double t = pos - std::floor(pos);
  return (1.0 - t) * radial_[static_cast<std::size_t>(i0)] + t * radial_[static_cast<std::size_t>((i0 + 1) % m)];
}

// Bilinear interpolation of g^(2/3) inside a cell whose four nodes are all
// positive; near bd DK this quantity vanishes linearly.
double GridOracle::bilinear_root_measure(const Vec2& x, bool& ok) const
{
  const int n = grid_.size();
  const Vec2 xi = (x - grid_.origin) / grid_.spacing;
  const int i = static_cast<int>(std::floor(xi(0)));
  const int j = static_cast<int>(std::floor(xi(1)));
  ok = false;
  if (i < 0 || j < 0 || i + 1 >= n || j + 1 >= n) return 0.0;
  const double v00 = grid_.values(i, j);
  const double v10 = grid_.values(i + 1, j);
  const double v01 = grid_.values(i, j + 1);
  const double v11 = grid_.values(i + 1, j + 1);
  if (!(v00 > 0.0 && v10 > 0.0 && v01 > 0.0 && v11 > 0.0)) return 0.0;
  ok = true;
  const double tx = xi(0) - i;
  const double ty = xi(1) - j;
  auto m = [](double v) { return std::cbrt(v * v); };
  return (1.0 - ty) * ((1.0 - tx) * m(v00) + tx * m(v10)) + ty * ((1.0 - tx) * m(v01) + tx * m(v11));
}

void GridOracle::build_radial_table(int samples)
{
  radial_.assign(static_cast<std::size_t>(samples), 0.0);
  const double h = grid_.spacing;
  const double dr = 0.25 * h;
  const double r_max = std::abs(grid_.origin(0)) * std::sqrt(2.0) + 2.0 * h;
  constexpr int kFit = 8;
  for (int m = 0; m < samples / 2; ++m) {
    const double psi = kTwoPi * m / samples;
    const Vec2 u = unit_vector(psi);
    std::vector<double> rs;
    std::vector<double> ts;
    bool ok = true;
    for (double r = 0.0; r < r_max; r += dr) {
      const double t = bilinear_root_measure(r * u, ok);
      if (!ok) break;
      rs.push_back(r);
      ts.push_back(t);
    }
    double radius = rs.empty() ? 0.0 : rs.back();
    if (rs.size() >= 3) {
      // least-squares line through the outermost samples, extrapolated to zero
      const std::size_t k0 = rs.size() > kFit ? rs.size() - kFit : 0;
      double sr = 0.0, st = 0.0, srr = 0.0, srt = 0.0;
      const double cnt = static_cast<double>(rs.size() - k0);
      for (std::size_t k = k0; k < rs.size(); ++k) {
        sr += rs[k];
        st += ts[k];
        srr += rs[k] * rs[k];
        srt += rs[k] * ts[k];
      }
      const double slope = (cnt * srt - sr * st) / (cnt * srr - sr * sr);
      const double icpt = (st - slope * sr) / cnt;
      if (slope < 0.0) {
        const double zero = -icpt / slope;
        radius = std::clamp(zero, rs.back(), rs.back() + 2.0 * h);
      } else {
        radius = rs.back() + dr;
      }
    }
    radial_[static_cast<std::size_t>(m)] = radius;
    radial_[static_cast<std::size_t>(m + samples / 2)] = radius;
  }
  dk_diameter_ = 2.0 * *std::max_element(radial_.begin(), radial_.end());
}

double GridOracle::default_tolerance(const std::vector<Vec2>& samples) const
{
  const double h = grid_.spacing;
  double worst = 0.0;
  for (const auto& x : samples) {
    if (!inside(x, 8.0 * h)) continue;
    const double d2 = fd_hessian(*this, x, 2.0 * h).determinant();
    const double d4 = fd_hessian(*this, x, 4.0 * h).determinant();
    worst = std::max(worst, std::abs(d2 - d4));
  }
  return 10.0 * worst;
}

}  // namespace cov
