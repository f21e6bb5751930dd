#include "covariogram/covariogram.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <unsupported/Eigen/FFT>

#include "covariogram/errors.hpp"

namespace cov {

namespace {

bool same_series(const SupportBody& a, const SupportBody& b)
{
  const auto& ha = a.support();
  const auto& hb = b.support();
  return ha.a0() == hb.a0() && ha.cos_coeffs() == hb.cos_coeffs() && ha.sin_coeffs() == hb.sin_coeffs();
}

constexpr int kPolygonizeDefault = 4096;

ConvexPolygon as_polygon(const ConvexBody& k)
{
  if (const auto* p = std::get_if<ConvexPolygon>(&k)) return *p;
  return std::get<SupportBody>(k).polygonize(kPolygonizeDefault);
}

double polygon_overlap(const ConvexPolygon& a, const ConvexPolygon& b, const Vec2& x)
{
  const auto inter = convex_intersection(a, b.translated(x));
  return inter ? inter->area() : 0.0;
}

using Complex = std::complex<double>;

// In-place 2-D transform of a square row-major complex array.
void fft2(std::vector<Complex>& data, int m, bool inverse)
{
  Eigen::FFT<double> fft;
  std::vector<Complex> in(static_cast<std::size_t>(m));
  std::vector<Complex> out;
  for (int pass = 0; pass < 2; ++pass) {
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        const std::size_t idx = pass == 0 ? static_cast<std::size_t>(r) * m + c : static_cast<std::size_t>(c) * m + r;
        in[static_cast<std::size_t>(c)] = data[idx];
      }
      if (inverse)
        fft.inv(out, in);
      else
        fft.fwd(out, in);
      for (int c = 0; c < m; ++c) {
        const std::size_t idx = pass == 0 ? static_cast<std::size_t>(r) * m + c : static_cast<std::size_t>(c) * m + r;
        data[idx] = out[static_cast<std::size_t>(c)];
      }
    }
  }
}

}  // namespace

double covariogram_value(const ConvexBody& k, const Vec2& x)
{
  if (!all_finite(x)) throw PreconditionError("shift vector is not finite");
  if (const auto* p = std::get_if<ConvexPolygon>(&k)) return polygon_overlap(*p, *p, x);
  const auto& s = std::get<SupportBody>(k);
  if (x.isZero(0.0)) return s.area();
  const auto c = solve_crossings(s, x);
  if (!c) return 0.0;
  return std::max(0.0, intersection_area(s, x, *c));
}

double covariogram_value_polygonized(const SupportBody& k, const Vec2& x, int n)
{
  const ConvexPolygon p = k.polygonize(n);
  return polygon_overlap(p, p, x);
}

double cross_covariogram(const ConvexBody& k, const ConvexBody& l, const Vec2& x)
{
  if (!all_finite(x)) throw PreconditionError("shift vector is not finite");
  const auto* sk = std::get_if<SupportBody>(&k);
  const auto* sl = std::get_if<SupportBody>(&l);
  if (sk && sl && same_series(*sk, *sl)) return covariogram_value(k, x);
  return polygon_overlap(as_polygon(k), as_polygon(l), x);
}

CovariogramGrid covariogram_grid(const ConvexBody& k, int n, const std::string& body_id)
{
  if (n < 32) throw PreconditionError("covariogram grid needs n >= 32");
  const auto [lo, hi] = bounding_box(k);
  const double half = (hi - lo).maxCoeff();
  const double s = half / (0.5 * (n - 1) - 2.0);

  CovariogramGrid g;
  g.spacing = s;
  g.origin = Vec2::Constant(-0.5 * (n - 1) * s);
  g.values = Eigen::MatrixXd::Zero(n, n);
  g.body_id = body_id;

  // g is even: fill one half and mirror through the center node
  const long total = static_cast<long>(n) * n;
  for (long idx = 0; idx <= (total - 1) / 2; ++idx) {
    const int i = static_cast<int>(idx % n);
    const int j = static_cast<int>(idx / n);
    const double v = covariogram_value(k, g.node(i, j));
    g.values(i, j) = v;
    g.values(n - 1 - i, n - 1 - j) = v;
  }
  return g;
}

ChordLengthDistribution chord_length_cdf(const ConvexBody& k, const Vec2& u, const std::vector<double>& rs)
{
  if (!all_finite(u) || std::abs(u.norm() - 1.0) > 1e-12) {
    throw PreconditionError("chord direction must be a unit vector");
  }
  const double delta = 1e-4 * 2.0 * diameter(k);
  ChordLengthDistribution out;
  out.direction = u;
  out.r = rs;
  out.F.reserve(rs.size());
  auto g = [&](double r) { return covariogram_value(k, r * u); };
  for (double r : rs) {
    if (!(r >= 0.0)) throw PreconditionError("chord lengths must be non-negative");
    double f;
    if (r < delta) {
      f = -(-3.0 * g(r) + 4.0 * g(r + delta) - g(r + 2.0 * delta)) / (2.0 * delta);
    } else {
      f = -(g(r + delta) - g(r - delta)) / (2.0 * delta);
    }
    out.F.push_back(std::max(0.0, f));
  }
  return out;
}

ConvolutionReport convolution_check(const ConvexBody& k, int n)
{
  if (n < 128 || (n & (n - 1)) != 0) throw PreconditionError("convolution check needs a power of two n >= 128");
  const auto [lo, hi] = bounding_box(k);
  const Vec2 center = 0.5 * (lo + hi);
  const double a = 1.02 * (hi - lo).maxCoeff() / n;
  const Vec2 base = center - Vec2::Constant(0.5 * n * a);

  // one run of pixel columns per row (convex body)
  std::vector<int> run_lo(static_cast<std::size_t>(n), 0);
  std::vector<int> run_hi(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    const auto span = row_span(k, base(1) + (j + 0.5) * a);
    if (!span) continue;
    const int i0 = std::max(0, static_cast<int>(std::ceil((span->first - base(0)) / a - 0.5)));
    const int i1 = std::min(n - 1, static_cast<int>(std::floor((span->second - base(0)) / a - 0.5)));
    run_lo[static_cast<std::size_t>(j)] = i0;
    run_hi[static_cast<std::size_t>(j)] = i1;
  }

  const int m = 2 * n - 1;
  ConvolutionReport rep;
  rep.n = n;
  rep.pixel = a;
  rep.autocorrelation = Eigen::MatrixXd::Zero(m, m);
  // A(d) = #{p : I(p) = I(p - d) = 1}
  for (int dy = -(n - 1); dy <= n - 1; ++dy) {
    for (int j = std::max(0, dy); j < std::min(n, n + dy); ++j) {
      const auto ja = static_cast<std::size_t>(j);
      const auto jb = static_cast<std::size_t>(j - dy);
      if (run_hi[ja] < run_lo[ja] || run_hi[jb] < run_lo[jb]) continue;
      for (int dx = -(n - 1); dx <= n - 1; ++dx) {
        const int c = std::min(run_hi[ja], run_hi[jb] + dx) - std::max(run_lo[ja], run_lo[jb] + dx) + 1;
        if (c > 0) rep.autocorrelation(dx + n - 1, dy + n - 1) += c;
      }
    }
  }

  const int p = 2 * n;
  std::vector<Complex> buf(static_cast<std::size_t>(p) * p, Complex(0.0, 0.0));
  for (int j = 0; j < n; ++j) {
    for (int i = run_lo[static_cast<std::size_t>(j)]; i <= run_hi[static_cast<std::size_t>(j)]; ++i) {
      buf[static_cast<std::size_t>(j) * p + i] = 1.0;
    }
  }
  fft2(buf, p, false);
  for (auto& z : buf) z = std::norm(z);
  fft2(buf, p, true);
  double spec_err = 0.0;
  for (int dy = -(n - 1); dy <= n - 1; ++dy) {
    for (int dx = -(n - 1); dx <= n - 1; ++dx) {
      const std::size_t idx = static_cast<std::size_t>((dy + p) % p) * p + static_cast<std::size_t>((dx + p) % p);
      spec_err = std::max(spec_err, std::abs(buf[idx].real() - rep.autocorrelation(dx + n - 1, dy + n - 1)));
    }
  }
  rep.spectral_vs_direct = spec_err;

  const int stride = std::max(1, m / 63);
  double exact_err = 0.0;
  for (int dy = -(n - 1); dy <= n - 1; dy += stride) {
    for (int dx = -(n - 1); dx <= n - 1; dx += stride) {
      const double g = covariogram_value(k, a * Vec2(dx, dy));
      exact_err = std::max(exact_err, std::abs(g - a * a * rep.autocorrelation(dx + n - 1, dy + n - 1)));
    }
  }
  rep.direct_vs_exact = exact_err;
  return rep;
}

}  // namespace cov
