#include "covariogram/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include "covariogram/errors.hpp"

namespace cov {

namespace {

double reflection_distance(const ConvexBody& k)
{
  const ConvexBody kc = reflect_about(k, steiner_point(k));
  constexpr int kDirections = 2048;
  double d = 0.0;
  for (int i = 0; i < kDirections; ++i) {
    const double t = kTwoPi * i / kDirections;
    d = std::max(d, std::abs(support(k, t) - support(kc, t)));
  }
  return d;
}

}  // namespace

double diagonal_tolerance(const SupportBody& k) { return 1e-9 * 2.0 * k.diameter(); }

SymmetryVerdict central_symmetry_test(const CovariogramOracle& o, int n_samples, double tol, std::uint64_t seed,
                                      const SamplingDomain& domain)
{
  if (n_samples < 64) throw PreconditionError("symmetry test needs at least 64 samples");
  const std::vector<Vec2> pts = sample_domain(o, n_samples, seed, domain);
  SymmetryVerdict v;
  v.samples = n_samples;
  v.seed = seed;
  v.tol = tol > 0.0 ? tol : o.default_tolerance(pts);

  std::vector<double> residuals;
  residuals.reserve(pts.size());
  for (const auto& x : pts) {
    const double r = std::abs(o.hessian(x).determinant() + 1.0);
    residuals.push_back(r);
    if (r > v.max_residual || residuals.size() == 1) {
      v.max_residual = r;
      v.witness = x;
    }
  }
  v.is_symmetric = v.max_residual <= v.tol;

  if (const ConvexBody* body = o.body()) {
    const double d = reflection_distance(*body);
    v.reflection_distance = d;
    v.geometric_symmetric = d <= 1e-9 * diameter(*body);
    if (const auto* s = std::get_if<SupportBody>(body)) {
      const SupportBody dk = s->difference_body();
      const double dtol = diagonal_tolerance(*s);
      int mismatches = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const DiagonalTest dt = affine_diameter_diagonals(*s, dk, pts[i], dtol);
        if ((dt.diag13 || dt.diag24) != (residuals[i] <= v.tol)) ++mismatches;
      }
      v.diagonal_mismatches = mismatches;
    }
  }
  return v;
}

DiagonalTest affine_diameter_diagonals(const SupportBody& k, const Vec2& x, double tol)
{
  return affine_diameter_diagonals(k, k.difference_body(), x, tol);
}

DiagonalTest affine_diameter_diagonals(const SupportBody& k, const SupportBody& dk, const Vec2& x, double tol)
{
  const InscribedParallelogram par = inscribed_parallelogram(k, x);
  const ConvexBody kb(k);
  const ConvexBody dkb(dk);
  DiagonalTest t;
  t.diag13 = is_affine_diameter(kb, dkb, par.p[0], par.p[2], tol);
  t.diag24 = is_affine_diameter(kb, dkb, par.p[1], par.p[3], tol);
  return t;
}

SymmetricHexagon::SymmetricHexagon(const std::array<Vec2, 6>& vertices, double tol) : h_(vertices)
{
  double scale = 1.0;
  for (const auto& v : h_) {
    if (!all_finite(v)) throw PreconditionError("hexagon vertex is not finite");
    scale = std::max(scale, v.cwiseAbs().maxCoeff());
  }
  const Vec2 c = center();
  for (int i = 0; i < 3; ++i) {
    if ((h_[i] + h_[i + 3] - 2.0 * c).norm() > tol * scale) {
      throw PreconditionError("hexagon is not centrally symmetric");
    }
  }
  for (int i = 0; i < 6; ++i) {
    const Vec2 e0 = h_[(i + 1) % 6] - h_[i];
    const Vec2 e1 = h_[(i + 2) % 6] - h_[(i + 1) % 6];
    if (!(det2(e0, e1) > 0.0)) throw PreconditionError("hexagon is not strictly convex and counterclockwise");
  }
}

Vec2 SymmetricHexagon::center() const
{
  Vec2 c = Vec2::Zero();
  for (const auto& v : h_) c += v;
  return c / 6.0;
}

SymmetricHexagon hexagon_from_parallelograms(const InscribedParallelogram& p, const InscribedParallelogram& q,
                                             double tol)
{
  double scale = 1.0;
  for (int i = 0; i < 4; ++i) scale = std::max({scale, p.p[i].norm(), q.p[i].norm()});
  const double t = tol * scale;
  if ((p.p[0] - q.p[0]).norm() > t || (p.p[2] - q.p[2]).norm() > t) {
    throw PreconditionError("parallelograms do not share the diagonal [p1, p3]");
  }
  if ((p.x - q.x).norm() <= t) throw PreconditionError("parallelograms coincide");
  std::vector<Vec2> hull = convex_hull({p.p[0], p.p[1], p.p[2], p.p[3], q.p[1], q.p[3]});
  if (hull.size() != 6) throw PreconditionError("hull of the two parallelograms is not a hexagon");
  std::size_t start = 0;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    if ((hull[i] - p.p[2]).norm() < (hull[start] - p.p[2]).norm()) start = i;
  }
  std::array<Vec2, 6> h;
  for (std::size_t i = 0; i < 6; ++i) h[i] = hull[(start + i) % 6];
  return SymmetricHexagon(h, tol);
}

HexagonTestReport hexagon_inscription_test(const CovariogramOracle& o, const SymmetricHexagon& hex, double tol)
{
  HexagonTestReport rep;
  const double margin = 2.0 * o.step();
  for (int i = 1; i <= 3; ++i) {
    rep.x[i - 1] = hex.diagonal_shift(i);
    if (!o.inside(rep.x[i - 1], margin)) {
      throw PreconditionError("hexagon diagonal shift x_" + std::to_string(i) + " is outside the support domain");
    }
  }
  if (tol > 0.0) {
    rep.tol = tol;
  } else if (o.body() != nullptr) {
    rep.tol = 1e-6;
  } else {
    double change = 0.0;
    for (const auto& x : rep.x) {
      if (!o.inside(x, 4.0 * o.step())) continue;
      change = std::max(change, (fd_gradient(o, x, o.step()) - fd_gradient(o, x, 2.0 * o.step())).norm());
    }
    rep.tol = 10.0 * change;
  }
  const Mat2 r = rot90<double>();
  bool ok = true;
  rep.product = 1.0;
  for (int i = 1; i <= 3; ++i) {
    const Vec2& x = rep.x[i - 1];
    const Vec2 d = -(r * o.gradient(x));
    const Vec2 target = hex.h(2 * i + 2) - hex.h(2 * i + 1);
    rep.residuals[i - 1] = (d - target).norm();
    rep.one_plus_detG[i - 1] = 1.0 + o.hessian(x).determinant();
    rep.product *= rep.one_plus_detG[i - 1];
    ok = ok && rep.residuals[i - 1] <= rep.tol;
  }
  rep.passed = ok && rep.product >= -rep.tol;
  return rep;
}

}  // namespace cov
