#include "covariogram/identities.hpp"

#include <cmath>

#include "covariogram/errors.hpp"
#include "covariogram/oracle.hpp"

namespace cov {

Mat2 hessian_from_normals(const std::array<Vec2, 4>& u)
{
  return u[1] * u[0].transpose() / det2(u[1], u[0]) - u[2] * u[3].transpose() / det2(u[2], u[3]);
}

Mat2 hessian_from_normals_transposed(const std::array<Vec2, 4>& u)
{
  return u[0] * u[1].transpose() / det2(u[1], u[0]) - u[3] * u[2].transpose() / det2(u[2], u[3]);
}

Mat2 hessian_from_projectors(const std::array<Vec2, 4>& u)
{
  const Mat2 r = rot90<double>();
  return oblique_projector(u[0], u[1]) * r - oblique_projector(u[3], u[2]) * r;
}

HessianForms hessian_forms(const InscribedParallelogram& par)
{
  if (!(par.min_normal_turn() > 0.0)) throw NumericalError("inscribed parallelogram has degenerate normals");
  HessianForms f;
  f.G = hessian_from_normals(par.u);
  f.G_transposed = hessian_from_normals_transposed(par.u);
  f.discrepancy = (f.G - f.G_transposed).cwiseAbs().maxCoeff();
  return f;
}

Mat2 hessian_analytic(const SupportBody& k, const Vec2& x)
{
  return hessian_forms(inscribed_parallelogram(k, x)).G;
}

DetRelations det_relations(const InscribedParallelogram& par)
{
  const auto& u = par.u;
  const Mat2 g = hessian_from_normals(u);
  const double det = g.determinant();
  if (!(det < 0.0)) throw NumericalError("det G is not negative");
  const double scale = g.squaredNorm();
  const double d12 = det2(u[0], u[1]);
  const double d34 = det2(u[2], u[3]);
  const double product = -det2(u[1], u[2]) * det2(u[3], u[0]) / (d34 * d12);
  const double shifted = det2(u[1], u[3]) * det2(u[0], u[2]) / (d34 * d12);
  return {det, std::abs(det - product) / scale, std::abs(1.0 + det - shifted) / scale};
}

DetRelations det_relations(const SupportBody& k, const Vec2& x)
{
  return det_relations(inscribed_parallelogram(k, x));
}

double orthogonality_residual(const InscribedParallelogram& par)
{
  const Mat2 g = hessian_from_normals(par.u);
  const Mat2 r = rot90<double>();
  const Mat2 g_inv = -(r * g * r) / g.determinant();
  return std::abs(par.u[0].dot(g_inv * par.u[2])) * g.norm();
}

double orthogonality_residual(const SupportBody& k, const Vec2& x)
{
  return orthogonality_residual(inscribed_parallelogram(k, x));
}

double plucker(const Vec2& v1, const Vec2& v2, const Vec2& v3, const Vec2& v4)
{
  return plucker_defect(v1, v2, v3, v4);
}

HessianReport hessian_report(const SupportBody& k, const CovariogramOracle& oracle, const Vec2& x)
{
  const InscribedParallelogram par = inscribed_parallelogram(k, x);
  const HessianForms forms = hessian_forms(par);
  const DetRelations dr = det_relations(par);
  const Mat2& g = forms.G;
  const double gn = g.norm();
  const Mat2 r = rot90<double>();

  HessianReport rep;
  rep.x = x;
  rep.G = g;
  rep.detG = dr.detG;
  rep.residual_fd = (g - fd_hessian(oracle, x)).norm() / gn;
  rep.residual_product = dr.res_product;
  rep.residual_shifted = dr.res_shifted;
  rep.residual_orthogonality = orthogonality_residual(par);
  rep.form_discrepancy = forms.discrepancy;
  rep.residual_rgr = (r * g * r + dr.detG * adjugate_inverse(g)).norm() / gn;
  rep.residual_projection = (g - hessian_from_projectors(par.u)).norm() / gn;
  rep.min_normal_turn = par.min_normal_turn();
  return rep;
}

}  // namespace cov
