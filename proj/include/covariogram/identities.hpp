#pragma once

#include "covariogram/parallelogram.hpp"

namespace cov {

class CovariogramOracle;

/// G = u2 u1^T / det(u2,u1) - u3 u4^T / det(u3,u4)
Mat2 hessian_from_normals(const std::array<Vec2, 4>& u);
/// G = u1 u2^T / det(u2,u1) - u4 u3^T / det(u3,u4), the transposed form.
Mat2 hessian_from_normals_transposed(const std::array<Vec2, 4>& u);
/// G = P(u1,u2) R - P(u4,u3) R with P the oblique projector.
Mat2 hessian_from_projectors(const std::array<Vec2, 4>& u);

Mat2 hessian_analytic(const SupportBody& k, const Vec2& x);

struct HessianForms {
  Mat2 G;
  Mat2 G_transposed;
  double discrepancy;  // max entry difference
};
HessianForms hessian_forms(const InscribedParallelogram& par);

/// Residuals are relative: determinant identities are divided by |G|^2, the
/// orthogonality residual is multiplied by |G| (Frobenius norms), so that
/// the numbers do not depend on how G is scaled.
struct DetRelations {
  double detG;
  double res_product;  // detG vs the normal-determinant product
  double res_shifted;  // 1 + detG vs its product form
};
DetRelations det_relations(const InscribedParallelogram& par);
DetRelations det_relations(const SupportBody& k, const Vec2& x);

/// |u1^T G^-1 u3| with G^-1 = -R G R / det G.
double orthogonality_residual(const InscribedParallelogram& par);
double orthogonality_residual(const SupportBody& k, const Vec2& x);

/// det(v1,v3)det(v2,v4) - det(v2,v3)det(v1,v4) - det(v4,v3)det(v2,v1)
double plucker(const Vec2& v1, const Vec2& v2, const Vec2& v3, const Vec2& v4);

struct HessianReport {
  Vec2 x = Vec2::Zero();
  Mat2 G = Mat2::Zero();
  double detG = 0.0;
  double residual_fd = 0.0;          // |G - fd Hessian| / |G|
  double residual_product = 0.0;
  double residual_shifted = 0.0;
  double residual_orthogonality = 0.0;
  double form_discrepancy = 0.0;     // two displayed forms of G
  double residual_rgr = 0.0;         // |R G R + detG G^-1| / |G|
  double residual_projection = 0.0;  // projector form vs G, / |G|
  double min_normal_turn = 0.0;
};

/// Evaluates every identity at x; the finite-difference Hessian comes from
/// the oracle.
HessianReport hessian_report(const SupportBody& k, const CovariogramOracle& oracle, const Vec2& x);

}  // namespace cov
