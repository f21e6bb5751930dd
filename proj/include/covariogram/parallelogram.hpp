#pragma once

#include <array>

#include "covariogram/support_body.hpp"

namespace cov {

/// Parallelogram inscribed in K with sides x and D:
/// p1 - p2 = x = p4 - p3, D = p1 - p4, vertices counterclockwise on bd K.
/// Index 0 holds p1.
struct InscribedParallelogram {
  Vec2 x = Vec2::Zero();
  std::array<Vec2, 4> p;
  std::array<Vec2, 4> u;         // outward unit normals at p
  std::array<double, 4> theta;   // normal angles, theta[0] < ... < theta[3] + 2 pi
  Vec2 D = Vec2::Zero();

  double min_normal_turn() const;  // min det(u_i, u_{i+1})
};

/// Refuses x closer than this fraction of diam(DK) to o or to bd DK.
inline constexpr double kDomainMargin = 1e-6;

/// Throws PreconditionError unless x is in int DK \ {o} with the margin.
void require_interior_shift(const SupportBody& k, const Vec2& x);

InscribedParallelogram inscribed_parallelogram(const SupportBody& k, const Vec2& x);

/// grad g(x) = R D(x)
Vec2 gradient_analytic(const SupportBody& k, const Vec2& x);

/// Quadrilateral with q1 = h, q3 = o whose side [q_i, q_{i+1}] has outward
/// normal u_i. q[0] holds q1.
struct NormalFanQuadrilateral {
  Vec2 h = Vec2::Zero();
  std::array<Vec2, 4> q;
};

/// Requires u1, u2, -h, u3, u4, h in counterclockwise cyclic order.
NormalFanQuadrilateral quadrilateral_Q(const InscribedParallelogram& par, const Vec2& h);
NormalFanQuadrilateral quadrilateral_Q(const SupportBody& k, const Vec2& x, const Vec2& h);
/// True when u1, u2, -h, u3, u4, h are in counterclockwise cyclic order.
bool fan_order_holds(const InscribedParallelogram& par, const Vec2& h);

/// Component of y along v1 in the basis (v1, v2). Throws when v1 and v2 are
/// parallel to within 1e-12 relative.
Vec2 oblique_project(const Vec2& v1, const Vec2& v2, const Vec2& y);

}  // namespace cov
