#include "covariogram/parallelogram.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "covariogram/errors.hpp"

namespace cov {

namespace {

Vec2 solve_lines(const Vec2& n1, double c1, const Vec2& n2, double c2)
{
  Mat2 a;
  a.row(0) = n1.transpose();
  a.row(1) = n2.transpose();
  return adjugate_inverse(a) * Vec2(c1, c2);
}

}  // namespace

double InscribedParallelogram::min_normal_turn() const
{
  double m = det2(u[0], u[1]);
  for (int i = 1; i < 4; ++i) m = std::min(m, det2(u[i], u[(i + 1) % 4]));
  return m;
}

void require_interior_shift(const SupportBody& k, const Vec2& x)
{
  if (!all_finite(x)) throw PreconditionError("shift vector is not finite");
  const double margin = kDomainMargin * 2.0 * k.diameter();
  const double len = x.norm();
  if (len <= margin) throw PreconditionError("shift vector is too close to the origin");
  const ChordProfile prof = chord_profile(k, x);
  if (prof.max_chord - len <= margin) {
    std::ostringstream os;
    os << "shift vector (" << x(0) << ", " << x(1) << ") is not inside the difference body (radial gap "
       << prof.max_chord - len << ")";
    throw PreconditionError(os.str());
  }
}

InscribedParallelogram inscribed_parallelogram(const SupportBody& k, const Vec2& x)
{
  require_interior_shift(k, x);
  const auto c = solve_crossings(k, x);
  if (!c) throw NumericalError("failed to bracket the boundary crossings");
  InscribedParallelogram par;
  par.x = x;
  par.theta = {c->t1, c->t2, c->t3, c->t4};
  for (int i = 0; i < 4; ++i) {
    par.p[i] = k.point(par.theta[i]);
    par.u[i] = unit_vector(par.theta[i]);
  }
  par.D = par.p[0] - par.p[3];
  if (!(det2(x, par.D) > 0.0)) throw NumericalError("inscribed parallelogram has the wrong orientation");
  return par;
}

Vec2 gradient_analytic(const SupportBody& k, const Vec2& x) { return rot90(inscribed_parallelogram(k, x).D); }

bool fan_order_holds(const InscribedParallelogram& par, const Vec2& h)
{
  const double a0 = angle_of(par.u[0]);
  const double hh = angle_of(h);
  const std::array<double, 5> seq = {angle_of(par.u[1]), hh + kPi, angle_of(par.u[2]), angle_of(par.u[3]), hh};
  double prev = 0.0;
  for (double a : seq) {
    const double rel = wrap_angle(a - a0);
    if (!(rel > prev)) return false;
    prev = rel;
  }
  return true;
}

NormalFanQuadrilateral quadrilateral_Q(const InscribedParallelogram& par, const Vec2& h)
{
  if (!all_finite(h) || h.isZero(0.0)) throw PreconditionError("h must be a nonzero finite vector");
  if (!fan_order_holds(par, h)) {
    throw PreconditionError("normals u1, u2, -h, u3, u4, h are not in counterclockwise order");
  }
  const auto& u = par.u;
  NormalFanQuadrilateral q;
  q.h = h;
  q.q[0] = h;
  q.q[1] = solve_lines(u[0], u[0].dot(h), u[1], 0.0);
  q.q[2] = Vec2::Zero();
  q.q[3] = solve_lines(u[2], 0.0, u[3], u[3].dot(h));
  return q;
}

NormalFanQuadrilateral quadrilateral_Q(const SupportBody& k, const Vec2& x, const Vec2& h)
{
  return quadrilateral_Q(inscribed_parallelogram(k, x), h);
}

Vec2 oblique_project(const Vec2& v1, const Vec2& v2, const Vec2& y)
{
  if (!all_finite(v1) || !all_finite(v2) || !all_finite(y)) throw PreconditionError("inputs must be finite");
  if (std::abs(det2(v1, v2)) <= 1e-12 * v1.norm() * v2.norm()) {
    throw PreconditionError("projection directions are parallel");
  }
  return oblique_component(v1, v2, y);
}

}  // namespace cov
