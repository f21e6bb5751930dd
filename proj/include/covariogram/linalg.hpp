#pragma once

#include <cmath>

#include <Eigen/Core>
#include <Eigen/LU>

namespace cov {

template <typename Scalar>
using Vec2T = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Mat2T = Eigen::Matrix<Scalar, 2, 2>;

using Vec2 = Vec2T<double>;
using Mat2 = Mat2T<double>;

/// Counterclockwise quarter turn, [[0,-1],[1,0]].
template <typename Scalar = double>
Mat2T<Scalar> rot90()
{
  Mat2T<Scalar> r;
  r << Scalar(0), Scalar(-1), Scalar(1), Scalar(0);
  return r;
}

/// R*v without forming the matrix.
template <typename Derived>
Vec2T<typename Derived::Scalar> rot90(const Eigen::MatrixBase<Derived>& v)
{
  return Vec2T<typename Derived::Scalar>(-v(1), v(0));
}

/// det[a b] = a.x*b.y - a.y*b.x, identical to -a^T R b.
template <typename DA, typename DB>
typename DA::Scalar det2(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b)
{
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DA, 2)
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DB, 2)
  return a(0) * b(1) - a(1) * b(0);
}

template <typename Scalar = double>
Vec2T<Scalar> unit_vector(Scalar angle)
{
  using std::cos;
  using std::sin;
  return Vec2T<Scalar>(cos(angle), sin(angle));
}

/// Inverse of a 2x2 matrix through its adjugate.
template <typename Derived>
Mat2T<typename Derived::Scalar> adjugate_inverse(const Eigen::MatrixBase<Derived>& m)
{
  using Scalar = typename Derived::Scalar;
  const Scalar d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Mat2T<Scalar> adj;
  adj << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return adj / d;
}

/// Component of y along v1 in the basis (v1, v2): det(v2,y)/det(v2,v1) * v1.
/// The caller guarantees v1 and v2 are not parallel; see oblique_project in
/// parallelogram.hpp for the checked variant.
template <typename D1, typename D2, typename D3>
Vec2T<typename D1::Scalar> oblique_component(const Eigen::MatrixBase<D1>& v1,
                                             const Eigen::MatrixBase<D2>& v2,
                                             const Eigen::MatrixBase<D3>& y)
{
  return (det2(v2, y) / det2(v2, v1)) * v1;
}

/// Matrix of the projection onto lin v1 along v2: -v1 v2^T R / det(v2, v1).
template <typename D1, typename D2>
Mat2T<typename D1::Scalar> oblique_projector(const Eigen::MatrixBase<D1>& v1,
                                             const Eigen::MatrixBase<D2>& v2)
{
  using Scalar = typename D1::Scalar;
  return -(v1 * v2.transpose() * rot90<Scalar>()) / det2(v2, v1);
}

/// lhs - rhs of det(v1,v3)det(v2,v4) = det(v2,v3)det(v1,v4) + det(v4,v3)det(v2,v1).
template <typename Scalar>
Scalar plucker_defect(const Vec2T<Scalar>& v1, const Vec2T<Scalar>& v2, const Vec2T<Scalar>& v3,
                      const Vec2T<Scalar>& v4)
{
  const Scalar lhs = det2(v1, v3) * det2(v2, v4);
  const Scalar rhs = det2(v2, v3) * det2(v1, v4) + det2(v4, v3) * det2(v2, v1);
  return lhs - rhs;
}

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Canonical angle in [0, 2*pi).
inline double wrap_angle(double a)
{
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

/// Signed angle difference in (-pi, pi].
inline double angle_diff(double a, double b)
{
  double d = wrap_angle(a - b);
  if (d > kPi) d -= kTwoPi;
  return d;
}

inline double angle_of(const Vec2& v) { return std::atan2(v(1), v(0)); }

inline bool all_finite(const Vec2& v) { return std::isfinite(v(0)) && std::isfinite(v(1)); }

}  // namespace cov
