#pragma once

#include <memory>
#include <string>
#include <vector>

#include "covariogram/body.hpp"
#include "covariogram/covariogram.hpp"

namespace cov {

/// Access to g, its gradient and its Hessian, either computed from a body or
/// interpolated from samples.
class CovariogramOracle {
 public:
  virtual ~CovariogramOracle() = default;

  virtual double value(const Vec2& x) const = 0;
  virtual Vec2 gradient(const Vec2& x) const;
  virtual Mat2 hessian(const Vec2& x) const;

  /// Finite-difference step.
  virtual double step() const = 0;
  /// Distance from o to bd DK along direction angle psi.
  virtual double dk_radius(double psi) const = 0;
  virtual double dk_diameter() const = 0;
  /// Default tolerance for detG-based verdicts at the given sample points.
  virtual double default_tolerance(const std::vector<Vec2>& samples) const = 0;
  virtual std::string kind() const = 0;
  /// The body behind an analytic oracle, nullptr for sampled data.
  virtual const ConvexBody* body() const { return nullptr; }

  double area() const { return value(Vec2::Zero()); }
  /// True when x lies at least `margin` inside DK (radially) and at least
  /// `margin` away from o.
  bool inside(const Vec2& x, double margin) const;
};

/// Central differences with the oracle's step.
Vec2 fd_gradient(const CovariogramOracle& o, const Vec2& x);
Vec2 fd_gradient(const CovariogramOracle& o, const Vec2& x, double step);
/// Central second differences, symmetric by construction.
Mat2 fd_hessian(const CovariogramOracle& o, const Vec2& x);
Mat2 fd_hessian(const CovariogramOracle& o, const Vec2& x, double step);

class AnalyticOracle final : public CovariogramOracle {
 public:
  explicit AnalyticOracle(ConvexBody k);

  double value(const Vec2& x) const override;
  /// R D(x) for smooth bodies; finite differences for polygons.
  Vec2 gradient(const Vec2& x) const override;
  Mat2 hessian(const Vec2& x) const override;
  double step() const override { return step_; }
  double dk_radius(double psi) const override;
  double dk_diameter() const override { return dk_diameter_; }
  double default_tolerance(const std::vector<Vec2>&) const override { return 1e-6; }
  std::string kind() const override { return "analytic"; }
  const ConvexBody* body() const override { return &body_; }

 private:
  ConvexBody body_;
  ConvexBody dk_;
  double dk_diameter_;
  double step_;
};

/// Cubic B-spline interpolant of a covariogram grid, clamped to zero outside
/// the support read off the samples.
class GridOracle final : public CovariogramOracle {
 public:
  explicit GridOracle(CovariogramGrid grid, int radial_samples = 2048);

  double value(const Vec2& x) const override;
  /// Spline value without the support clamp.
  double spline(const Vec2& x) const;
  double step() const override { return 2.0 * grid_.spacing; }
  double dk_radius(double psi) const override;
  double dk_diameter() const override { return dk_diameter_; }
  /// 10 x the largest change of det G between steps 2h and 4h.
  double default_tolerance(const std::vector<Vec2>& samples) const override;
  std::string kind() const override { return "grid"; }

  const CovariogramGrid& grid() const { return grid_; }
  /// Boundary of the support: radial samples at uniform angles.
  const std::vector<double>& radial_table() const { return radial_; }

 private:
  double bilinear_root_measure(const Vec2& x, bool& ok) const;
  void build_radial_table(int samples);

  CovariogramGrid grid_;
  Eigen::MatrixXd coeffs_;
  std::vector<double> radial_;
  double dk_diameter_ = 0.0;
};

}  // namespace cov
