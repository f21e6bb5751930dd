#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "covariogram/body.hpp"

namespace cov {

/// area(K ∩ (K + x)). Polygons: clipping. Support bodies: exact integration
/// along the two boundary arcs of the intersection.
double covariogram_value(const ConvexBody& k, const Vec2& x);

/// Support-body covariogram through an n-gon approximation and clipping.
double covariogram_value_polygonized(const SupportBody& k, const Vec2& x, int n = 4096);

/// area(K ∩ (L + x))
double cross_covariogram(const ConvexBody& k, const ConvexBody& l, const Vec2& x);

/// Samples on nodes origin + (i, j) * spacing, i, j = 0..n-1. The nodes are
/// placed symmetrically about o.
struct CovariogramGrid {
  Vec2 origin = Vec2::Zero();
  double spacing = 0.0;
  Eigen::MatrixXd values;  // values(i, j) at x-index i, y-index j
  std::string body_id;

  int size() const { return static_cast<int>(values.rows()); }
  Vec2 node(int i, int j) const { return origin + spacing * Vec2(i, j); }
};

/// n x n samples covering the bounding box of DK plus a two-cell margin.
CovariogramGrid covariogram_grid(const ConvexBody& k, int n, const std::string& body_id = "");

struct ChordLengthDistribution {
  Vec2 direction = Vec2(1.0, 0.0);
  std::vector<double> r;
  std::vector<double> F;
};

/// F(r) = -d/dr g(r u) by central differences (second-order one-sided at
/// r = 0); F(r) is the measure of lines parallel to u cutting a chord longer
/// than r.
ChordLengthDistribution chord_length_cdf(const ConvexBody& k, const Vec2& u, const std::vector<double>& rs);

struct ConvolutionReport {
  int n = 0;
  double pixel = 0.0;
  double spectral_vs_direct = 0.0;  // in pixel counts
  double direct_vs_exact = 0.0;     // in area units
  Eigen::MatrixXd autocorrelation;  // (2n-1) x (2n-1) pixel counts, zero shift at (n-1, n-1)
};

/// Rasterizes K on an n x n pixel grid and compares its autocorrelation by
/// direct run overlap, by squared Fourier modulus, and against the exact
/// covariogram.
ConvolutionReport convolution_check(const ConvexBody& k, int n);

}  // namespace cov
