#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "covariogram/oracle.hpp"
#include "covariogram/parallelogram.hpp"
#include "covariogram/sampling.hpp"

namespace cov {

struct SymmetryVerdict {
  bool is_symmetric = false;
  double max_residual = 0.0;  // max |det G + 1|
  Vec2 witness = Vec2::Zero();
  int samples = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  /// Body-backed only: support distance between K and its reflection about
  /// the Steiner point, and the verdict it implies.
  std::optional<double> reflection_distance;
  std::optional<bool> geometric_symmetric;
  /// Smooth body-backed only: samples where "some diagonal is an affine
  /// diameter" disagrees with |det G + 1| <= tol.
  std::optional<int> diagonal_mismatches;
};

/// Monge-Ampere test: det G = -1 on the sampling domain. tol <= 0 picks the
/// oracle's default tolerance.
SymmetryVerdict central_symmetry_test(const CovariogramOracle& o, int n_samples, double tol = 0.0,
                                      std::uint64_t seed = 0, const SamplingDomain& domain = {});

/// Distance tolerance used for affine-diameter tests next to a det G
/// tolerance: the diagonal's distance to bd DK is quadratic in the normal
/// misalignment while |det G + 1| is linear in it.
double diagonal_tolerance(const SupportBody& k);

struct DiagonalTest {
  bool diag13 = false;
  bool diag24 = false;
};
/// Affine-diameter test of the two diagonals of P(K, x).
DiagonalTest affine_diameter_diagonals(const SupportBody& k, const Vec2& x, double tol);
DiagonalTest affine_diameter_diagonals(const SupportBody& k, const SupportBody& dk, const Vec2& x, double tol);

/// Centrally symmetric convex hexagon, vertices counterclockwise; h[0] holds
/// h1.
class SymmetricHexagon {
 public:
  explicit SymmetricHexagon(const std::array<Vec2, 6>& vertices, double tol = 1e-9);

  const std::array<Vec2, 6>& vertices() const { return h_; }
  /// 1-based cyclic access.
  const Vec2& h(int i) const { return h_[static_cast<std::size_t>(((i - 1) % 6 + 6) % 6)]; }
  /// x_i = h_{2i+1} - h_{2i-1}, i = 1..3
  Vec2 diagonal_shift(int i) const { return h(2 * i + 1) - h(2 * i - 1); }
  Vec2 center() const;

 private:
  std::array<Vec2, 6> h_;
};

/// conv(P ∪ Q) for parallelograms sharing the diagonal [p1, p3], labeled so
/// that h1 = p3 and h4 = p1.
SymmetricHexagon hexagon_from_parallelograms(const InscribedParallelogram& p, const InscribedParallelogram& q,
                                             double tol = 1e-9);

struct HexagonTestReport {
  bool passed = false;
  std::array<Vec2, 3> x;
  std::array<double, 3> residuals{};  // |D(x_i) - (h_{2i+2} - h_{2i+1})|
  std::array<double, 3> one_plus_detG{};
  double product = 0.0;
  double tol = 0.0;
};

/// A translate of H is inscribed in K iff D(x_i) = h_{2i+2} - h_{2i+1} for
/// i = 1..3 and prod (1 + det G(x_i)) >= 0. tol <= 0 picks 1e-6 for
/// analytic oracles; for sampled ones, 10 x the change of D(x_i) when the
/// finite-difference step is doubled.
HexagonTestReport hexagon_inscription_test(const CovariogramOracle& o, const SymmetricHexagon& hex, double tol = 0.0);

}  // namespace cov
