#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "covariogram/oracle.hpp"
#include "covariogram/sampling.hpp"
#include "covariogram/symmetry.hpp"

namespace cov {

struct ConjugateOptions {
  /// |phi(y) - phi(x)| accepted as converged, relative to diam(DK).
  double residual_tol = 1e-12;
  /// Refuse x with |1 + det G(x)| below this; <= 0 picks 1e-6 for analytic
  /// oracles and the oracle's tolerance estimate otherwise.
  double detg_tol = 0.0;
  int mesh_along = 12;
  int mesh_across = 6;
  /// Run the boundary-intersection construction as well when the oracle has
  /// a smooth body behind it.
  bool geometric_check = true;
  std::optional<Vec2> warm_start;
  /// The conjugate point must lie here too, so that G(y) is as trustworthy
  /// as G(x).
  SamplingDomain domain;
};

/// y != x whose inscribed parallelogram shares the diagonal [p1, p3] with
/// P(x); in oracle data, y + D(y) = x + D(x).
struct Conjugate {
  Vec2 x = Vec2::Zero();
  Vec2 y = Vec2::Zero();
  Vec2 diagonal = Vec2::Zero();  // x + D(x) = p1 - p3
  double residual = 0.0;         // |y + D(y) - diagonal|
  double one_plus_detG = 0.0;
  bool predicted_region = false;  // y lies where the sign of 1 + det G(x) puts it
  bool hexagon_passed = false;
  double hexagon_residual = 0.0;
  int candidates = 0;
  std::optional<Vec2> y_geometric;
  std::optional<double> strategy_gap;
};

/// Roots of y + D(y) = x + D(x) come from deflated Newton runs started on a
/// mesh over the region the sign of 1 + det G(x) predicts. A diagonal
/// vector matches two parallel chords, so some roots belong to the wrong
/// chord; the hexagon test on o, x, x + D(x), D(x), y, x + D(x) - y sorts
/// them out. When that test cannot run (a shift leaves the domain) the root
/// is accepted only if the boundary construction of a body-backed oracle
/// agrees within 1e-6 diam(DK). Throws NumericalError when nothing survives.
Conjugate find_conjugate(const CovariogramOracle& o, const Vec2& x, const ConjugateOptions& opts = {});

/// Construction from the body: with m the midpoint of [p1, p3], every other
/// boundary point q on the arc (p1, p3) whose mirror 2m - q is also on bd K
/// gives a conjugate y = p1 - q.
std::vector<Vec2> geometric_conjugates(const SupportBody& k, const Vec2& x);

/// Hexagon with vertices o, x, x + D(x), D(x), y, x + D(x) - y read from
/// oracle data; nullopt when the six points are not in convex position.
std::optional<SymmetricHexagon> oracle_hexagon(const Vec2& x, const Vec2& dx, const Vec2& y);

struct NormalPair {
  Vec2 x = Vec2::Zero();
  Vec2 v1 = Vec2::Zero();
  Vec2 v3 = Vec2::Zero();
  std::array<double, 2> eigenvalues{};
  double eigen_gap = 0.0;  // |l1 - l2| / max |l|
  Vec2 y = Vec2::Zero();
  Conjugate conjugate;
};

/// Unit eigenvectors of G(x) G(y)^-1 with <x, v> >= 0, ordered so that
/// det(v1, v3) > 0. They are {u1(x), -u3(x)} as a set.
NormalPair normal_pair(const CovariogramOracle& o, const Vec2& x, const ConjugateOptions& opts = {});
NormalPair normal_pair_from(const CovariogramOracle& o, const Conjugate& c);

/// Angle between v1 and v3.
double pair_separation(const NormalPair& np);
/// max angular error of {v1, v3} against {u1(x), -u3(x)} of K, under the
/// better of the two assignments.
double normal_pair_error(const NormalPair& np, const SupportBody& k);

enum class TraceStatus { complete, left_domain, sign_change, membership_lost, solver_failed };
std::string to_string(TraceStatus s);

struct TraceOptions {
  /// <= 0 picks 1e-3 diam(DK).
  double step = 0.0;
  /// <= 0 picks min(separation / 4, 0.2).
  double n_radius = 0.0;
  int max_steps = 20000;
  SamplingDomain domain;
  ConjugateOptions conjugate;
};

struct ArcTrace {
  Vec2 x0 = Vec2::Zero();
  std::vector<Vec2> curve;  // x(t)
  std::vector<Vec2> arc;    // x(t) - x(0): a boundary arc up to translation
  Vec2 held_normal = Vec2::Zero();   // normal kept fixed (center of N3)
  Vec2 other_normal = Vec2::Zero();  // its partner at x0 (center of N1)
  double n_radius = 0.0;
  double step = 0.0;
  double length = 0.0;
  double max_constraint_residual = 0.0;  // rad
  bool swap_violation = false;
  TraceStatus status = TraceStatus::complete;
  std::string reason;
};

/// Continuation of {x : held normal candidate at x = held normal at x0}.
/// Along this curve the vertex carrying the held normal stays fixed, so x(t)
/// sweeps a translate of a boundary arc of K or of -K.
ArcTrace trace_arc(const CovariogramOracle& o, const Vec2& x0, double arclen, const TraceOptions& opts = {});

/// The boundary arc a trace should reproduce: p4(K, x) over the traced
/// normal range when the held normal is -u3, else -p2(K, x). n samples.
std::vector<Vec2> reference_arc(const SupportBody& k, const ArcTrace& tr, int n = 512);

struct Comparison {
  double hausdorff = 0.0;
  bool reflected = false;
  Vec2 translation = Vec2::Zero();  // applied to B (or -B)
};

/// Hausdorff distance minimized over translations of B and of -B, computed
/// from support functions on 2048 directions.
Comparison compare_bodies(const ConvexBody& a, const ConvexBody& b);

/// Symmetric Hausdorff distance between polylines.
double polyline_hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b);
/// polyline_hausdorff minimized over translations of b.
Comparison compare_arcs(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

/// 1/2 DK read from the oracle; refuses oracles whose symmetry test fails.
ConvexBody reconstruct_symmetric(const CovariogramOracle& o);

/// max |g_K - g_L| on an n x n grid covering both difference bodies.
double equality_harness(const ConvexBody& k, const ConvexBody& l, int n);

}  // namespace cov
