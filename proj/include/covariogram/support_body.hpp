#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "covariogram/linalg.hpp"
#include "covariogram/polygon.hpp"
#include "covariogram/trig_series.hpp"

namespace cov {

/// Strictly convex C^1 body given by its support function
/// h(t) = a0 + sum (a_k cos kt + b_k sin kt). The boundary point with outward
/// normal u(t) = (cos t, sin t) is p(t) = h(t) u(t) + h'(t) R u(t).
class SupportBody {
 public:
  /// Radius of curvature h + h'' must be >= kMinCurvatureRadius on a
  /// 4096-point grid; throws PreconditionError otherwise.
  explicit SupportBody(TrigSeriesd h, double precision = 1e-10);

  static constexpr double kMinCurvatureRadius = 1e-6;
  static constexpr int kValidationGrid = 4096;

  static SupportBody disk(double radius, const Vec2& center = Vec2::Zero());
  /// Axis-aligned ellipse. Its support function is not a finite series; the
  /// series is cut at the first even harmonic below 1e-15 of the leading term.
  static SupportBody ellipse(double semi_x, double semi_y, const Vec2& center = Vec2::Zero());

  const TrigSeriesd& support() const { return h_; }
  double precision() const { return precision_; }
  double min_curvature_radius() const { return min_rho_; }

  struct BoundaryJet {
    Vec2 point;
    Vec2 normal;
    Vec2 tangent;  // dp/dt = rho R u
    double rho;
  };

  BoundaryJet boundary(double t) const;
  Vec2 point(double t) const;
  double radius_of_curvature(double t) const;
  double support_value(double t) const { return h_(t); }
  /// h(t) + h(t + pi)
  double width(double t) const;

  double area() const;
  /// Integral of h (h + h'') over [a, b]; twice the area swept by the
  /// boundary arc as seen from the origin.
  double area_element_integral(double a, double b) const { return h_rho_.integral(a, b); }
  Vec2 steiner_point() const;
  double perimeter() const { return kTwoPi * h_.a0(); }
  double diameter() const { return diameter_; }

  SupportBody translated(const Vec2& t) const;
  /// {2c - p : p in K}
  SupportBody reflected(const Vec2& c) const;
  SupportBody difference_body() const;

  ConvexPolygon polygonize(int n) const;

  /// max_t (q.u(t) - h(t)): Euclidean distance to K outside, minus the
  /// distance to the boundary inside.
  double signed_distance(const Vec2& q) const;
  /// Normal angle of the boundary point closest to q (the maximizer above).
  double nearest_normal_angle(const Vec2& q) const;

  /// Chord of K on the line {p : p.(R e) = s}: e-coordinates of the rear and
  /// front endpoints, or nullopt when the line misses the interior.
  std::optional<std::pair<double, double>> chord_at_offset(const Vec2& e, double s) const;

 private:
  std::pair<double, double> maximize_support_gap(const Vec2& q) const;

  TrigSeriesd h_;
  TrigSeriesd h_rho_;  // h (h + h''), integrand of the area element
  double precision_;
  double min_rho_ = 0.0;
  double diameter_ = 0.0;
};

/// Normal angles of the four vertices of the parallelogram inscribed in K
/// with side x: p(t1) - p(t2) = x = p(t4) - p(t3), det(x, p(t1) - p(t4)) > 0,
/// t1 < t2 < t3 < t4 + 2 pi.
struct Crossings {
  double t1;
  double t2;
  double t3;
  double t4;
};

/// Geometry of chords of K parallel to a direction.
struct ChordProfile {
  double beta;       // angle of the direction
  double gamma;      // normal angle at the front end of the longest chord
  double max_chord;  // length of the longest chord
};

ChordProfile chord_profile(const SupportBody& k, const Vec2& direction);

/// Solves for the crossings of bd K and bd K + x. Returns nullopt for x = o
/// and for x outside int DK.
std::optional<Crossings> solve_crossings(const SupportBody& k, const Vec2& x);

/// Exact area of K ∩ (K + x) from the crossing angles.
double intersection_area(const SupportBody& k, const Vec2& x, const Crossings& c);

/// Counterclockwise boundary arc between normal angles a and b (b may
/// exceed 2 pi to encode wraparound).
struct BoundaryArc {
  double theta_a = 0.0;
  double theta_b = 0.0;
  std::vector<Vec2> samples;
};

BoundaryArc boundary_arc(const SupportBody& k, double theta_a, double theta_b, int n_samples);

}  // namespace cov
