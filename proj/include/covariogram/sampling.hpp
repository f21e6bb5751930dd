#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "covariogram/oracle.hpp"

namespace cov {

/// Points of int DK kept away from o and bd DK by `margin_fraction` of
/// diam(DK), default 2%, and never by less than two oracle steps so that
/// finite-difference stencils fit.
struct SamplingDomain {
  double margin_fraction = 0.02;

  double margin(const CovariogramOracle& o) const
  {
    return std::max(margin_fraction * o.dk_diameter(), 2.0 * o.step());
  }
  bool contains(const CovariogramOracle& o, const Vec2& x) const { return o.inside(x, margin(o)); }
};

/// Additive recurrence with the plastic-number increments, started at an
/// offset derived from the seed. Values in [0,1)^2.
class LowDiscrepancySequence {
 public:
  explicit LowDiscrepancySequence(std::uint64_t seed = 0);
  Vec2 next();
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  Vec2 state_;
};

/// n quasi-uniform points of the sampling domain, by rejection from the
/// bounding square of DK.
std::vector<Vec2> sample_domain(const CovariogramOracle& o, int n, std::uint64_t seed = 0,
                                const SamplingDomain& domain = {});

}  // namespace cov
