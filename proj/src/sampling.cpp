#include "covariogram/sampling.hpp"

#include <cmath>
#include <random>

#include "covariogram/errors.hpp"

namespace cov {

namespace {

// 1/g and 1/g^2 for the plastic number g (g^3 = g + 1)
constexpr double kAlpha1 = 0.7548776662466927;
constexpr double kAlpha2 = 0.5698402909980532;

}  // namespace

LowDiscrepancySequence::LowDiscrepancySequence(std::uint64_t seed) : seed_(seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  state_ = Vec2(unit(rng), unit(rng));
}

Vec2 LowDiscrepancySequence::next()
{
  state_(0) += kAlpha1;
  state_(1) += kAlpha2;
  state_(0) -= std::floor(state_(0));
  state_(1) -= std::floor(state_(1));
  return state_;
}

std::vector<Vec2> sample_domain(const CovariogramOracle& o, int n, std::uint64_t seed, const SamplingDomain& domain)
{
  if (n < 0) throw PreconditionError("sample count must be non-negative");
  const double half = 0.5 * o.dk_diameter();
  LowDiscrepancySequence seq(seed);
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(n));
  const long max_draws = 1000L * (n + 1);
  for (long d = 0; d < max_draws && static_cast<int>(out.size()) < n; ++d) {
    const Vec2 x = (2.0 * seq.next() - Vec2::Ones()) * half;
    if (domain.contains(o, x)) out.push_back(x);
  }
  if (static_cast<int>(out.size()) < n) throw NumericalError("sampling domain is too thin to draw from");
  return out;
}

}  // namespace cov
