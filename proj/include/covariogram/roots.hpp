#pragma once

#include <cmath>
#include <utility>

namespace cov::roots {

/// Safeguarded Newton iteration on a bracket [lo, hi] with f(lo), f(hi) of
/// opposite sign. `fdf(t)` returns {f(t), f'(t)}. Falls back to bisection
/// whenever the Newton step leaves the bracket or stalls.
template <typename F>
double bracketed_newton(F&& fdf, double lo, double hi, double xtol = 1e-15, int max_iter = 100)
{
  auto [flo, dlo] = fdf(lo);
  auto [fhi, dhi] = fdf(hi);
  (void)dlo;
  (void)dhi;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo > 0.0) std::swap(lo, hi);  // f(lo) < 0 < f(hi) from here on

  double t = 0.5 * (lo + hi);
  double step_old = std::abs(hi - lo);
  double step = step_old;
  auto [f, df] = fdf(t);
  for (int it = 0; it < max_iter; ++it) {
    const bool newton_out = ((t - hi) * df - f) * ((t - lo) * df - f) > 0.0;
    const bool slow = std::abs(2.0 * f) > std::abs(step_old * df);
    step_old = step;
    if (newton_out || slow || !std::isfinite(df) || df == 0.0) {
      step = 0.5 * (hi - lo);
      t = lo + step;
      if (t == lo) return t;
    } else {
      step = f / df;
      const double prev = t;
      t -= step;
      if (t == prev) return t;
    }
    if (std::abs(step) < xtol * (1.0 + std::abs(t))) return t;
    std::tie(f, df) = fdf(t);
    if (f == 0.0) return t;
    if (f < 0.0)
      lo = t;
    else
      hi = t;
  }
  return t;
}

/// Bisection with secant acceleration on a sign-changing bracket; used where
/// no derivative is available.
template <typename F>
double bisect_secant(F&& f, double lo, double hi, double xtol = 1e-13, int max_iter = 200)
{
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  for (int it = 0; it < max_iter; ++it) {
    double t = lo - flo * (hi - lo) / (fhi - flo);
    const double w = hi - lo;
    // keep the secant point well inside the bracket, otherwise bisect
    if (!(t > lo + 0.05 * w && t < hi - 0.05 * w)) t = 0.5 * (lo + hi);
    const double ft = f(t);
    if (ft == 0.0) return t;
    if ((ft < 0.0) == (flo < 0.0)) {
      lo = t;
      flo = ft;
    } else {
      hi = t;
      fhi = ft;
    }
    if (std::abs(hi - lo) < xtol * (1.0 + std::abs(t))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace cov::roots
