#include "covariogram/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "covariogram/errors.hpp"
#include "covariogram/roots.hpp"

namespace cov {

namespace {

Vec2 diagonal_side(const CovariogramOracle& o, const Vec2& z) { return -(rot90<double>() * o.gradient(z)); }

double detg_tolerance(const CovariogramOracle& o, const Vec2& x, const ConjugateOptions& opts)
{
  if (opts.detg_tol > 0.0) return opts.detg_tol;
  if (o.body() != nullptr) return 1e-6;
  return o.default_tolerance({x});
}

constexpr double kStrategyAgreement = 1e-6;

bool in_predicted_region(const Vec2& x, const Vec2& dx, const Vec2& y, double one_plus_detg)
{
  if (one_plus_detg > 0.0) {
    const double s = y.dot(x);
    return det2(x, y) < 0.0 && s > 0.0 && s < x.squaredNorm();
  }
  const Vec2 q = y - x;
  const double s = q.dot(dx);
  return det2(dx, q) < 0.0 && s > 0.0 && s < dx.squaredNorm();
}

struct EigenNormals {
  Vec2 v1, v3;
  std::array<double, 2> eigenvalues;
  double gap;
};

// Unit eigenvectors of G(x) G(y)^-1, flipped to <x, v> >= 0 and ordered so
// that det(v1, v3) > 0.
EigenNormals eigen_normals(const Mat2& gx, const Mat2& gy, const Vec2& x)
{
  if (!(std::abs(gy.determinant()) > 1e-14 * gy.squaredNorm())) throw NumericalError("G(y) is singular");
  const Mat2 m = gx * adjugate_inverse(gy);
  const double tr = m.trace();
  const double det = m.determinant();
  const double disc = tr * tr - 4.0 * det;
  if (!(disc > 0.0)) throw NumericalError("G(x) G(y)^-1 has no pair of distinct real eigenvalues");
  // stable pair of roots
  const double q = 0.5 * (tr + std::copysign(std::sqrt(disc), tr));
  EigenNormals en;
  en.eigenvalues = {q, q != 0.0 ? det / q : -q};
  en.gap = std::abs(en.eigenvalues[0] - en.eigenvalues[1]) /
           std::max(std::abs(en.eigenvalues[0]), std::abs(en.eigenvalues[1]));
  auto eigvec = [&](double l) {
    const Vec2 ra(m(0, 0) - l, m(0, 1));
    const Vec2 rb(m(1, 0), m(1, 1) - l);
    const Vec2 row = ra.squaredNorm() >= rb.squaredNorm() ? ra : rb;
    Vec2 v(-row(1), row(0));
    if (!(v.norm() > 0.0)) throw NumericalError("degenerate eigenvector");
    v.normalize();
    if (v.dot(x) < 0.0) v = -v;
    return v;
  };
  en.v1 = eigvec(en.eigenvalues[0]);
  en.v3 = eigvec(en.eigenvalues[1]);
  if (det2(en.v1, en.v3) < 0.0) {
    std::swap(en.v1, en.v3);
    std::swap(en.eigenvalues[0], en.eigenvalues[1]);
  }
  return en;
}

enum class HexVerdict { passed, failed, not_applicable };

struct Candidate {
  Vec2 y;
  double residual;
  bool predicted;
  HexVerdict hexagon;
  double hexagon_residual;

  // passes > untestable in the predicted region > the rest
  int rank() const
  {
    if (hexagon == HexVerdict::passed) return predicted ? 0 : 1;
    if (hexagon == HexVerdict::not_applicable) return predicted ? 2 : 3;
    return predicted ? 4 : 5;
  }
};

bool better(const Candidate& a, const Candidate& b)
{
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return a.hexagon_residual < b.hexagon_residual;
}

std::vector<Vec2> mesh_starts(const Vec2& x, const Vec2& dx, double opd, int along, int across)
{
  const Mat2 r = rot90<double>();
  const Vec2 base = opd > 0.0 ? Vec2::Zero() : x;
  const Vec2 side = opd > 0.0 ? x : dx;
  const Vec2 bulge = -(r * side);
  static constexpr double kAcross[] = {0.1, 0.25, 0.03, 0.45, 0.01, 0.6};
  const int na = std::clamp(across, 1, 6);
  std::vector<Vec2> starts;
  // middle of the side first, then outward toward both ends
  std::vector<double> ss;
  for (int i = 1; i <= along; ++i) ss.push_back(0.5 * (1.0 - std::cos(kPi * i / (along + 1))));
  std::stable_sort(ss.begin(), ss.end(), [](double a, double b) { return std::abs(a - 0.5) < std::abs(b - 0.5); });
  for (int j = 0; j < na; ++j)
    for (const double s : ss) starts.push_back(base + s * side + kAcross[j] * bulge);
  return starts;
}

// Newton on z + D(z) = w with the roots already found deflated away:
// the residual is scaled by prod (1 + L^2 / |z - r|^2), which turns each
// Newton step d into d / (1 - grad(log m) . d).
class DeflatedSearch {
 public:
  DeflatedSearch(const CovariogramOracle& o, const Vec2& x, double opd, double tol, double accept,
                 const SamplingDomain& domain)
      : o_(o), domain_(domain), x_(x), dx_(diagonal_side(o, x)), w_(x + dx_), opd_(opd), tol_(tol), accept_(accept),
        sep_(10.0 * std::min(o.step(), 1e-3 * o.dk_diameter())), len_(0.02 * o.dk_diameter()), margin_(2.0 * o.step())
  {
    roots_.push_back(x);
  }

  const Vec2& dx() const { return dx_; }
  const Vec2& w() const { return w_; }
  const std::vector<Candidate>& found() const { return found_; }
  int outside() const { return outside_; }

  /// True once a candidate of the best rank is known.
  bool done() const
  {
    return std::any_of(found_.begin(), found_.end(), [](const Candidate& c) { return c.rank() == 0; });
  }

  void run(const Vec2& z0)
  {
    const auto nr = newton(z0);
    if (!nr) return;
    roots_.push_back(nr->first);
    if ((nr->first - x_).norm() <= sep_) return;
    if (!domain_.contains(o_, nr->first)) {
      ++outside_;
      return;
    }
    for (const auto& c : found_) {
      if ((c.y - nr->first).norm() <= sep_) return;
    }
    found_.push_back(assess(nr->first, nr->second));
  }

 private:
  Vec2 residual(const Vec2& z) const { return z + diagonal_side(o_, z) - w_; }

  double log_m(const Vec2& z, Vec2* grad) const
  {
    double lm = 0.0;
    if (grad != nullptr) grad->setZero();
    for (const auto& r : roots_) {
      const Vec2 d = z - r;
      const double q = std::max(d.squaredNorm(), 1e-300);
      const double a = len_ * len_ / q;
      lm += std::log1p(a);
      if (grad != nullptr) *grad += (-2.0 * a / (q * (1.0 + a))) * d;
    }
    return lm;
  }

  std::optional<std::pair<Vec2, double>> newton(Vec2 z) const
  {
    if (!o_.inside(z, margin_)) return std::nullopt;
    const Mat2 rr = rot90<double>();
    Vec2 f = residual(z);
    double fn = f.norm();
    double merit = std::log(fn) + log_m(z, nullptr);
    for (int it = 0; it < 30 && fn > tol_; ++it) {
      const Mat2 j = Mat2::Identity() - rr * o_.hessian(z);
      if (!(std::abs(j.determinant()) > 1e-14 * j.squaredNorm())) break;
      Vec2 d = -(adjugate_inverse(j) * f);
      Vec2 g;
      log_m(z, &g);
      const double den = 1.0 - g.dot(d);
      if (den > 1e-3) d /= den;
      bool moved = false;
      double lambda = 1.0;
      for (int ls = 0; ls < 12; ++ls, lambda *= 0.5) {
        const Vec2 zn = z + lambda * d;
        if (!o_.inside(zn, margin_)) continue;
        const Vec2 fnew = residual(zn);
        const double mn = std::log(std::max(fnew.norm(), 1e-300)) + log_m(zn, nullptr);
        if (mn < merit) {
          z = zn;
          f = fnew;
          fn = fnew.norm();
          merit = mn;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    if (!(fn <= accept_)) return std::nullopt;
    polish(z, f, fn);
    return std::make_pair(z, fn);
  }

  // the deflated merit can stall near an ill-conditioned root; finish with
  // plain Newton on the residual, keeping only steps that reduce it
  void polish(Vec2& z, Vec2& f, double& fn) const
  {
    const Mat2 rr = rot90<double>();
    for (int it = 0; it < 8 && fn > tol_; ++it) {
      const Mat2 j = Mat2::Identity() - rr * o_.hessian(z);
      if (!(std::abs(j.determinant()) > 1e-14 * j.squaredNorm())) return;
      const Vec2 zn = z - adjugate_inverse(j) * f;
      if (!o_.inside(zn, margin_)) return;
      const Vec2 fnew = residual(zn);
      if (!(fnew.norm() < fn)) return;
      z = zn;
      f = fnew;
      fn = fnew.norm();
    }
  }

  Candidate assess(const Vec2& y, double res) const
  {
    Candidate c{y, res, in_predicted_region(x_, dx_, y, opd_), HexVerdict::not_applicable,
                std::numeric_limits<double>::infinity()};
    const auto hex = oracle_hexagon(x_, dx_, y);
    if (!hex) {
      c.hexagon = HexVerdict::failed;
      return c;
    }
    try {
      const HexagonTestReport rep = hexagon_inscription_test(o_, *hex);
      c.hexagon = rep.passed ? HexVerdict::passed : HexVerdict::failed;
      c.hexagon_residual = *std::max_element(rep.residuals.begin(), rep.residuals.end());
    } catch (const PreconditionError&) {
      // a shift of the hexagon falls outside the domain
    }
    return c;
  }

  const CovariogramOracle& o_;
  SamplingDomain domain_;
  Vec2 x_, dx_, w_;
  double opd_, tol_, accept_, sep_, len_, margin_;
  std::vector<Vec2> roots_;
  std::vector<Candidate> found_;
  int outside_ = 0;
};

double angle_between(const Vec2& a, const Vec2& b) { return std::abs(std::atan2(det2(a, b), a.dot(b))); }

}  // namespace

std::optional<SymmetricHexagon> oracle_hexagon(const Vec2& x, const Vec2& dx, const Vec2& y)
{
  const Vec2 w = x + dx;
  std::vector<Vec2> hull = convex_hull({Vec2::Zero(), x, w, dx, y, w - y});
  if (hull.size() != 6) return std::nullopt;
  std::size_t start = 0;
  for (std::size_t i = 1; i < 6; ++i) {
    if (hull[i].norm() < hull[start].norm()) start = i;
  }
  std::array<Vec2, 6> h;
  for (std::size_t i = 0; i < 6; ++i) h[i] = hull[(start + i) % 6];
  try {
    return SymmetricHexagon(h, 1e-9);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

std::vector<Vec2> geometric_conjugates(const SupportBody& k, const Vec2& x)
{
  const InscribedParallelogram par = inscribed_parallelogram(k, x);
  const Vec2 twice_mid = par.p[0] + par.p[2];
  const double t1 = par.theta[0];
  const double t2 = par.theta[1];
  const double t3 = par.theta[2];
  auto f = [&](double t) { return k.signed_distance(twice_mid - k.point(t)); };
  std::vector<Vec2> out;
  constexpr int kScan = 400;
  const double eps = 1e-4 * (t3 - t1);
  for (const auto& [a, b] : {std::make_pair(t1 + eps, t2 - eps), std::make_pair(t2 + eps, t3 - eps)}) {
    if (!(b > a)) continue;
    double prev_t = a;
    double prev_f = f(a);
    for (int i = 1; i <= kScan; ++i) {
      const double t = a + (b - a) * i / kScan;
      const double ft = f(t);
      if ((prev_f < 0.0) != (ft < 0.0)) {
        const double root = roots::bisect_secant(f, prev_t, t, 1e-15);
        out.push_back(par.p[0] - k.point(root));
      }
      prev_t = t;
      prev_f = ft;
    }
  }
  return out;
}

Conjugate find_conjugate(const CovariogramOracle& o, const Vec2& x, const ConjugateOptions& opts)
{
  if (!all_finite(x)) throw PreconditionError("shift vector is not finite");
  if (!o.inside(x, 2.0 * o.step())) throw PreconditionError("shift vector is outside the support domain");
  const double scale = o.dk_diameter();
  const double tol = opts.residual_tol * scale;
  const double accept = std::max(tol, 1e-9 * scale);

  Conjugate out;
  out.x = x;
  out.diagonal = x + diagonal_side(o, x);
  out.one_plus_detG = 1.0 + o.hessian(x).determinant();
  if (!(std::abs(out.one_plus_detG) > detg_tolerance(o, x, opts))) {
    throw PreconditionError("1 + det G(x) vanishes at x; the conjugate point is not isolated");
  }

  DeflatedSearch search(o, x, out.one_plus_detG, tol, accept, opts.domain);
  if (opts.warm_start) search.run(*opts.warm_start);
  for (const double side : {out.one_plus_detG, -out.one_plus_detG}) {
    for (const auto& z0 : mesh_starts(x, search.dx(), side, opts.mesh_along, opts.mesh_across)) {
      if (search.done()) break;
      search.run(z0);
    }
  }
  const auto& found = search.found();
  if (found.empty()) {
    throw NumericalError(search.outside() > 0 ? "conjugate point lies outside the sampling domain"
                                              : "no conjugate point found");
  }

  const Candidate best = *std::min_element(found.begin(), found.end(), better);
  if (best.rank() > 2 || (best.rank() == 2 && o.body() == nullptr)) {
    if (search.outside() > 0) throw NumericalError("conjugate point lies outside the sampling domain");
    throw NumericalError("no root of y + D(y) = x + D(x) passed the hexagon test");
  }
  out.y = best.y;
  out.residual = best.residual;
  out.predicted_region = best.predicted;
  out.hexagon_passed = best.hexagon == HexVerdict::passed;
  out.hexagon_residual = best.hexagon_residual;
  out.candidates = static_cast<int>(found.size());

  const bool unverified = best.rank() == 2;
  if (opts.geometric_check || unverified) {
    if (const ConvexBody* body = o.body()) {
      if (const auto* s = std::get_if<SupportBody>(body)) {
        const auto ys = geometric_conjugates(*s, x);
        double gap = std::numeric_limits<double>::infinity();
        for (const auto& yg : ys) {
          if ((yg - out.y).norm() < gap) {
            gap = (yg - out.y).norm();
            out.y_geometric = yg;
          }
        }
        if (out.y_geometric) out.strategy_gap = gap;
      }
    }
    if (unverified && !(out.strategy_gap && *out.strategy_gap <= kStrategyAgreement * scale)) {
      throw NumericalError("conjugate point could not be verified: hexagon test not applicable and the "
                           "boundary construction disagrees");
    }
  }
  return out;
}

NormalPair normal_pair(const CovariogramOracle& o, const Vec2& x, const ConjugateOptions& opts)
{
  return normal_pair_from(o, find_conjugate(o, x, opts));
}

NormalPair normal_pair_from(const CovariogramOracle& o, const Conjugate& c)
{
  NormalPair np;
  np.x = c.x;
  np.y = c.y;
  np.conjugate = c;
  const EigenNormals en = eigen_normals(o.hessian(c.x), o.hessian(c.y), c.x);
  np.v1 = en.v1;
  np.v3 = en.v3;
  np.eigenvalues = en.eigenvalues;
  np.eigen_gap = en.gap;
  return np;
}

double pair_separation(const NormalPair& np) { return angle_between(np.v1, np.v3); }

double normal_pair_error(const NormalPair& np, const SupportBody& k)
{
  const InscribedParallelogram par = inscribed_parallelogram(k, np.x);
  const Vec2 a = par.u[0];
  const Vec2 b = -par.u[2];
  const double direct = std::max(angle_between(np.v1, a), angle_between(np.v3, b));
  const double swapped = std::max(angle_between(np.v1, b), angle_between(np.v3, a));
  return std::min(direct, swapped);
}

std::string to_string(TraceStatus s)
{
  switch (s) {
    case TraceStatus::complete: return "complete";
    case TraceStatus::left_domain: return "left_domain";
    case TraceStatus::sign_change: return "sign_change";
    case TraceStatus::membership_lost: return "membership_lost";
    case TraceStatus::solver_failed: return "solver_failed";
  }
  return "unknown";
}

namespace {

struct HeldState {
  double c = 0.0;       // angle of the held candidate minus the held angle
  double other = 0.0;   // angle of the partner to the held direction
  bool held_is_v3 = true;
  Vec2 y = Vec2::Zero();
  double one_plus_detG = 0.0;
};

class HeldConstraint {
 public:
  HeldConstraint(const CovariogramOracle& o, const Vec2& held, const ConjugateOptions& opts)
      : o_(o), held_(held), opts_(opts)
  {
  }

  HeldState eval(const Vec2& x, const Vec2& warm) const
  {
    ConjugateOptions co = opts_;
    co.warm_start = warm;
    co.geometric_check = false;
    // the warm start almost always lands; keep the fallback mesh small
    co.mesh_along = std::min(co.mesh_along, 6);
    co.mesh_across = std::min(co.mesh_across, 3);
    const NormalPair np = normal_pair(o_, x, co);
    HeldState s;
    s.y = np.y;
    s.one_plus_detG = np.conjugate.one_plus_detG;
    s.held_is_v3 = angle_between(np.v3, held_) <= angle_between(np.v1, held_);
    const Vec2& h = s.held_is_v3 ? np.v3 : np.v1;
    const Vec2& p = s.held_is_v3 ? np.v1 : np.v3;
    s.c = std::atan2(det2(held_, h), held_.dot(h));
    s.other = angle_between(p, held_);
    return s;
  }

  Vec2 gradient(const Vec2& x, const Vec2& warm, double delta) const
  {
    Vec2 g;
    for (int i = 0; i < 2; ++i) {
      Vec2 e = Vec2::Zero();
      e(i) = delta;
      g(i) = (eval(x + e, warm).c - eval(x - e, warm).c) / (2.0 * delta);
    }
    return g;
  }

 private:
  const CovariogramOracle& o_;
  Vec2 held_;
  ConjugateOptions opts_;
};

}  // namespace

ArcTrace trace_arc(const CovariogramOracle& o, const Vec2& x0, double arclen, const TraceOptions& opts)
{
  if (!(arclen > 0.0)) throw PreconditionError("arc length must be positive");
  if (!opts.domain.contains(o, x0)) throw PreconditionError("start point is outside the sampling domain");
  ArcTrace tr;
  tr.x0 = x0;
  tr.step = opts.step > 0.0 ? opts.step : 1e-3 * o.dk_diameter();

  const NormalPair np0 = normal_pair(o, x0, opts.conjugate);
  const double sep = pair_separation(np0);
  tr.n_radius = opts.n_radius > 0.0 ? opts.n_radius : std::min(sep / 4.0, 0.2);
  tr.held_normal = np0.v3;
  tr.other_normal = np0.v1;

  const HeldConstraint con(o, tr.held_normal, opts.conjugate);
  const double delta = 0.5 * tr.step;
  const double ctol = 1e-10;

  Vec2 x = x0;
  Vec2 y = np0.y;
  const double sign0 = np0.conjugate.one_plus_detG > 0.0 ? 1.0 : -1.0;
  Vec2 prev_tangent = Vec2::Zero();
  tr.curve.push_back(x);
  tr.status = TraceStatus::complete;

  auto stop = [&](TraceStatus s, const std::string& why) {
    tr.status = s;
    tr.reason = why;
  };

  for (int n = 0; n < opts.max_steps && tr.length < arclen; ++n) {
    Vec2 grad;
    try {
      grad = con.gradient(x, y, delta);
    } catch (const PreconditionError& e) {
      stop(TraceStatus::sign_change, e.what());
      break;
    } catch (const NumericalError& e) {
      stop(TraceStatus::solver_failed, e.what());
      break;
    }
    if (!(grad.norm() > 0.0) || !all_finite(grad)) {
      stop(TraceStatus::solver_failed, "constraint gradient vanished");
      break;
    }
    Vec2 tangent = rot90(grad).normalized();
    if (n == 0) {
      if (det2(x0, tangent) < 0.0) tangent = -tangent;
    } else if (tangent.dot(prev_tangent) < 0.0) {
      tangent = -tangent;
    }
    prev_tangent = tangent;

    const double h = std::min(tr.step, arclen - tr.length);
    Vec2 xn = x + h * tangent;
    HeldState st;
    bool ok = false;
    try {
      for (int it = 0; it < 12; ++it) {
        if (!opts.domain.contains(o, xn)) break;
        st = con.eval(xn, y);
        if (std::abs(st.c) <= ctol) {
          ok = true;
          break;
        }
        xn -= st.c * grad / grad.squaredNorm();
      }
    } catch (const PreconditionError& e) {
      stop(TraceStatus::sign_change, e.what());
      break;
    } catch (const NumericalError& e) {
      stop(TraceStatus::solver_failed, e.what());
      break;
    }
    if (!opts.domain.contains(o, xn)) {
      stop(TraceStatus::left_domain, "trace reached the edge of the sampling domain");
      break;
    }
    if (!ok) {
      stop(TraceStatus::solver_failed, "corrector did not converge");
      break;
    }
    if ((st.one_plus_detG > 0.0 ? 1.0 : -1.0) != sign0) {
      stop(TraceStatus::sign_change, "1 + det G changed sign");
      break;
    }
    if (std::abs(st.c) > tr.n_radius || st.other <= tr.n_radius) {
      stop(TraceStatus::membership_lost, "normal candidates left their neighborhoods");
      break;
    }
    if (!st.held_is_v3) tr.swap_violation = true;
    tr.max_constraint_residual = std::max(tr.max_constraint_residual, std::abs(st.c));
    tr.length += (xn - x).norm();
    x = xn;
    y = st.y;
    tr.curve.push_back(x);
  }
  tr.arc.reserve(tr.curve.size());
  for (const auto& p : tr.curve) tr.arc.push_back(p - tr.curve.front());
  return tr;
}

std::vector<Vec2> reference_arc(const SupportBody& k, const ArcTrace& tr, int n)
{
  if (tr.curve.size() < 2) throw PreconditionError("trace has fewer than two points");
  const InscribedParallelogram a = inscribed_parallelogram(k, tr.curve.front());
  const InscribedParallelogram b = inscribed_parallelogram(k, tr.curve.back());
  const bool held_u3 = angle_between(tr.held_normal, -a.u[2]) <= angle_between(tr.held_normal, a.u[0]);
  const int idx = held_u3 ? 3 : 1;
  double ta = a.theta[idx];
  double tb = ta + angle_diff(b.theta[idx], ta);
  if (tb < ta) std::swap(ta, tb);
  std::vector<Vec2> pts = boundary_arc(k, ta, tb, n).samples;
  if (!held_u3) {
    for (auto& p : pts) p = -p;
  }
  return pts;
}

double polyline_hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b)
{
  if (a.empty() || b.empty()) throw PreconditionError("polyline is empty");
  auto point_to = [](const Vec2& p, const std::vector<Vec2>& line) {
    if (line.size() == 1) return (p - line[0]).norm();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      const Vec2 e = line[i + 1] - line[i];
      const double ee = e.squaredNorm();
      const double t = ee > 0.0 ? std::clamp((p - line[i]).dot(e) / ee, 0.0, 1.0) : 0.0;
      best = std::min(best, (p - line[i] - t * e).norm());
    }
    return best;
  };
  double d = 0.0;
  for (const auto& p : a) d = std::max(d, point_to(p, b));
  for (const auto& p : b) d = std::max(d, point_to(p, a));
  return d;
}

namespace {

template <class F>
Vec2 compass_search(F&& f, Vec2 t, double step, double min_step)
{
  double best = f(t);
  static const Vec2 dirs[] = {Vec2(1, 0), Vec2(-1, 0), Vec2(0, 1), Vec2(0, -1),
                              Vec2(1, 1) / std::sqrt(2.0), Vec2(-1, -1) / std::sqrt(2.0),
                              Vec2(1, -1) / std::sqrt(2.0), Vec2(-1, 1) / std::sqrt(2.0)};
  while (step > min_step) {
    bool improved = false;
    for (const auto& d : dirs) {
      const Vec2 cand = t + step * d;
      const double v = f(cand);
      if (v < best) {
        best = v;
        t = cand;
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  return t;
}

}  // namespace

Comparison compare_arcs(const std::vector<Vec2>& a, const std::vector<Vec2>& b)
{
  if (a.empty() || b.empty()) throw PreconditionError("polyline is empty");
  Vec2 ma = Vec2::Zero();
  Vec2 mb = Vec2::Zero();
  for (const auto& p : a) ma += p;
  for (const auto& p : b) mb += p;
  ma /= static_cast<double>(a.size());
  mb /= static_cast<double>(b.size());
  auto shifted = [&](const Vec2& t) {
    std::vector<Vec2> s(b);
    for (auto& p : s) p += t;
    return s;
  };
  auto f = [&](const Vec2& t) { return polyline_hausdorff(a, shifted(t)); };
  const double d0 = f(ma - mb);
  const double extent = std::max(1e-12, polyline_hausdorff(a, {ma}));
  Comparison c;
  c.translation = compass_search(f, ma - mb, std::max(d0, 1e-6 * extent), 1e-12 * extent);
  c.hausdorff = f(c.translation);
  return c;
}

Comparison compare_bodies(const ConvexBody& a, const ConvexBody& b)
{
  constexpr int kDirections = 2048;
  std::vector<double> ha(kDirections), hb(kDirections), hbr(kDirections);
  std::vector<Vec2> u(kDirections);
  for (int i = 0; i < kDirections; ++i) {
    const double t = kTwoPi * i / kDirections;
    u[i] = unit_vector(t);
    ha[i] = support(a, t);
    hb[i] = support(b, t);
    hbr[i] = support(b, t + kPi);
  }
  const double scale = std::max(diameter(a), diameter(b));
  const Vec2 sa = steiner_point(a);
  const Vec2 sb = steiner_point(b);
  Comparison best;
  best.hausdorff = std::numeric_limits<double>::infinity();
  for (const bool refl : {false, true}) {
    const auto& h = refl ? hbr : hb;
    auto f = [&](const Vec2& t) {
      double d = 0.0;
      for (int i = 0; i < kDirections; ++i) d = std::max(d, std::abs(ha[i] - h[i] - t.dot(u[i])));
      return d;
    };
    const Vec2 t0 = sa - (refl ? Vec2(-sb) : sb);
    const Vec2 t = compass_search(f, t0, std::max(f(t0), 1e-9 * scale), 1e-14 * scale);
    const double d = f(t);
    if (d < best.hausdorff) {
      best.hausdorff = d;
      best.reflected = refl;
      best.translation = t;
    }
  }
  return best;
}

ConvexBody reconstruct_symmetric(const CovariogramOracle& o)
{
  const SymmetryVerdict v = central_symmetry_test(o, 128);
  if (!v.is_symmetric) {
    throw PreconditionError("covariogram fails the central symmetry test; reconstruction needs a symmetric body");
  }
  if (const ConvexBody* body = o.body()) {
    const ConvexBody dk = difference_body(*body);
    if (const auto* s = std::get_if<SupportBody>(&dk)) return ConvexBody(SupportBody(s->support() * 0.5));
    return ConvexBody(std::get<ConvexPolygon>(dk).scaled(0.5));
  }
  const auto* grid = dynamic_cast<const GridOracle*>(&o);
  if (grid == nullptr) throw PreconditionError("oracle has neither a body nor a radial table");
  const auto& radial = grid->radial_table();
  const int m = static_cast<int>(radial.size());
  std::vector<Vec2> pts;
  pts.reserve(radial.size());
  for (int i = 0; i < m; ++i) pts.push_back(0.5 * radial[static_cast<std::size_t>(i)] * unit_vector(kTwoPi * i / m));
  const auto poly = make_polygon(convex_hull(pts));
  if (!poly) throw NumericalError("radial table does not bound a convex polygon");
  return ConvexBody(*poly);
}

double equality_harness(const ConvexBody& k, const ConvexBody& l, int n)
{
  if (n < 2) throw PreconditionError("harness grid needs n >= 2");
  const auto [klo, khi] = bounding_box(k);
  const auto [llo, lhi] = bounding_box(l);
  const double w = 1.05 * std::max((khi - klo).maxCoeff(), (lhi - llo).maxCoeff());
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec2 x(-w + 2.0 * w * i / (n - 1), -w + 2.0 * w * j / (n - 1));
      d = std::max(d, std::abs(covariogram_value(k, x) - covariogram_value(l, x)));
    }
  }
  return d;
}

}  // namespace cov
