#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace cov {

/// Finite real Fourier series  f(t) = a0 + sum_{k>=1} (a_k cos kt + b_k sin kt).
///
/// Coefficient k lives at index k-1 of cos_coeffs()/sin_coeffs(); both vectors
/// always have the same length (the degree).
template <typename Scalar>
class TrigSeries {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  struct Jet {
    Scalar f;
    Scalar df;
    Scalar d2f;
  };

  TrigSeries() : a0_(Scalar(0)) {}

  TrigSeries(Scalar a0, Vector a, Vector b) : a0_(a0), a_(std::move(a)), b_(std::move(b))
  {
    const Eigen::Index n = std::max(a_.size(), b_.size());
    pad(a_, n);
    pad(b_, n);
  }

  TrigSeries(Scalar a0, const std::vector<Scalar>& a, const std::vector<Scalar>& b)
      : TrigSeries(a0, to_vector(a), to_vector(b))
  {
  }

  Scalar a0() const { return a0_; }
  const Vector& cos_coeffs() const { return a_; }
  const Vector& sin_coeffs() const { return b_; }
  int degree() const { return static_cast<int>(a_.size()); }

  Scalar operator()(Scalar t) const { return jet(t).f; }

  /// Value and first two derivatives in one pass.
  Jet jet(Scalar t) const
  {
    using std::cos;
    using std::sin;
    const Scalar c1 = cos(t);
    const Scalar s1 = sin(t);
    Scalar ck = c1;
    Scalar sk = s1;
    Jet j{a0_, Scalar(0), Scalar(0)};
    const Eigen::Index n = a_.size();
    for (Eigen::Index i = 0; i < n; ++i) {
      const Scalar k = Scalar(i + 1);
      const Scalar even = a_[i] * ck + b_[i] * sk;
      j.f += even;
      j.df += k * (b_[i] * ck - a_[i] * sk);
      j.d2f -= k * k * even;
      const Scalar cn = ck * c1 - sk * s1;
      sk = sk * c1 + ck * s1;
      ck = cn;
    }
    return j;
  }

  /// Exact integral over [lo, hi].
  Scalar integral(Scalar lo, Scalar hi) const { return antiderivative(hi) - antiderivative(lo); }

  /// Antiderivative without constant: a0 t + sum (a_k sin kt - b_k cos kt)/k.
  Scalar antiderivative(Scalar t) const
  {
    using std::cos;
    using std::sin;
    const Scalar c1 = cos(t);
    const Scalar s1 = sin(t);
    Scalar ck = c1;
    Scalar sk = s1;
    Scalar acc = a0_ * t;
    for (Eigen::Index i = 0; i < a_.size(); ++i) {
      acc += (a_[i] * sk - b_[i] * ck) / Scalar(i + 1);
      const Scalar cn = ck * c1 - sk * s1;
      sk = sk * c1 + ck * s1;
      ck = cn;
    }
    return acc;
  }

  TrigSeries derivative() const
  {
    Vector a(a_.size());
    Vector b(b_.size());
    for (Eigen::Index i = 0; i < a_.size(); ++i) {
      const Scalar k = Scalar(i + 1);
      a[i] = k * b_[i];
      b[i] = -k * a_[i];
    }
    return TrigSeries(Scalar(0), a, b);
  }

  /// t -> f(t + phase).
  TrigSeries shifted(Scalar phase) const
  {
    using std::cos;
    using std::sin;
    Vector a(a_.size());
    Vector b(b_.size());
    for (Eigen::Index i = 0; i < a_.size(); ++i) {
      const Scalar k = Scalar(i + 1);
      const Scalar c = cos(k * phase);
      const Scalar s = sin(k * phase);
      a[i] = a_[i] * c + b_[i] * s;
      b[i] = b_[i] * c - a_[i] * s;
    }
    return TrigSeries(a0_, a, b);
  }

  /// t -> f(t + pi), computed exactly by alternating signs.
  TrigSeries half_turn() const
  {
    Vector a = a_;
    Vector b = b_;
    for (Eigen::Index i = 0; i < a.size(); i += 2) {
      a[i] = -a[i];
      b[i] = -b[i];
    }
    return TrigSeries(a0_, a, b);
  }

  TrigSeries operator+(const TrigSeries& o) const
  {
    const Eigen::Index n = std::max(a_.size(), o.a_.size());
    Vector a = Vector::Zero(n);
    Vector b = Vector::Zero(n);
    a.head(a_.size()) += a_;
    b.head(b_.size()) += b_;
    a.head(o.a_.size()) += o.a_;
    b.head(o.b_.size()) += o.b_;
    return TrigSeries(a0_ + o.a0_, a, b);
  }

  TrigSeries operator*(Scalar s) const { return TrigSeries(a0_ * s, Vector(a_ * s), Vector(b_ * s)); }

  /// Pointwise product; the degree adds.
  TrigSeries operator*(const TrigSeries& o) const
  {
    using C = std::complex<Scalar>;
    const int n = degree();
    const int m = o.degree();
    const auto lhs = complex_coeffs();
    const auto rhs = o.complex_coeffs();
    std::vector<C> out(2 * (n + m) + 1, C(0));
    for (int i = -n; i <= n; ++i) {
      for (int j = -m; j <= m; ++j) {
        out[i + j + n + m] += lhs[i + n] * rhs[j + m];
      }
    }
    const int d = n + m;
    Vector a(d);
    Vector b(d);
    for (int k = 1; k <= d; ++k) {
      a[k - 1] = Scalar(2) * out[k + d].real();
      b[k - 1] = Scalar(-2) * out[k + d].imag();
    }
    return TrigSeries(out[d].real(), a, b);
  }

  /// Adds c . (cos t, sin t), i.e. the support function of a translate.
  TrigSeries plus_first_harmonic(Scalar cx, Scalar cy) const
  {
    Vector a = a_;
    Vector b = b_;
    if (a.size() == 0) {
      a = Vector::Zero(1);
      b = Vector::Zero(1);
    }
    a[0] += cx;
    b[0] += cy;
    return TrigSeries(a0_, a, b);
  }

  /// Drops trailing harmonics with |a_k|,|b_k| <= tol.
  TrigSeries trimmed(Scalar tol = Scalar(0)) const
  {
    Eigen::Index n = a_.size();
    while (n > 0 && std::abs(a_[n - 1]) <= tol && std::abs(b_[n - 1]) <= tol) --n;
    return TrigSeries(a0_, Vector(a_.head(n)), Vector(b_.head(n)));
  }

 private:
  static Vector to_vector(const std::vector<Scalar>& v)
  {
    Vector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
    return out;
  }

  static void pad(Vector& v, Eigen::Index n)
  {
    if (v.size() == n) return;
    Vector w = Vector::Zero(n);
    w.head(v.size()) = v;
    v = std::move(w);
  }

  // c_k for k = -n..n stored at index k + n.
  std::vector<std::complex<Scalar>> complex_coeffs() const
  {
    using C = std::complex<Scalar>;
    const int n = degree();
    std::vector<C> c(2 * n + 1);
    c[n] = C(a0_, Scalar(0));
    for (int k = 1; k <= n; ++k) {
      c[n + k] = C(a_[k - 1] / Scalar(2), -b_[k - 1] / Scalar(2));
      c[n - k] = std::conj(c[n + k]);
    }
    return c;
  }

  Scalar a0_;
  Vector a_;
  Vector b_;
};

using TrigSeriesd = TrigSeries<double>;

}  // namespace cov
