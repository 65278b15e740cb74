// SPDX-License-Identifier: Apache-2.0
#pragma once

/// Truncated bivariate Taylor jets: the value of a scalar field of two
/// coordinates together with all partial derivatives through total order N,
/// propagated exactly through arithmetic and a small set of elementary
/// functions. One slot per multi-index, so mixed-partial symmetry holds by
/// construction.

#include <array>
#include <cmath>
#include <string>

#include "minsurf/errors.hpp"

namespace minsurf {

/// Coordinate tag for seeding a jet variable. The first slot is conventionally
/// called t and the second x; similarity-space jets reuse the same layout with
/// (tau, rho) in place of (t, x).
enum class Var { t, x };

namespace detail {

constexpr int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

constexpr int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace detail

inline constexpr double kDivisionEpsilon = 1e-12;

template <int N>
class Jet {
  static_assert(N >= 0, "jet order must be non-negative");

 public:
  static constexpr int order = N;
  static constexpr int n_coeffs = (N + 1) * (N + 2) / 2;

  constexpr Jet() : c_{} {}
  explicit constexpr Jet(double value) : c_{} { c_[0] = value; }

  /// Jet of the coordinate function itself: value, unit first derivative in
  /// its own slot, everything else zero.
  static constexpr Jet variable(Var v, double value) {
    Jet j;
    j.c_[0] = value;
    if constexpr (N >= 1) j.c_[v == Var::t ? slot(1, 0) : slot(0, 1)] = 1.0;
    return j;
  }

  static constexpr Jet constant(double value) { return Jet(value); }

  /// Flat index of the (d/dt)^it (d/dx)^ix slot. Graded ordering:
  /// (0,0); (1,0),(0,1); (2,0),(1,1),(0,2); (3,0),(2,1),(1,2),(0,3); ...
  static constexpr int slot(int it, int ix) {
    const int d = it + ix;
    return d * (d + 1) / 2 + ix;
  }

  constexpr double deriv(int it, int ix) const {
    return (it >= 0 && ix >= 0 && it + ix <= N) ? c_[slot(it, ix)] : 0.0;
  }
  constexpr double& at(int it, int ix) { return c_[slot(it, ix)]; }

  constexpr double value() const { return c_[0]; }

  constexpr double u() const { return c_[0]; }
  constexpr double ut() const requires(N >= 1) { return c_[slot(1, 0)]; }
  constexpr double ux() const requires(N >= 1) { return c_[slot(0, 1)]; }
  constexpr double utt() const requires(N >= 2) { return c_[slot(2, 0)]; }
  constexpr double utx() const requires(N >= 2) { return c_[slot(1, 1)]; }
  constexpr double uxx() const requires(N >= 2) { return c_[slot(0, 2)]; }
  constexpr double uttt() const requires(N >= 3) { return c_[slot(3, 0)]; }
  constexpr double uttx() const requires(N >= 3) { return c_[slot(2, 1)]; }
  constexpr double utxx() const requires(N >= 3) { return c_[slot(1, 2)]; }
  constexpr double uxxx() const requires(N >= 3) { return c_[slot(0, 3)]; }

  bool finite() const {
    for (double v : c_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  /// Jet of the partial derivative with respect to the first coordinate,
  /// one order lower.
  Jet<N - 1> d_dt() const requires(N >= 1) {
    Jet<N - 1> r;
    for (int it = 0; it <= N - 1; ++it)
      for (int ix = 0; it + ix <= N - 1; ++ix) r.at(it, ix) = deriv(it + 1, ix);
    return r;
  }

  Jet<N - 1> d_dx() const requires(N >= 1) {
    Jet<N - 1> r;
    for (int it = 0; it <= N - 1; ++it)
      for (int ix = 0; it + ix <= N - 1; ++ix) r.at(it, ix) = deriv(it, ix + 1);
    return r;
  }

  template <int M>
  Jet<M> truncated() const {
    static_assert(M <= N);
    Jet<M> r;
    for (int it = 0; it <= M; ++it)
      for (int ix = 0; it + ix <= M; ++ix) r.at(it, ix) = deriv(it, ix);
    return r;
  }

  constexpr Jet operator-() const {
    Jet r;
    for (int i = 0; i < n_coeffs; ++i) r.c_[i] = -c_[i];
    return r;
  }

  constexpr Jet& operator+=(const Jet& o) {
    for (int i = 0; i < n_coeffs; ++i) c_[i] += o.c_[i];
    return *this;
  }
  constexpr Jet& operator-=(const Jet& o) {
    for (int i = 0; i < n_coeffs; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  constexpr Jet& operator*=(double s) {
    for (int i = 0; i < n_coeffs; ++i) c_[i] *= s;
    return *this;
  }
  constexpr Jet& operator/=(double s) { return *this *= 1.0 / s; }

  friend constexpr Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend constexpr Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend constexpr Jet operator+(Jet a, double s) {
    a.c_[0] += s;
    return a;
  }
  friend constexpr Jet operator+(double s, Jet a) {
    a.c_[0] += s;
    return a;
  }
  friend constexpr Jet operator-(Jet a, double s) {
    a.c_[0] -= s;
    return a;
  }
  friend constexpr Jet operator-(double s, const Jet& a) { return -a + s; }
  friend constexpr Jet operator*(Jet a, double s) { return a *= s; }
  friend constexpr Jet operator*(double s, Jet a) { return a *= s; }
  friend constexpr Jet operator/(Jet a, double s) { return a /= s; }

  /// Leibniz product over multi-indices.
  friend constexpr Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int it = 0; it <= N; ++it)
      for (int ix = 0; it + ix <= N; ++ix) {
        double sum = 0.0;
        for (int p = 0; p <= it; ++p)
          for (int q = 0; q <= ix; ++q)
            sum += detail::binomial(it, p) * detail::binomial(ix, q) *
                   a.deriv(p, q) * b.deriv(it - p, ix - q);
        r.at(it, ix) = sum;
      }
    return r;
  }

  constexpr Jet& operator*=(const Jet& o) { return *this = *this * o; }

  friend Jet operator/(const Jet& a, const Jet& b) { return div(a, b); }

 private:
  std::array<double, n_coeffs> c_;
};

using Jet3 = Jet<3>;

/// Evaluates the order-N Taylor polynomial of an outer univariate function,
/// given its derivatives [f(g0), f'(g0), f''(g0), f'''(g0)] at the inner
/// value (entries beyond order N are ignored), on the inner jet. This is
/// truncated Faa di Bruno via Horner on the value-free part of the inner jet.
template <int N>
Jet<N> compose_univariate(const std::array<double, 4>& outer_derivs,
                          const Jet<N>& inner) {
  static_assert(N <= 3);
  Jet<N> w = inner;
  w.at(0, 0) = 0.0;
  Jet<N> acc(outer_derivs[N] / detail::factorial(N));
  for (int k = N - 1; k >= 0; --k) {
    acc = acc * w;
    acc.at(0, 0) += outer_derivs[k] / detail::factorial(k);
  }
  return acc;
}

/// Composition u = v(g1, g2) where v is a jet in two auxiliary variables
/// expanded at (g1.value, g2.value) and g1, g2 are jets in the base
/// coordinates. Evaluates v's truncated Taylor polynomial on the value-free
/// parts of the inner jets.
template <int N>
Jet<N> compose(const Jet<N>& outer, const Jet<N>& g1, const Jet<N>& g2) {
  Jet<N> w1 = g1;
  w1.at(0, 0) = 0.0;
  Jet<N> w2 = g2;
  w2.at(0, 0) = 0.0;
  std::array<Jet<N>, N + 1> p1, p2;
  p1[0] = Jet<N>(1.0);
  p2[0] = Jet<N>(1.0);
  for (int i = 1; i <= N; ++i) {
    p1[i] = p1[i - 1] * w1;
    p2[i] = p2[i - 1] * w2;
  }
  Jet<N> acc;
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j) {
      const double c =
          outer.deriv(i, j) / (detail::factorial(i) * detail::factorial(j));
      if (c != 0.0) acc += c * (p1[i] * p2[j]);
    }
  return acc;
}

template <int N>
Jet<N> square(const Jet<N>& a) {
  return a * a;
}

template <int N>
Jet<N> reciprocal(const Jet<N>& a, double eps = kDivisionEpsilon) {
  static_assert(N <= 3);
  const double s = a.value();
  if (std::abs(s) < eps)
    throw DivisionByZeroJet("jet reciprocal at value " + std::to_string(s));
  const double inv = 1.0 / s;
  return compose_univariate<N>(
      {inv, -inv * inv, 2.0 * inv * inv * inv, -6.0 * inv * inv * inv * inv},
      a);
}

template <int N>
Jet<N> div(const Jet<N>& a, const Jet<N>& b, double eps = kDivisionEpsilon) {
  return a * reciprocal(b, eps);
}

template <int N>
Jet<N> sqrt(const Jet<N>& a) {
  static_assert(N <= 3);
  const double s = a.value();
  if (!(s > 0.0)) throw DomainError("jet sqrt of non-positive value");
  const double r = std::sqrt(s);
  return compose_univariate<N>(
      {r, 0.5 / r, -0.25 / (r * s), 0.375 / (r * s * s)}, a);
}

template <int N>
Jet<N> log(const Jet<N>& a) {
  static_assert(N <= 3);
  const double s = a.value();
  if (!(s > 0.0)) throw DomainError("jet log of non-positive value");
  const double inv = 1.0 / s;
  return compose_univariate<N>(
      {std::log(s), inv, -inv * inv, 2.0 * inv * inv * inv}, a);
}

template <int N>
Jet<N> atan(const Jet<N>& a) {
  static_assert(N <= 3);
  const double s = a.value();
  const double d = 1.0 / (1.0 + s * s);
  return compose_univariate<N>(
      {std::atan(s), d, -2.0 * s * d * d, (6.0 * s * s - 2.0) * d * d * d}, a);
}

template <int N>
Jet<N> asinh(const Jet<N>& a) {
  static_assert(N <= 3);
  const double s = a.value();
  const double q = 1.0 + s * s;
  const double r = std::sqrt(q);
  return compose_univariate<N>(
      {std::asinh(s), 1.0 / r, -s / (q * r), (2.0 * s * s - 1.0) / (q * q * r)},
      a);
}

}  // namespace minsurf
