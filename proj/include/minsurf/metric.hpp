// SPDX-License-Identifier: Apache-2.0
#pragma once

/// The instanton metric built from a surface jet:
///   ds^2 = a (dt^2 + dy^2) + b (dx^2 + dz^2) + c (dt dx + dy dz),
///   a = (1+u_t^2)/W,  b = (1+u_x^2)/W,  c = 2 u_t u_x / W,
/// with coordinate order (t, y, x, z); the line-element cross term puts c/2
/// into the symmetric component slots. Also evaluates the explicit printed
/// coefficient formulas for the log family verbatim, typos and all, so the
/// audit can tabulate where they disagree with the jet-computed ones.

#include <array>
#include <cmath>

#include "minsurf/errors.hpp"
#include "minsurf/jet.hpp"
#include "minsurf/surfaces.hpp"

namespace minsurf {

/// Symmetric 4x4 with one slot per unordered index pair.
template <class T>
class SymMat4 {
 public:
  T& operator()(int i, int j) { return v_[index(i, j)]; }
  const T& operator()(int i, int j) const { return v_[index(i, j)]; }

 private:
  static int index(int i, int j) {
    if (i > j) std::swap(i, j);
    return i * (7 - i) / 2 + j;
  }
  std::array<T, 10> v_{};
};

struct MetricCoeffs {
  double a, b, c;
  double W;
};

inline MetricCoeffs metric_coeffs(const Jet<3>& j) {
  const double p = j.ut(), q = j.ux();
  const double w = std::sqrt(1.0 + p * p + q * q);
  return {(1.0 + p * p) / w, (1.0 + q * q) / w, 2.0 * p * q / w, w};
}

/// The 4x4 metric at a point with each component carrying (t,x)-derivatives
/// through order 2. Index order (t, y, x, z).
struct MetricJet {
  SymMat4<Jet<2>> g;

  static MetricJet from_surface_jet(const Jet<3>& j) {
    const Jet<2> p = j.d_dt();
    const Jet<2> q = j.d_dx();
    const Jet<2> w = sqrt(1.0 + square(p) + square(q));
    const Jet<2> a = div(1.0 + square(p), w);
    const Jet<2> b = div(1.0 + square(q), w);
    const Jet<2> half_c = div(p * q, w);

    MetricJet m;
    m.g(0, 0) = a;
    m.g(1, 1) = a;
    m.g(2, 2) = b;
    m.g(3, 3) = b;
    m.g(0, 2) = half_c;
    m.g(1, 3) = half_c;
    return m;
  }

  std::array<std::array<double, 4>, 4> values() const {
    std::array<std::array<double, 4>, 4> v{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) v[i][j] = g(i, j).value();
    return v;
  }
};

inline MetricJet assemble_metric(const SurfaceFamily& family, double t, double x,
                                 double margin = 0.0) {
  return MetricJet::from_surface_jet(family.eval_jet(t, x, margin));
}

inline double metric_det(const MetricJet& m) {
  // two identical 2x2 blocks in the (t,x) and (y,z) planes
  const double a = m.g(0, 0).value();
  const double b = m.g(2, 2).value();
  const double h = m.g(0, 2).value();
  const double block = a * b - h * h;
  return block * block;
}

inline bool positive_definite(const MetricJet& m) {
  const auto v = m.values();
  // leading principal minors in the order (t, y, x, z)
  const double m1 = v[0][0];
  const double m2 = v[0][0] * v[1][1];
  const double m3 = v[2][2] * m2 - v[0][2] * v[0][2] * v[1][1];
  const double m4 = metric_det(m);
  return m1 > 0.0 && m2 > 0.0 && m3 > 0.0 && m4 > 0.0;
}

/// Literal transcription of the printed explicit coefficients for the log
/// family. The first summand of the a-bracket carries the factor
/// ((t^2+x^2)^(1/2)+x)^2 in both numerator and denominator exactly as
/// printed; the (x(t^2+x^2)^(1/2)+t^2) denominators are kept verbatim even
/// though they vanish along a ray in x < 0.
inline MetricCoeffs paper_coeffs(double t, double x, double k) {
  if (!(t > 0.0)) throw OutOfDomain("printed coefficients need t > 0");
  const double S = std::sqrt(t * t + x * x);
  const double plus = S + x;
  const double d1 = t * t * (t * t + x * x) * plus * plus;
  const double d2 = x * S + t * t;
  const double d3 = t * x * S + t * t * t + t * x * x;
  if (d1 == 0.0 || d2 == 0.0 || d3 == 0.0)
    throw DomainError("printed coefficient denominator vanishes at this point");

  const double term_t = k * k * x * x * plus * plus / d1;
  const double term_x = k * k * plus * plus / (d2 * d2);
  const double bracket = 1.0 + term_t + term_x;
  if (!(bracket > 0.0)) throw DomainError("printed bracket non-positive");
  const double inv_sqrt = 1.0 / std::sqrt(bracket);

  MetricCoeffs c;
  c.a = (1.0 + term_t) * inv_sqrt;
  c.b = (1.0 + term_x) * inv_sqrt;
  c.c = -2.0 * k * k * (x * S + x * x) * plus / (d3 * d2) * inv_sqrt;
  c.W = std::sqrt(bracket);
  return c;
}

struct CoeffComparison {
  MetricCoeffs computed;
  MetricCoeffs printed;
  double abs_diff_a, abs_diff_b, abs_diff_c;
};

/// Jet-computed vs printed coefficients for the log family at one point.
/// No agreement is presupposed; the audit tabulates the differences.
inline CoeffComparison coeff_compare(double t, double x, double k) {
  const SurfaceFamily f = SurfaceFamily::log_sinh(k);
  CoeffComparison cc;
  cc.computed = metric_coeffs(f.eval_jet(t, x));
  cc.printed = paper_coeffs(t, x, k);
  cc.abs_diff_a = std::abs(cc.computed.a - cc.printed.a);
  cc.abs_diff_b = std::abs(cc.computed.b - cc.printed.b);
  cc.abs_diff_c = std::abs(cc.computed.c - cc.printed.c);
  return cc;
}

}  // namespace minsurf
