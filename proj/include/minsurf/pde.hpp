// SPDX-License-Identifier: Apache-2.0
#pragma once

/// Pointwise residual evaluators for the minimal surface equation in its
/// classical form
///     u_tt (1 + u_x^2) - 2 u_t u_x u_tx + u_xx (1 + u_t^2),
/// its divergence form
///     d/dt (u_t / W) + d/dx (u_x / W),  W = sqrt(1 + u_t^2 + u_x^2),
/// the spacelike zero-mean-curvature (maximal surface) analog
///     u_tt (1 - u_x^2) + 2 u_t u_x u_tx + u_xx (1 - u_t^2),
/// and the scaling identity Q[u_lambda](p) = lambda * Q[u](lambda p).

#include <algorithm>
#include <cmath>
#include <functional>

#include "minsurf/jet.hpp"
#include "minsurf/surfaces.hpp"

namespace minsurf {

/// Classical-form residual; zero iff the jet satisfies the pointwise equation.
inline double minimal_residual(const Jet<3>& j) {
  return j.utt() * (1.0 + j.ux() * j.ux()) - 2.0 * j.ut() * j.ux() * j.utx() +
         j.uxx() * (1.0 + j.ut() * j.ut());
}

inline double gradient_norm(const Jet<3>& j) {
  return std::sqrt(1.0 + j.ut() * j.ut() + j.ux() * j.ux());
}

/// Divergence-form residual by the analytic expansion, equal to
/// minimal_residual / W^3.
inline double divergence_residual(const Jet<3>& j) {
  const double w = gradient_norm(j);
  return minimal_residual(j) / (w * w * w);
}

/// Divergence-form residual evaluated independently: u_t/W and u_x/W are
/// built as order-2 jets from the order-3 surface jet and differentiated.
inline double divergence_residual_nested(const Jet<3>& j) {
  const Jet<2> p = j.d_dt();
  const Jet<2> q = j.d_dx();
  const Jet<2> w = sqrt(1.0 + square(p) + square(q));
  const Jet<2> flux_t = div(p, w);
  const Jet<2> flux_x = div(q, w);
  return flux_t.d_dt().value() + flux_x.d_dx().value();
}

inline double maximal_residual(const Jet<3>& j) {
  return j.utt() * (1.0 - j.ux() * j.ux()) + 2.0 * j.ut() * j.ux() * j.utx() +
         j.uxx() * (1.0 - j.ut() * j.ut());
}

/// Positive where the graph is spacelike for the maximal-surface equation.
inline double spacelike_indicator(const Jet<3>& j) {
  return 1.0 - j.ut() * j.ut() - j.ux() * j.ux();
}

/// Residual divided by (1 + |u_tt| + |u_tx| + |u_xx|): scale-aware form used
/// for verdicts near the singular set.
inline double normalize_residual(double residual, const Jet<3>& j) {
  return residual / (1.0 + std::abs(j.utt()) + std::abs(j.utx()) + std::abs(j.uxx()));
}

/// Normalized-residual threshold below which a point counts as satisfying
/// the equation.
inline constexpr double kPdeVerdictTol = 1e-9;

struct ResidualSample {
  double t, x;
  double r_minimal;
  double r_divergence;
  double r_maximal;
  double gradient_norm_W;
  double spacelike;           ///< 1 - u_t^2 - u_x^2 (flag, not a rejection)
  double r_minimal_normalized;
};

inline ResidualSample residual_sample(const SurfaceFamily& family, double t, double x) {
  const Jet<3> j = family.eval_jet(t, x);
  ResidualSample s;
  s.t = t;
  s.x = x;
  s.r_minimal = minimal_residual(j);
  s.r_divergence = divergence_residual(j);
  s.r_maximal = maximal_residual(j);
  s.gradient_norm_W = gradient_norm(j);
  s.spacelike = spacelike_indicator(j);
  s.r_minimal_normalized = normalize_residual(s.r_minimal, j);
  return s;
}

/// A scalar field evaluable to an order-3 jet at a point.
using JetField = std::function<Jet<3>(double, double)>;

struct ScalingCheck {
  double lhs;  ///< Q[u_lambda] at the point
  double rhs;  ///< lambda * Q[u] at the scaled point
};

/// Homogeneity of the operator under u -> u_lambda = u(lambda .)/lambda.
/// The jet of u_lambda at p is obtained from the jet of u at lambda*p by the
/// exact coefficient rescaling d_ij -> lambda^(i+j-1) d_ij.
inline ScalingCheck scaling_residual_identity(const JetField& f, double lambda,
                                              double t, double x) {
  if (!(lambda > 0.0)) throw InvalidParameter("scaling requires lambda > 0");
  const Jet<3> far = f(lambda * t, lambda * x);
  Jet<3> scaled;
  for (int it = 0; it <= 3; ++it)
    for (int ix = 0; it + ix <= 3; ++ix)
      scaled.at(it, ix) = std::pow(lambda, it + ix - 1) * far.deriv(it, ix);
  return {minimal_residual(scaled), lambda * minimal_residual(far)};
}

}  // namespace minsurf
