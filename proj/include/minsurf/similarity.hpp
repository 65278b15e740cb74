// SPDX-License-Identifier: Apache-2.0
#pragma once

/// Similarity coordinates tau = -log t, rho = x/t, the reduced form of the
/// minimal surface operator in those coordinates, the rho-only profile ODEs,
/// and a fourth-order integrator producing sampled general profiles.
///
/// Two profile ODEs appear side by side on purpose: the reduced operator
/// restricted to tau-independent profiles gives
///     (rho^2 + 1) v'' + 2 rho v' = 0        ("paper" variant)
/// whose solutions are v = C*atan(rho) + D, while
///     (1 + rho^2) v'' + rho v' = 0          ("alt" variant)
/// is the equation the log profile v = asinh(rho) actually satisfies. The
/// audit evaluates both and lets the numbers speak.

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "minsurf/errors.hpp"
#include "minsurf/jet.hpp"
#include "minsurf/pde.hpp"
#include "minsurf/profile.hpp"

namespace minsurf {

struct SimilarityPoint {
  double tau;
  double rho;
};

inline SimilarityPoint to_similarity(double t, double x) {
  if (!(t > 0.0)) throw OutOfDomain("similarity coordinates need t > 0");
  return {-std::log(t), x / t};
}

inline std::pair<double, double> from_similarity(const SimilarityPoint& sp) {
  const double t = std::exp(-sp.tau);
  return {t, sp.rho * t};
}

/// The reduced operator in (tau, rho), literal transcription:
///   v_tt + (1+rho^2) v_rr + v_t + 2 rho v_r + 2 rho v_tr
///   + e^{2tau} v_r^2 (v_tt + v_t + 2 rho v_r + 2 rho v_tr + rho^2 v_rr)
///   + e^{2tau} (v_t + rho v_r)^2 v_rr
///   - 2 e^{2tau} v_r (v_t + rho v_r)(v_r + rho v_rr + v_tr).
/// The jet's first slot is tau, the second rho.
inline double reduced_residual(const Jet<3>& v, double tau, double rho) {
  const double vt = v.ut(), vr = v.ux();
  const double vtt = v.utt(), vtr = v.utx(), vrr = v.uxx();
  const double e2t = std::exp(2.0 * tau);
  const double inner = vtt + vt + 2.0 * rho * vr + 2.0 * rho * vtr + rho * rho * vrr;
  return vtt + (1.0 + rho * rho) * vrr + vt + 2.0 * rho * vr + 2.0 * rho * vtr +
         e2t * vr * vr * inner + e2t * (vt + rho * vr) * (vt + rho * vr) * vrr -
         2.0 * e2t * vr * (vt + rho * vr) * (vr + rho * vrr + vtr);
}

/// A profile evaluable to an order-3 jet at a similarity point; the jet's
/// slots are (tau, rho).
using ProfileField = std::function<Jet<3>(double, double)>;

struct ReductionCheck {
  double r_original;        ///< minimal_residual of the composed u-jet
  double r_reduced_scaled;  ///< e^{2tau} * reduced_residual
  double deviation;         ///< |difference| / max(1, |r_original|, |r_reduced_scaled|)
};

/// Builds u(t,x) = v(-log t, x/t) by jet composition (the chain-rule
/// derivatives come from jet arithmetic, not any printed list) and compares
/// the original residual with the scaled reduced residual.
inline ReductionCheck reduction_consistency(const ProfileField& v, double t, double x) {
  const SimilarityPoint sp = to_similarity(t, x);
  const Jet<3> tj = Jet<3>::variable(Var::t, t);
  const Jet<3> xj = Jet<3>::variable(Var::x, x);
  const Jet<3> tau_jet = -log(tj);
  const Jet<3> rho_jet = div(xj, tj);
  const Jet<3> vjet = v(sp.tau, sp.rho);
  const Jet<3> ujet = compose(vjet, tau_jet, rho_jet);

  ReductionCheck rc;
  rc.r_original = minimal_residual(ujet);
  rc.r_reduced_scaled = std::exp(2.0 * sp.tau) * reduced_residual(vjet, sp.tau, sp.rho);
  rc.deviation = std::abs(rc.r_original - rc.r_reduced_scaled) /
                 std::max({1.0, std::abs(rc.r_original), std::abs(rc.r_reduced_scaled)});
  return rc;
}

struct OdeResiduals {
  double r_paper_ode;  ///< (rho^2 + 1) v'' + 2 rho v'
  double r_alt_ode;    ///< (1 + rho^2) v'' + rho v'
};

inline OdeResiduals profile_ode_residual(const ProfileJet& p, double rho) {
  const double q = 1.0 + rho * rho;
  return {q * p.v_rr + 2.0 * rho * p.v_r, q * p.v_rr + rho * p.v_r};
}

enum class OdeVariant { paper, alt };

/// Fourth-order (classical Runge-Kutta) integration of
///     v'' = -(coeff(rho) / (1 + rho^2)) v',  coeff = 2 rho or rho,
/// with v(0) = D, v'(0) = C, outward from rho = 0 over the requested range.
/// Node second derivatives come from the ODE right-hand side; the table
/// interpolates between nodes with quintic Hermite pieces.
inline OdeProfileTable ode_integrate(OdeVariant variant, double C, double D,
                                     double rho_min, double rho_max,
                                     double step = 1e-3) {
  if (!(step > 0.0)) throw InvalidParameter("ode_integrate requires step > 0");
  if (!(rho_max > rho_min)) throw InvalidParameter("ode_integrate: empty range");

  const long double coeff_scale = variant == OdeVariant::paper ? 2.0L : 1.0L;
  const auto accel = [coeff_scale](long double rho, long double vr) {
    return -(coeff_scale * rho / (1.0L + rho * rho)) * vr;
  };

  const long n_left = std::lround(std::max(0.0, -rho_min) / step + 0.5);
  const long n_right = std::lround(std::max(0.0, rho_max) / step + 0.5);

  std::vector<OdeProfileTable::Node> nodes(n_left + n_right + 1);
  const long double step_l = step;
  const auto rho_of = [&](long i) { return (i - n_left) * step_l; };

  const auto rk4_step = [&](long double rho, long double v, long double vr,
                            long double h) {
    const long double k1v = vr, k1w = accel(rho, vr);
    const long double k2v = vr + 0.5L * h * k1w,
                      k2w = accel(rho + 0.5L * h, vr + 0.5L * h * k1w);
    const long double k3v = vr + 0.5L * h * k2w,
                      k3w = accel(rho + 0.5L * h, vr + 0.5L * h * k2w);
    const long double k4v = vr + h * k3w, k4w = accel(rho + h, vr + h * k3w);
    return std::pair<long double, long double>{
        v + h / 6.0L * (k1v + 2 * k2v + 2 * k3v + k4v),
        vr + h / 6.0L * (k1w + 2 * k2w + 2 * k3w + k4w)};
  };

  nodes[n_left] = {D, C, accel(0.0L, C)};
  long double v = D, vr = C;
  for (long i = n_left + 1; i <= n_left + n_right; ++i) {
    std::tie(v, vr) = rk4_step(rho_of(i - 1), v, vr, step_l);
    nodes[i] = {v, vr, accel(rho_of(i), vr)};
  }
  v = D;
  vr = C;
  for (long i = n_left - 1; i >= 0; --i) {
    std::tie(v, vr) = rk4_step(rho_of(i + 1), v, vr, -step_l);
    nodes[i] = {v, vr, accel(rho_of(i), vr)};
  }

  return OdeProfileTable(-static_cast<double>(n_left) * step, step, std::move(nodes));
}

/// Richardson error estimate for ode_integrate: integrates at step and
/// step/2 and returns the largest dense-sample difference.
inline double ode_richardson_error(OdeVariant variant, double C, double D,
                                   double rho_min, double rho_max,
                                   double step = 1e-3) {
  const OdeProfileTable coarse = ode_integrate(variant, C, D, rho_min, rho_max, step);
  const OdeProfileTable fine = ode_integrate(variant, C, D, rho_min, rho_max, step / 2);
  const double lo = std::max(coarse.rho_min(), fine.rho_min());
  const double hi = std::min(coarse.rho_max(), fine.rho_max());
  double worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double rho = std::min(hi, std::max(lo, lo + (hi - lo) * i / 200.0));
    worst = std::max(worst,
                     static_cast<double>(std::abs(coarse.value(rho) - fine.value(rho))));
  }
  return worst;
}

}  // namespace minsurf
