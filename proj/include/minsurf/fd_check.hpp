// SPDX-License-Identifier: Apache-2.0
#pragma once

/// Independent derivative oracle: central finite differences of raw field
/// values against all nine derivative slots of an order-3 jet. The field
/// handle is evaluated in long double so that the third-order stencils are
/// not drowned by cancellation at small steps.

#include <algorithm>
#include <cmath>
#include <functional>

#include "minsurf/jet.hpp"

namespace minsurf {

/// Scalar field of (t, x), evaluated in extended precision.
using FdField = std::function<long double(long double, long double)>;

struct FdDerivs {
  double ut, ux, utt, utx, uxx, uttt, uttx, utxx, uxxx;
};

/// All nine derivative slots by central differences of field values.
inline FdDerivs fd_derivatives(const FdField& f, double t, double x, double h) {
  const long double T = t, X = x, H = h;
  const auto F = [&](long double dt, long double dx) { return f(T + dt, X + dx); };

  const long double f00 = F(0, 0);
  const long double fp0 = F(H, 0), fm0 = F(-H, 0);
  const long double f0p = F(0, H), f0m = F(0, -H);
  const long double fpp = F(H, H), fpm = F(H, -H), fmp = F(-H, H), fmm = F(-H, -H);
  const long double f2p0 = F(2 * H, 0), f2m0 = F(-2 * H, 0);
  const long double f02p = F(0, 2 * H), f02m = F(0, -2 * H);

  FdDerivs d;
  d.ut = static_cast<double>((fp0 - fm0) / (2 * H));
  d.ux = static_cast<double>((f0p - f0m) / (2 * H));
  d.utt = static_cast<double>((fp0 - 2 * f00 + fm0) / (H * H));
  d.uxx = static_cast<double>((f0p - 2 * f00 + f0m) / (H * H));
  d.utx = static_cast<double>((fpp - fpm - fmp + fmm) / (4 * H * H));
  d.uttt = static_cast<double>((f2p0 - 2 * fp0 + 2 * fm0 - f2m0) / (2 * H * H * H));
  d.uxxx = static_cast<double>((f02p - 2 * f0p + 2 * f0m - f02m) / (2 * H * H * H));
  // second difference in one direction of the centered first difference in the other
  d.uttx = static_cast<double>(((fpp - fpm) - 2 * (f0p - f0m) + (fmp - fmm)) /
                               (2 * H * H * H));
  d.utxx = static_cast<double>(((fpp - fmp) - 2 * (fp0 - fm0) + (fpm - fmm)) /
                               (2 * H * H * H));
  return d;
}

/// Worst deviation of the finite-difference slots from the jet pipeline,
/// each measured relative to max(1, |jet slot|).
inline double fd_crosscheck(const FdField& f, double t, double x, double h,
                            const Jet<3>& jet) {
  const FdDerivs d = fd_derivatives(f, t, x, h);
  const double fd[9] = {d.ut, d.ux, d.utt, d.utx, d.uxx, d.uttt, d.uttx, d.utxx, d.uxxx};
  const double jd[9] = {jet.ut(),  jet.ux(),   jet.utt(), jet.utx(), jet.uxx(),
                        jet.uttt(), jet.uttx(), jet.utxx(), jet.uxxx()};
  double worst = 0.0;
  for (int i = 0; i < 9; ++i) {
    const double dev = std::abs(fd[i] - jd[i]) / std::max(1.0, std::abs(jd[i]));
    worst = std::max(worst, dev);
  }
  return worst;
}

}  // namespace minsurf
