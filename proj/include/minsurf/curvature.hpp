// SPDX-License-Identifier: Apache-2.0
#pragma once

/// Christoffel symbols, Riemann, Ricci, scalar and Kretschmann invariants of
/// the instanton metric. Conventions:
///   Gamma^l_mn = 1/2 g^lk (d_m g_kn + d_n g_km - d_k g_mn)
///   R^r_smn    = d_m Gamma^r_ns - d_n Gamma^r_ms
///                + Gamma^r_ml Gamma^l_ns - Gamma^r_nl Gamma^l_ms
///   Ricci_mn   = R^l_mln,  R = g^mn Ricci_mn,  K = R_rsmn R^rsmn.
/// Only t and x carry derivatives; y and z are Killing directions, so their
/// partials are identically zero. Gamma derivatives come from running the
/// formula through jet arithmetic on the order-2 metric component jets.

#include <array>
#include <cmath>
#include <vector>

#include "minsurf/errors.hpp"
#include "minsurf/jet.hpp"
#include "minsurf/metric.hpp"
#include "minsurf/pde.hpp"
#include "minsurf/surfaces.hpp"

namespace minsurf {

inline constexpr double kSingularMetricEps = 1e-10;

namespace detail {

/// Partial derivative of an order-2 metric component along coordinate mu in
/// the order (t, y, x, z); Killing directions give the zero jet.
inline Jet<1> coord_deriv(const Jet<2>& component, int mu) {
  switch (mu) {
    case 0: return component.d_dt();
    case 2: return component.d_dx();
    default: return Jet<1>{};
  }
}

/// Gauss-Jordan inverse of a symmetric 4x4 of order-1 jets, pivoting on
/// values.
inline std::array<std::array<Jet<1>, 4>, 4> invert(const SymMat4<Jet<1>>& g) {
  std::array<std::array<Jet<1>, 8>, 4> aug{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) aug[i][j] = g(i, j);
    aug[i][4 + i] = Jet<1>(1.0);
  }
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(aug[r][col].value()) > std::abs(aug[pivot][col].value())) pivot = r;
    if (std::abs(aug[pivot][col].value()) < kSingularMetricEps)
      throw SingularMetric("metric not invertible at this point");
    std::swap(aug[pivot], aug[col]);
    const Jet<1> inv_piv = reciprocal(aug[col][col]);
    for (int j = 0; j < 8; ++j) aug[col][j] = aug[col][j] * inv_piv;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const Jet<1> factor = aug[r][col];
      for (int j = 0; j < 8; ++j) aug[r][j] -= factor * aug[col][j];
    }
  }
  std::array<std::array<Jet<1>, 4>, 4> inv{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv[i][j] = aug[i][4 + j];
  return inv;
}

}  // namespace detail

/// Christoffel symbols with first (t,x)-derivatives, symmetric in the lower
/// pair by storage.
struct ChristoffelJets {
  std::array<SymMat4<Jet<1>>, 4> gamma;  ///< gamma[lambda](mu, nu)

  const Jet<1>& operator()(int lambda, int mu, int nu) const {
    return gamma[lambda](mu, nu);
  }
};

inline ChristoffelJets christoffel(const MetricJet& m,
                                   double eps = kSingularMetricEps) {
  const double det = metric_det(m);
  if (!(std::abs(det) >= eps))
    throw SingularMetric("metric determinant below threshold");

  SymMat4<Jet<1>> g1;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) g1(i, j) = m.g(i, j).truncated<1>();
  const auto ginv = detail::invert(g1);

  // dg[mu](k, n) = d_mu g_kn as an order-1 jet
  std::array<SymMat4<Jet<1>>, 4> dg;
  for (int mu = 0; mu < 4; ++mu)
    for (int k = 0; k < 4; ++k)
      for (int n = k; n < 4; ++n) dg[mu](k, n) = detail::coord_deriv(m.g(k, n), mu);

  ChristoffelJets ch;
  for (int lam = 0; lam < 4; ++lam)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu) {
        Jet<1> sum;
        for (int k = 0; k < 4; ++k)
          sum += ginv[lam][k] * (dg[mu](k, nu) + dg[nu](k, mu) - dg[k](mu, nu));
        ch.gamma[lam](mu, nu) = 0.5 * sum;
      }
  return ch;
}

using Tensor4 = std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4>;

/// R^rho_{sigma mu nu} from Christoffel jets.
inline Tensor4 riemann(const ChristoffelJets& ch) {
  const auto dgamma = [&](int lam, int mu, int nu, int along) {
    switch (along) {
      case 0: return ch(lam, mu, nu).deriv(1, 0);
      case 2: return ch(lam, mu, nu).deriv(0, 1);
      default: return 0.0;
    }
  };
  Tensor4 r{};
  for (int rho = 0; rho < 4; ++rho)
    for (int sig = 0; sig < 4; ++sig)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          double val = dgamma(rho, nu, sig, mu) - dgamma(rho, mu, sig, nu);
          for (int lam = 0; lam < 4; ++lam)
            val += ch(rho, mu, lam).value() * ch(lam, nu, sig).value() -
                   ch(rho, nu, lam).value() * ch(lam, mu, sig).value();
          r[rho][sig][mu][nu] = val;
        }
  return r;
}

struct RicciResult {
  std::array<std::array<double, 4>, 4> ricci;
  double scalar;
};

inline RicciResult ricci(const Tensor4& riem,
                         const std::array<std::array<double, 4>, 4>& ginv) {
  RicciResult out{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      double s = 0.0;
      for (int lam = 0; lam < 4; ++lam) s += riem[lam][mu][lam][nu];
      out.ricci[mu][nu] = s;
    }
  out.scalar = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) out.scalar += ginv[mu][nu] * out.ricci[mu][nu];
  return out;
}

inline Tensor4 lower_riemann(const Tensor4& riem,
                             const std::array<std::array<double, 4>, 4>& g) {
  Tensor4 low{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double s = 0.0;
          for (int p = 0; p < 4; ++p) s += g[a][p] * riem[p][b][c][d];
          low[a][b][c][d] = s;
        }
  return low;
}

inline double kretschmann(const Tensor4& low,
                          const std::array<std::array<double, 4>, 4>& ginv) {
  // raise one index at a time
  Tensor4 cur = low;
  for (int pos = 0; pos < 4; ++pos) {
    Tensor4 next{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            double s = 0.0;
            for (int p = 0; p < 4; ++p) {
              const int idx[4] = {a, b, c, d};
              int src[4] = {a, b, c, d};
              src[pos] = p;
              s += ginv[idx[pos]][p] * cur[src[0]][src[1]][src[2]][src[3]];
            }
            next[a][b][c][d] = s;
          }
    cur = next;
  }
  double k = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) k += cur[a][b][c][d] * low[a][b][c][d];
  return k;
}

struct CurvatureBundle {
  std::array<std::array<std::array<double, 4>, 4>, 4> gamma;  ///< values
  Tensor4 riemann_up;   ///< R^rho_{sigma mu nu}
  Tensor4 riemann_low;  ///< R_{rho sigma mu nu}
  std::array<std::array<double, 4>, 4> ricci;
  double scalar;
  double kretschmann;
  std::array<std::array<double, 4>, 4> g;
  std::array<std::array<double, 4>, 4> ginv;
  double det_g;
};

inline CurvatureBundle curvature_bundle(const MetricJet& m,
                                        double eps = kSingularMetricEps) {
  const ChristoffelJets ch = christoffel(m, eps);
  CurvatureBundle b{};
  for (int lam = 0; lam < 4; ++lam)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) b.gamma[lam][mu][nu] = ch(lam, mu, nu).value();

  b.g = m.values();
  SymMat4<Jet<1>> g1;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) g1(i, j) = m.g(i, j).truncated<1>();
  const auto gi = detail::invert(g1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b.ginv[i][j] = gi[i][j].value();

  b.riemann_up = riemann(ch);
  b.riemann_low = lower_riemann(b.riemann_up, b.g);
  const RicciResult rr = ricci(b.riemann_up, b.ginv);
  b.ricci = rr.ricci;
  b.scalar = rr.scalar;
  b.kretschmann = kretschmann(b.riemann_low, b.ginv);
  b.det_g = metric_det(m);
  return b;
}

inline double ricci_inf_norm(const CurvatureBundle& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(b.ricci[i][j]));
  return m;
}

struct ScanRow {
  double t, x;
  double ricci_inf;
  double minimal_residual;
  double kretschmann;
  double det_g;
  bool in_domain;
};

/// Paired curvature/residual diagnostics over a uniform grid; rows outside
/// the family's domain are flagged and skipped, not fatal.
inline std::vector<ScanRow> ricci_flat_scan(const SurfaceFamily& family,
                                            const DomainSpec& grid, int nt, int nx) {
  if (nt < 2 || nx < 2) throw InvalidParameter("scan needs at least a 2x2 grid");
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(nt) * nx);
  for (int i = 0; i < nt; ++i) {
    const double t = grid.t_min + (grid.t_max - grid.t_min) * i / (nt - 1);
    for (int j = 0; j < nx; ++j) {
      const double x = grid.x_min + (grid.x_max - grid.x_min) * j / (nx - 1);
      ScanRow row{t, x, 0.0, 0.0, 0.0, 0.0, family.in_domain(t, x)};
      if (row.in_domain) {
        const Jet<3> jet = family.eval_jet(t, x);
        const CurvatureBundle b = curvature_bundle(MetricJet::from_surface_jet(jet));
        row.ricci_inf = ricci_inf_norm(b);
        row.minimal_residual = minimal_residual(jet);
        row.kretschmann = b.kretschmann;
        row.det_g = b.det_g;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace minsurf
