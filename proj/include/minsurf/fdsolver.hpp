// SPDX-License-Identifier: Apache-2.0
#pragma once

/// Independent numerical oracle: damped Newton on the second-order central
/// difference discretization of the minimal surface equation with Dirichlet
/// data sampled from a candidate family. A family that truly solves the
/// equation is approached at O(h^2); a family that does not produces a
/// deviation plateau under mesh refinement.

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <vector>

#include "minsurf/errors.hpp"
#include "minsurf/surfaces.hpp"

namespace minsurf {

struct GridProblem {
  double t0, t1, x0, x1;
  double h;
  SurfaceFamily family;

  GridProblem(double t0_, double t1_, double x0_, double x1_, double h_,
              SurfaceFamily family_)
      : t0(t0_), t1(t1_), x0(x0_), x1(x1_), h(h_), family(std::move(family_)) {
    if (!(t0 > 0.0)) throw InvalidParameter("GridProblem: t0 must be > 0");
    if (!(h > 0.0)) throw InvalidParameter("GridProblem: h must be > 0");
    const double nt = (t1 - t0) / h, nx = (x1 - x0) / h;
    if (std::abs(nt - std::round(nt)) > 1e-9 * std::max(1.0, nt) ||
        std::abs(nx - std::round(nx)) > 1e-9 * std::max(1.0, nx))
      throw InvalidParameter("GridProblem: rectangle is not an integer number of cells");
    if (std::round(nt) < 4 || std::round(nx) < 4)
      throw InvalidParameter("GridProblem: mesh needs at least 3 interior nodes per direction");
  }

  int nt_cells() const { return static_cast<int>(std::round((t1 - t0) / h)); }
  int nx_cells() const { return static_cast<int>(std::round((x1 - x0) / h)); }
};

struct SolveResult {
  bool converged = false;
  int iterations = 0;
  double newton_step_norm = 0.0;
  double max_deviation = 0.0;       ///< max interior |u - family|
  double residual_norm = 0.0;       ///< max-norm of the discrete operator
  std::vector<double> field;        ///< row-major (nt+1) x (nx+1) node values
  int rows = 0, cols = 0;
};

namespace detail {

struct Stencil {
  double center, tp, tm, xp, xm, pp, pm, mp, mm;  ///< Jacobian weights
};

/// Discrete operator and its derivative weights at one interior node.
inline double discrete_op(const std::vector<double>& u, int cols, int i, int j,
                          double h, Stencil* jac) {
  const auto at = [&](int ii, int jj) { return u[ii * cols + jj]; };
  const double h2 = h * h;
  const double dt = (at(i + 1, j) - at(i - 1, j)) / (2 * h);
  const double dx = (at(i, j + 1) - at(i, j - 1)) / (2 * h);
  const double dtt = (at(i + 1, j) - 2 * at(i, j) + at(i - 1, j)) / h2;
  const double dxx = (at(i, j + 1) - 2 * at(i, j) + at(i, j - 1)) / h2;
  const double dtx = (at(i + 1, j + 1) - at(i + 1, j - 1) - at(i - 1, j + 1) +
                      at(i - 1, j - 1)) / (4 * h2);

  const double F = dtt * (1 + dx * dx) - 2 * dt * dx * dtx + dxx * (1 + dt * dt);

  if (jac) {
    // dF = (1+dx^2) dDtt + (2 dx Dtt - 2 dt Dtx) dDx - 2 dx Dtx dDt
    //      - 2 dt dx dDtx + (1+dt^2) dDxx + 2 dt Dxx dDt
    const double c_tt = 1 + dx * dx;
    const double c_xx = 1 + dt * dt;
    const double c_dt = -2 * dx * dtx + 2 * dt * dxx;
    const double c_dx = 2 * dx * dtt - 2 * dt * dtx;
    const double c_tx = -2 * dt * dx;
    jac->center = -2 * c_tt / h2 - 2 * c_xx / h2;
    jac->tp = c_tt / h2 + c_dt / (2 * h);
    jac->tm = c_tt / h2 - c_dt / (2 * h);
    jac->xp = c_xx / h2 + c_dx / (2 * h);
    jac->xm = c_xx / h2 - c_dx / (2 * h);
    jac->pp = c_tx / (4 * h2);
    jac->mm = c_tx / (4 * h2);
    jac->pm = -c_tx / (4 * h2);
    jac->mp = -c_tx / (4 * h2);
  }
  return F;
}

}  // namespace detail

/// Damped Newton solve of the discrete Dirichlet problem. Boundary rows carry
/// the family samples exactly; the initial iterate is the family itself
/// (warm start) or the zero field.
inline SolveResult solve_dirichlet(const GridProblem& p, double tol = 1e-10,
                                   int max_iter = 50, bool warm_start = true) {
  if (!(tol > 0.0)) throw InvalidParameter("solve_dirichlet: tol must be > 0");
  const int nt = p.nt_cells(), nx = p.nx_cells();
  const int rows = nt + 1, cols = nx + 1;
  const int int_rows = nt - 1, int_cols = nx - 1;
  const int n_unknowns = int_rows * int_cols;

  SolveResult res;
  res.rows = rows;
  res.cols = cols;
  res.field.assign(static_cast<std::size_t>(rows) * cols, 0.0);

  const auto node_t = [&](int i) { return p.t0 + i * p.h; };
  const auto node_x = [&](int j) { return p.x0 + j * p.h; };
  std::vector<double> exact(res.field.size());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      exact[i * cols + j] =
          static_cast<double>(p.family.value(node_t(i), node_x(j)));

  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const bool boundary = i == 0 || i == rows - 1 || j == 0 || j == cols - 1;
      res.field[i * cols + j] = (boundary || warm_start) ? exact[i * cols + j] : 0.0;
    }

  const auto unknown_index = [&](int i, int j) {
    return (i - 1) * int_cols + (j - 1);
  };
  const auto residual_vec = [&](const std::vector<double>& u, Eigen::VectorXd& F) {
    for (int i = 1; i < rows - 1; ++i)
      for (int j = 1; j < cols - 1; ++j)
        F[unknown_index(i, j)] = detail::discrete_op(u, cols, i, j, p.h, nullptr);
  };

  Eigen::VectorXd F(n_unknowns), Fnew(n_unknowns);
  residual_vec(res.field, F);
  double fnorm = F.lpNorm<Eigen::Infinity>();

  Eigen::SparseMatrix<double> J(n_unknowns, n_unknowns);
  std::vector<Eigen::Triplet<double>> trips;
  std::vector<double> trial(res.field.size());

  while (fnorm >= tol && res.iterations < max_iter) {
    trips.clear();
    for (int i = 1; i < rows - 1; ++i)
      for (int j = 1; j < cols - 1; ++j) {
        detail::Stencil st;
        F[unknown_index(i, j)] = detail::discrete_op(res.field, cols, i, j, p.h, &st);
        const int row = unknown_index(i, j);
        const auto add = [&](int ii, int jj, double w) {
          if (ii >= 1 && ii <= rows - 2 && jj >= 1 && jj <= cols - 2)
            trips.emplace_back(row, unknown_index(ii, jj), w);
        };
        add(i, j, st.center);
        add(i + 1, j, st.tp);
        add(i - 1, j, st.tm);
        add(i, j + 1, st.xp);
        add(i, j - 1, st.xm);
        add(i + 1, j + 1, st.pp);
        add(i + 1, j - 1, st.pm);
        add(i - 1, j + 1, st.mp);
        add(i - 1, j - 1, st.mm);
      }
    J.setFromTriplets(trips.begin(), trips.end());

    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(J);
    if (lu.info() != Eigen::Success)
      throw NonConvergence("Newton Jacobian factorization failed");
    const Eigen::VectorXd delta = lu.solve(-F);

    // damping by step halving on residual increase
    double lambda = 1.0;
    double trial_norm = 0.0;
    while (true) {
      trial = res.field;
      for (int i = 1; i < rows - 1; ++i)
        for (int j = 1; j < cols - 1; ++j)
          trial[i * cols + j] += lambda * delta[unknown_index(i, j)];
      residual_vec(trial, Fnew);
      trial_norm = Fnew.lpNorm<Eigen::Infinity>();
      if (trial_norm < fnorm || lambda <= 0x1.0p-20) break;
      lambda *= 0.5;
    }
    res.field = trial;
    fnorm = trial_norm;
    res.newton_step_norm = lambda * delta.lpNorm<Eigen::Infinity>();
    ++res.iterations;
    if (res.newton_step_norm == 0.0) break;
  }

  res.residual_norm = fnorm;
  res.converged = fnorm < tol;
  res.max_deviation = 0.0;
  for (int i = 1; i < rows - 1; ++i)
    for (int j = 1; j < cols - 1; ++j)
      res.max_deviation = std::max(
          res.max_deviation, std::abs(res.field[i * cols + j] - exact[i * cols + j]));
  return res;
}

struct ConvergenceStudy {
  std::vector<double> h;
  std::vector<double> deviation;
  double fitted_order = 0.0;   ///< least-squares slope of log(dev) vs log(h)
  bool decaying = false;       ///< every refinement reduced the deviation
  bool plateau = false;        ///< refinement stopped helping
  bool at_rounding = false;    ///< deviations at rounding level, order meaningless
};

inline ConvergenceStudy convergence_study(const SurfaceFamily& family, double t0,
                                          double t1, double x0, double x1,
                                          const std::vector<double>& h_list,
                                          double tol = 1e-10, int max_iter = 50) {
  if (h_list.size() < 3)
    throw InvalidParameter("convergence_study needs at least 3 mesh sizes");
  ConvergenceStudy st;
  for (double h : h_list) {
    const GridProblem p(t0, t1, x0, x1, h, family);
    const SolveResult r = solve_dirichlet(p, tol, max_iter);
    if (!r.converged)
      throw NonConvergence("solver did not converge at h = " + std::to_string(h));
    st.h.push_back(h);
    st.deviation.push_back(r.max_deviation);
  }
  st.at_rounding = true;
  for (double d : st.deviation)
    if (d > 1e-12) st.at_rounding = false;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = static_cast<int>(st.h.size());
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(st.h[i]);
    const double ly = std::log(std::max(st.deviation[i], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  st.fitted_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);

  st.decaying = true;
  for (int i = 1; i < n; ++i)
    if (!(st.deviation[i] < st.deviation[i - 1])) st.decaying = false;
  // refinement halves h; a genuine O(h^2) scheme shrinks deviation ~4x
  st.plateau = !st.at_rounding &&
               st.deviation.back() > 0.5 * st.deviation.front();
  return st;
}

}  // namespace minsurf
