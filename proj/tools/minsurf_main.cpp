// SPDX-License-Identifier: Apache-2.0

// Command-line front end: claim audits, curvature maps, reduction checks,
// solver studies, singularity traces, coefficient comparisons and profile
// integration, all writing plot-ready CSV (and SVG where useful).

#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include "minsurf/audit.hpp"

namespace {

using namespace minsurf;

struct FamilyOptions {
  std::string family = "logsinh";
  double k = 1.0;
  double alpha = 1.0, beta = 1.0;
  double shift_T = 2.0;
};

void add_family_options(CLI::App* cmd, FamilyOptions& opt) {
  cmd->add_option("--family", opt.family,
                  "family name: zero|linear|arctan|logsinh, optionally with "
                  "-shifted suffix")
      ->capture_default_str();
  cmd->add_option("--k", opt.k, "family parameter k")->capture_default_str();
  cmd->add_option("--alpha", opt.alpha, "linear family t-slope")->capture_default_str();
  cmd->add_option("--beta", opt.beta, "linear family x-slope")->capture_default_str();
  cmd->add_option("--T", opt.shift_T, "shift parameter for -shifted families")
      ->capture_default_str();
}

SurfaceFamily build_family(const FamilyOptions& opt) {
  AuditConfig cfg;
  cfg.k = opt.k;
  cfg.alpha = opt.alpha;
  cfg.beta = opt.beta;
  cfg.shift_T = opt.shift_T;
  return detail::make_family(opt.family, cfg);
}

int run_audit_cmd(const std::string& config_path, const std::string& out_dir,
                  std::optional<std::uint64_t> seed, const std::string& sections) {
  AuditConfig cfg = config_path.empty() ? AuditConfig{} : AuditConfig::parse_file(config_path);
  if (seed) cfg.seed = *seed;
  if (!sections.empty()) cfg.sections = detail::split_list(sections);
  const AuditReport report = run_audit(cfg, out_dir);
  std::cout << render_report(report);
  std::cout << "report and CSV appendices written to " << out_dir << "\n";
  return 0;  // a completed audit exits 0 regardless of verdicts
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"audit toolkit for singular minimal surfaces and the instanton "
               "metrics built from them"};
  app.require_subcommand(1);

  // ---- audit ----
  std::string config_path, out_dir = "out", sections;
  std::optional<std::uint64_t> seed;
  CLI::App* audit = app.add_subcommand("audit", "run the full claim audit");
  audit->add_option("--config", config_path, "flat key = value config file");
  audit->add_option("--out", out_dir, "output directory")->capture_default_str();
  audit->add_option("--seed", seed, "override the RNG seed");
  audit->add_option("--sections", sections,
                    "comma list: residuals,odes,reduction,coeffs,ricci,solver,"
                    "maximal,trace (default: all)");

  // ---- curvature ----
  FamilyOptions curv_fam;
  double ct0 = 0.5, ct1 = 2.0, cx0 = -2.0, cx1 = 2.0;
  int cnt = 21, cnx = 21;
  std::string curv_out = "out";
  CLI::App* curv = app.add_subcommand("curvature", "Ricci/Kretschmann scan over a grid");
  add_family_options(curv, curv_fam);
  curv->add_option("--t-min", ct0)->capture_default_str();
  curv->add_option("--t-max", ct1)->capture_default_str();
  curv->add_option("--x-min", cx0)->capture_default_str();
  curv->add_option("--x-max", cx1)->capture_default_str();
  curv->add_option("--nt", cnt)->capture_default_str();
  curv->add_option("--nx", cnx)->capture_default_str();
  curv->add_option("--out", curv_out)->capture_default_str();

  // ---- reduce ----
  int red_trials = 100;
  std::uint64_t red_seed = 12345;
  std::string red_out = "out";
  CLI::App* reduce = app.add_subcommand(
      "reduce", "similarity-reduction consistency on random polynomial profiles");
  reduce->add_option("--trials", red_trials)->capture_default_str();
  reduce->add_option("--seed", red_seed)->capture_default_str();
  reduce->add_option("--out", red_out)->capture_default_str();

  // ---- solve ----
  FamilyOptions solve_fam;
  double st0 = 0.5, st1 = 2.0, sx0 = -1.0, sx1 = 1.0, sh = 1.0 / 32, stol = 1e-10;
  int smax = 50;
  bool cold = false;
  std::string solve_out = "out";
  CLI::App* solve = app.add_subcommand(
      "solve", "finite-difference Dirichlet solve with family boundary data");
  add_family_options(solve, solve_fam);
  solve->add_option("--t0", st0)->capture_default_str();
  solve->add_option("--t1", st1)->capture_default_str();
  solve->add_option("--x0", sx0)->capture_default_str();
  solve->add_option("--x1", sx1)->capture_default_str();
  solve->add_option("--mesh", sh, "mesh size h")->capture_default_str();
  solve->add_option("--tol", stol)->capture_default_str();
  solve->add_option("--max-iter", smax)->capture_default_str();
  solve->add_flag("--cold-start", cold, "start Newton from the zero field");
  solve->add_option("--out", solve_out)->capture_default_str();

  // ---- singularity ----
  FamilyOptions trace_fam;
  double tr_lo = 1e-3, tr_hi = 10.0;
  int tr_n = 61;
  std::string trace_out = "out";
  CLI::App* trace = app.add_subcommand("singularity", "u_x(t,0) blow-up trace");
  add_family_options(trace, trace_fam);
  trace->add_option("--t-lo", tr_lo, "smallest inner time")->capture_default_str();
  trace->add_option("--t-hi", tr_hi, "largest inner time")->capture_default_str();
  trace->add_option("--n", tr_n, "number of log-spaced samples")->capture_default_str();
  trace->add_option("--out", trace_out)->capture_default_str();

  // ---- compare-coeffs ----
  double cc_k = 1.0, cc_t0 = 0.5, cc_t1 = 2.0, cc_x0 = -2.0, cc_x1 = 2.0;
  int cc_nt = 21, cc_nx = 21;
  std::string cc_out = "out";
  CLI::App* cc = app.add_subcommand(
      "compare-coeffs", "printed vs computed instanton coefficients for the log family");
  cc->add_option("--k", cc_k)->capture_default_str();
  cc->add_option("--t-min", cc_t0)->capture_default_str();
  cc->add_option("--t-max", cc_t1)->capture_default_str();
  cc->add_option("--x-min", cc_x0)->capture_default_str();
  cc->add_option("--x-max", cc_x1)->capture_default_str();
  cc->add_option("--nt", cc_nt)->capture_default_str();
  cc->add_option("--nx", cc_nx)->capture_default_str();
  cc->add_option("--out", cc_out)->capture_default_str();

  // ---- ode ----
  std::string ode_variant = "paper", ode_out = "out";
  double ode_C = 1.0, ode_D = 0.0, ode_lo = -10.0, ode_hi = 10.0, ode_step = 1e-3;
  CLI::App* ode = app.add_subcommand("ode", "integrate a rho-only profile equation");
  ode->add_option("--variant", ode_variant, "paper ((r^2+1)v''+2rv') or alt ((1+r^2)v''+rv')")
      ->check(CLI::IsMember({"paper", "alt"}))
      ->capture_default_str();
  ode->add_option("--C", ode_C, "initial slope v'(0)")->capture_default_str();
  ode->add_option("--D", ode_D, "initial value v(0)")->capture_default_str();
  ode->add_option("--rho-min", ode_lo)->capture_default_str();
  ode->add_option("--rho-max", ode_hi)->capture_default_str();
  ode->add_option("--step", ode_step)->capture_default_str();
  ode->add_option("--out", ode_out)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*audit) return run_audit_cmd(config_path, out_dir, seed, sections);

    if (*curv) {
      std::filesystem::create_directories(curv_out);
      const SurfaceFamily fam = build_family(curv_fam);
      const auto rows = ricci_flat_scan(fam, DomainSpec(ct0, ct1, cx0, cx1), cnt, cnx);
      const std::string path = curv_out + "/ricci-" + fam.name() + ".csv";
      CsvWriter csv(path, {"t", "x", "ricci_inf", "minimal_residual", "kretschmann", "det_g"});
      double worst = 0.0;
      for (const ScanRow& r : rows) {
        if (!r.in_domain) continue;
        csv.row({r.t, r.x, r.ricci_inf, r.minimal_residual, r.kretschmann, r.det_g});
        worst = std::max(worst, r.ricci_inf);
      }
      std::cout << "max ||Ricci||_inf over grid: " << format_double(worst) << "\n"
                << "rows: " << path << "\n";
      return 0;
    }

    if (*reduce) {
      std::filesystem::create_directories(red_out);
      Rng rng(red_seed);
      const std::string path = red_out + "/reduction.csv";
      CsvWriter csv(path, {"trial", "t", "x", "tau", "r_original", "r_reduced_scaled",
                           "deviation"});
      double worst = 0.0;
      for (int trial = 0; trial < red_trials; ++trial) {
        const Poly2 p = Poly2::random(3, rng);
        const double t = rng.uniform(0.2, 5.0), x = rng.uniform(-5.0, 5.0);
        const ProfileField v = [&p](double tau, double rho) {
          return p.eval_jet<3>(tau, rho);
        };
        const ReductionCheck rc = reduction_consistency(v, t, x);
        csv.row({static_cast<double>(trial), t, x, to_similarity(t, x).tau, rc.r_original,
                 rc.r_reduced_scaled, rc.deviation});
        worst = std::max(worst, rc.deviation);
      }
      std::cout << "max deviation over " << red_trials
                << " profiles: " << format_double(worst) << "\nrows: " << path << "\n";
      return 0;
    }

    if (*solve) {
      std::filesystem::create_directories(solve_out);
      const SurfaceFamily fam = build_family(solve_fam);
      const GridProblem p(st0, st1, sx0, sx1, sh, fam);
      const SolveResult r = solve_dirichlet(p, stol, smax, !cold);
      const std::string path = solve_out + "/solve-" + fam.name() + ".csv";
      CsvWriter csv(path, {"t", "x", "u", "family", "deviation"});
      for (int i = 0; i < r.rows; ++i)
        for (int j = 0; j < r.cols; ++j) {
          const double t = st0 + i * sh, x = sx0 + j * sh;
          const double exact = static_cast<double>(fam.value(t, x));
          csv.row({t, x, r.field[i * r.cols + j], exact,
                   std::abs(r.field[i * r.cols + j] - exact)});
        }
      std::cout << (r.converged ? "converged" : "did NOT converge") << " in "
                << r.iterations << " Newton iterations; residual "
                << format_double(r.residual_norm) << ", max interior deviation "
                << format_double(r.max_deviation) << "\nfield: " << path << "\n";
      return r.converged ? 0 : 3;
    }

    if (*trace) {
      std::filesystem::create_directories(trace_out);
      const SurfaceFamily fam = build_family(trace_fam);
      std::vector<double> ts;
      for (int i = 0; i < tr_n; ++i) {
        const double f = static_cast<double>(i) / (tr_n - 1);
        const double inner = tr_lo * std::pow(tr_hi / tr_lo, f);
        const double t = fam.shift() ? *fam.shift() - inner : inner;
        if (t > 0.0) ts.push_back(t);
      }
      const auto rows = singular_trace(fam, ts);
      const std::string path = trace_out + "/trace-" + fam.name() + ".csv";
      CsvWriter csv(path, {"t", "ux", "product"});
      SvgSeries ser;
      for (const TraceSample& s : rows) {
        csv.row({s.t, s.ux, s.product});
        ser.x.push_back(fam.shift() ? *fam.shift() - s.t : s.t);
        ser.y.push_back(s.ux);
      }
      write_svg_plot(trace_out + "/trace-" + fam.name() + ".svg",
                     "u_x(t,0) blow-up (" + fam.name() + ")", {ser}, true, true);
      std::cout << "rows: " << path << "\n";
      return 0;
    }

    if (*cc) {
      std::filesystem::create_directories(cc_out);
      const std::string path = cc_out + "/coeffs.csv";
      CsvWriter csv(path, {"t", "x", "a", "b", "c", "a_printed", "b_printed", "c_printed"});
      double worst = 0.0;
      for (int i = 0; i < cc_nt; ++i) {
        const double t = cc_t0 + (cc_t1 - cc_t0) * i / (cc_nt - 1);
        for (int j = 0; j < cc_nx; ++j) {
          const double x = cc_x0 + (cc_x1 - cc_x0) * j / (cc_nx - 1);
          const MetricCoeffs computed =
              metric_coeffs(SurfaceFamily::log_sinh(cc_k).eval_jet(t, x));
          double pa = std::nan(""), pb = std::nan(""), pc_ = std::nan("");
          try {
            const MetricCoeffs printed = paper_coeffs(t, x, cc_k);
            pa = printed.a;
            pb = printed.b;
            pc_ = printed.c;
            worst = std::max(worst, std::abs(computed.a - pa));
          } catch (const DomainError&) {
          }
          csv.row({t, x, computed.a, computed.b, computed.c, pa, pb, pc_});
        }
      }
      std::cout << "max |a - a_printed| over grid: " << format_double(worst)
                << "\nrows: " << path << "\n";
      return 0;
    }

    if (*ode) {
      std::filesystem::create_directories(ode_out);
      const OdeVariant variant =
          ode_variant == "paper" ? OdeVariant::paper : OdeVariant::alt;
      const OdeProfileTable table =
          ode_integrate(variant, ode_C, ode_D, ode_lo, ode_hi, ode_step);
      const std::string path = ode_out + "/ode-profile-" + ode_variant + ".csv";
      CsvWriter csv(path, {"rho", "v"});
      for (std::size_t i = 0; i < table.node_count(); ++i)
        csv.row({table.node_rho(i), static_cast<double>(table.node(i).v)});
      std::cout << table.node_count() << " nodes\nrows: " << path << "\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
