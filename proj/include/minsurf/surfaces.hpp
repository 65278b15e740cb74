// SPDX-License-Identifier: Apache-2.0
#pragma once

/// Catalog of candidate closed-form solutions of the minimal surface
/// equation, evaluable to order-3 jets: the zero and linear trivial families,
/// the arctan family u = k*atan(x/t), the log family
/// u = k*ln|x/t + (1+x^2/t^2)^(1/2)| = k*asinh(x/t), a time-shifted variant
/// u(t,x) = inner(T-t, x), and numerically integrated similarity profiles
/// u(t,x) = v(x/t).
///
/// The log family is evaluated through asinh, which equals the printed
/// log form for every real argument (the argument of |.| is strictly
/// positive) and is smooth across x = 0.

#include <cmath>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minsurf/errors.hpp"
#include "minsurf/jet.hpp"
#include "minsurf/profile.hpp"

namespace minsurf {

enum class FamilyKind { zero, linear, nutku_arctan, log_sinh, ode_profile };

/// Rectangular evaluation window strictly inside the admissible half-plane.
struct DomainSpec {
  double t_min, t_max;
  double x_min, x_max;

  DomainSpec(double t0, double t1, double x0, double x1)
      : t_min(t0), t_max(t1), x_min(x0), x_max(x1) {
    if (!(t_min > 0.0)) throw InvalidParameter("DomainSpec: t_min must be > 0");
    if (!(t_max > t_min) || !(x_max > x_min))
      throw InvalidParameter("DomainSpec: empty rectangle");
  }

  bool contains(double t, double x) const {
    return t >= t_min && t <= t_max && x >= x_min && x <= x_max;
  }
};

class SurfaceFamily {
 public:
  static SurfaceFamily zero() { return SurfaceFamily(FamilyKind::zero); }

  static SurfaceFamily linear(double alpha, double beta) {
    SurfaceFamily f(FamilyKind::linear);
    f.alpha_ = alpha;
    f.beta_ = beta;
    return f;
  }

  static SurfaceFamily nutku_arctan(double k) {
    if (k == 0.0) throw InvalidParameter("arctan family requires k != 0");
    SurfaceFamily f(FamilyKind::nutku_arctan);
    f.k_ = k;
    return f;
  }

  static SurfaceFamily log_sinh(double k) {
    if (k == 0.0) throw InvalidParameter("log family requires k != 0");
    SurfaceFamily f(FamilyKind::log_sinh);
    f.k_ = k;
    return f;
  }

  static SurfaceFamily ode_profile(std::shared_ptr<const OdeProfileTable> table) {
    if (!table) throw InvalidParameter("ode profile family requires a table");
    SurfaceFamily f(FamilyKind::ode_profile);
    f.profile_ = std::move(table);
    return f;
  }

  /// Wrap as u(t,x) = this(T-t, x).
  SurfaceFamily shifted(double T) const {
    if (!(T > 0.0)) throw InvalidParameter("time shift requires T > 0");
    if (shift_T_) throw InvalidParameter("family is already time-shifted");
    SurfaceFamily f = *this;
    f.shift_T_ = T;
    return f;
  }

  FamilyKind kind() const { return kind_; }
  double k() const { return k_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  std::optional<double> shift() const { return shift_T_; }
  const OdeProfileTable* profile() const { return profile_.get(); }

  std::string name() const {
    std::string base;
    switch (kind_) {
      case FamilyKind::zero: base = "zero"; break;
      case FamilyKind::linear: base = "linear"; break;
      case FamilyKind::nutku_arctan: base = "arctan"; break;
      case FamilyKind::log_sinh: base = "logsinh"; break;
      case FamilyKind::ode_profile: base = "odeprofile"; break;
    }
    if (shift_T_) base += "-shifted";
    return base;
  }

  /// Effective time argument: t itself, or T-t for the shifted wrapper.
  /// Throws OutOfDomain when it is not strictly positive (beyond margin).
  double inner_time(double t, double margin = 0.0) const {
    const double tt = shift_T_ ? *shift_T_ - t : t;
    if (!(tt > margin))
      throw OutOfDomain("evaluation at t = " + std::to_string(t) +
                        " is outside the admissible domain");
    return tt;
  }

  bool in_domain(double t, double x, double margin = 0.0) const {
    const double tt = shift_T_ ? *shift_T_ - t : t;
    if (!(tt > margin)) return false;
    if (kind_ == FamilyKind::ode_profile) return profile_->contains(x / tt);
    return true;
  }

  Jet<3> eval_jet(double t, double x, double margin = 0.0) const {
    const double tt = inner_time(t, margin);
    Jet<3> j = eval_unshifted(tt, x);
    if (shift_T_) {
      // chain rule for t -> T - t: odd t-orders flip sign
      for (int it = 1; it <= 3; it += 2)
        for (int ix = 0; it + ix <= 3; ++ix) j.at(it, ix) = -j.deriv(it, ix);
    }
    return j;
  }

  /// Raw value in extended precision, for the finite-difference oracle.
  long double value(long double t, long double x) const {
    long double tt = t;
    if (shift_T_) tt = static_cast<long double>(*shift_T_) - t;
    if (!(tt > 0.0L)) throw OutOfDomain("value() outside admissible domain");
    switch (kind_) {
      case FamilyKind::zero: return 0.0L;
      case FamilyKind::linear: return alpha_ * tt + beta_ * x;
      case FamilyKind::nutku_arctan: return k_ * atanl(x / tt);
      case FamilyKind::log_sinh: return k_ * asinhl(x / tt);
      case FamilyKind::ode_profile: return profile_->value(x / tt);
    }
    return 0.0L;
  }

 private:
  explicit SurfaceFamily(FamilyKind kind) : kind_(kind) {}

  Jet<3> eval_unshifted(double tt, double x) const {
    switch (kind_) {
      case FamilyKind::zero:
        return Jet<3>{};
      case FamilyKind::linear: {
        Jet<3> j;
        j.at(0, 0) = alpha_ * tt + beta_ * x;
        j.at(1, 0) = alpha_;
        j.at(0, 1) = beta_;
        return j;
      }
      case FamilyKind::nutku_arctan: {
        const Jet<3> rho = coordinate_ratio(tt, x);
        return k_ * atan(rho);
      }
      case FamilyKind::log_sinh: {
        const Jet<3> rho = coordinate_ratio(tt, x);
        return k_ * asinh(rho);
      }
      case FamilyKind::ode_profile: {
        const Jet<3> rho = coordinate_ratio(tt, x);
        const ProfileJet p = profile_->eval(rho.value());
        return compose_univariate<3>({p.v, p.v_r, p.v_rr, p.v_rrr}, rho);
      }
    }
    return Jet<3>{};
  }

  static Jet<3> coordinate_ratio(double tt, double x) {
    const Jet<3> T = Jet<3>::variable(Var::t, tt);
    const Jet<3> X = Jet<3>::variable(Var::x, x);
    return div(X, T);
  }

  FamilyKind kind_;
  double alpha_ = 0.0, beta_ = 0.0;
  double k_ = 0.0;
  std::shared_ptr<const OdeProfileTable> profile_;
  std::optional<double> shift_T_;
};

inline SurfaceFamily time_shift(const SurfaceFamily& family, double T) {
  return family.shifted(T);
}

struct TraceSample {
  double t;
  double ux;       ///< u_x(t, 0)
  double product;  ///< t * u_x (or (T - t) * u_x for shifted families)
};

/// u_x along the x = 0 line, with the blow-up product reported alongside.
inline std::vector<TraceSample> singular_trace(const SurfaceFamily& family,
                                               std::span<const double> t_values) {
  std::vector<TraceSample> out;
  out.reserve(t_values.size());
  for (double t : t_values) {
    const Jet<3> j = family.eval_jet(t, 0.0);
    const double scale = family.shift() ? *family.shift() - t : t;
    out.push_back({t, j.ux(), scale * j.ux()});
  }
  return out;
}

}  // namespace minsurf
