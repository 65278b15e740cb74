// SPDX-License-Identifier: Apache-2.0
#pragma once

/// Sampled similarity profiles v(rho) with smooth dense evaluation.
/// Nodes carry (v, v', v'') on a uniform grid; between nodes a two-point
/// quintic Hermite piece interpolates, which keeps the profile
/// jet-differentiable to order 3 with third-derivative error O(step^3).
/// Storage and evaluation are in long double so the finite-difference
/// oracle can difference the interpolant without hitting a double-precision
/// noise floor.

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "minsurf/errors.hpp"

namespace minsurf {

struct ProfileJet {
  double v = 0.0;
  double v_r = 0.0;
  double v_rr = 0.0;
  double v_rrr = 0.0;
};

class OdeProfileTable {
 public:
  struct Node {
    long double v, v_r, v_rr;
  };

  OdeProfileTable(double rho_begin, double drho, std::vector<Node> nodes)
      : rho_begin_(rho_begin), drho_(drho), nodes_(std::move(nodes)) {
    if (drho_ <= 0.0 || nodes_.size() < 2)
      throw InvalidParameter("profile table needs positive spacing and >= 2 nodes");
  }

  double rho_min() const { return static_cast<double>(rho_begin_); }
  double rho_max() const {
    return static_cast<double>(rho_begin_ + drho_ * (nodes_.size() - 1));
  }
  std::size_t node_count() const { return nodes_.size(); }
  double node_rho(std::size_t i) const { return static_cast<double>(rho_begin_ + drho_ * i); }
  const Node& node(std::size_t i) const { return nodes_[i]; }

  bool contains(double rho) const { return rho >= rho_min() && rho <= rho_max(); }

  ProfileJet eval(double rho) const {
    const std::size_t i = locate(rho);
    const std::array<long double, 6> a = piece_coeffs(i);
    const long double s = (rho - (rho_begin_ + static_cast<long double>(i) * drho_)) / drho_;
    const long double p = ((((a[5] * s + a[4]) * s + a[3]) * s + a[2]) * s + a[1]) * s + a[0];
    const long double p1 = (((5 * a[5] * s + 4 * a[4]) * s + 3 * a[3]) * s + 2 * a[2]) * s + a[1];
    const long double p2 = ((20 * a[5] * s + 12 * a[4]) * s + 6 * a[3]) * s + 2 * a[2];
    const long double p3 = (60 * a[5] * s + 24 * a[4]) * s + 6 * a[3];
    ProfileJet j;
    j.v = static_cast<double>(p);
    j.v_r = static_cast<double>(p1 / drho_);
    j.v_rr = static_cast<double>(p2 / (drho_ * drho_));
    j.v_rrr = static_cast<double>(p3 / (drho_ * drho_ * drho_));
    return j;
  }

  long double value(long double rho) const {
    const std::size_t i = locate(static_cast<double>(rho));
    const std::array<long double, 6> a = piece_coeffs(i);
    const long double s = (rho - (rho_begin_ + static_cast<long double>(i) * drho_)) / drho_;
    long double p = a[5];
    for (int k = 4; k >= 0; --k) p = p * s + a[k];
    return p;
  }

 private:
  std::size_t locate(double rho) const {
    if (!contains(rho)) throw OutOfDomain("profile evaluated outside its table range");
    const double fi = std::floor((rho - static_cast<double>(rho_begin_)) /
                                 static_cast<double>(drho_));
    std::size_t i = static_cast<std::size_t>(std::max(0.0, fi));
    if (i >= nodes_.size() - 1) i = nodes_.size() - 2;
    return i;
  }

  /// Quintic matching (v, v', v'') at both ends of piece i, in the local
  /// variable s in [0,1].
  std::array<long double, 6> piece_coeffs(std::size_t i) const {
    const Node& L = nodes_[i];
    const Node& R = nodes_[i + 1];
    const long double m0 = L.v_r * drho_, m1 = R.v_r * drho_;
    const long double c0 = L.v_rr * drho_ * drho_, c1 = R.v_rr * drho_ * drho_;
    const long double a0 = L.v, a1 = m0, a2 = 0.5L * c0;
    const long double r1 = R.v - a0 - a1 - a2;
    const long double r2 = m1 - a1 - 2 * a2;
    const long double r3 = c1 - 2 * a2;
    const long double a3 = 10 * r1 - 4 * r2 + 0.5L * r3;
    const long double a4 = -15 * r1 + 7 * r2 - r3;
    const long double a5 = 6 * r1 - 3 * r2 + 0.5L * r3;
    return {a0, a1, a2, a3, a4, a5};
  }

  long double rho_begin_;
  long double drho_;
  std::vector<Node> nodes_;
};

}  // namespace minsurf
