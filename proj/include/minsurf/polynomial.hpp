// SPDX-License-Identifier: Apache-2.0
#pragma once

/// Dense bivariate polynomials with jet evaluation. Used as smooth test
/// fields for the operator-homogeneity and reduction-consistency checks.

#include <vector>

#include "minsurf/jet.hpp"
#include "minsurf/rng.hpp"

namespace minsurf {

class Poly2 {
 public:
  Poly2() : degree_(0), c_(1, 0.0) {}
  explicit Poly2(int degree)
      : degree_(degree), c_((degree + 1) * (degree + 2) / 2, 0.0) {}

  static Poly2 random(int degree, Rng& rng, double lo = -1.0, double hi = 1.0) {
    Poly2 p(degree);
    for (double& c : p.c_) c = rng.uniform(lo, hi);
    return p;
  }

  int degree() const { return degree_; }

  double& coeff(int it, int ix) { return c_[index(it, ix)]; }
  double coeff(int it, int ix) const { return c_[index(it, ix)]; }

  /// Coefficients of u_lambda(t,x) = u(lambda t, lambda x)/lambda:
  /// c_ij -> lambda^(i+j-1) c_ij.
  Poly2 scaled(double lambda) const {
    Poly2 p(degree_);
    for (int i = 0; i <= degree_; ++i)
      for (int j = 0; i + j <= degree_; ++j)
        p.coeff(i, j) = coeff(i, j) * std::pow(lambda, i + j - 1);
    return p;
  }

  template <int N>
  Jet<N> eval_jet(double t, double x) const {
    const Jet<N> T = Jet<N>::variable(Var::t, t);
    const Jet<N> X = Jet<N>::variable(Var::x, x);
    std::vector<Jet<N>> tp(degree_ + 1), xp(degree_ + 1);
    tp[0] = Jet<N>(1.0);
    xp[0] = Jet<N>(1.0);
    for (int i = 1; i <= degree_; ++i) {
      tp[i] = tp[i - 1] * T;
      xp[i] = xp[i - 1] * X;
    }
    Jet<N> acc;
    for (int i = 0; i <= degree_; ++i)
      for (int j = 0; i + j <= degree_; ++j)
        if (coeff(i, j) != 0.0) acc += coeff(i, j) * (tp[i] * xp[j]);
    return acc;
  }

  long double value(long double t, long double x) const {
    long double acc = 0.0;
    for (int i = 0; i <= degree_; ++i)
      for (int j = 0; i + j <= degree_; ++j) {
        long double m = coeff(i, j);
        for (int p = 0; p < i; ++p) m *= t;
        for (int q = 0; q < j; ++q) m *= x;
        acc += m;
      }
    return acc;
  }

 private:
  int index(int it, int ix) const {
    const int d = it + ix;
    return d * (d + 1) / 2 + ix;
  }

  int degree_;
  std::vector<double> c_;
};

}  // namespace minsurf
