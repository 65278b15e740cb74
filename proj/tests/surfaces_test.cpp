// SPDX-License-Identifier: Apache-2.0
#include "minsurf/surfaces.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "minsurf/fd_check.hpp"
#include "minsurf/similarity.hpp"

namespace minsurf {
namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

TEST(FamilyConstruction, ParameterValidation) {
  EXPECT_THROW(SurfaceFamily::nutku_arctan(0.0), InvalidParameter);
  EXPECT_THROW(SurfaceFamily::log_sinh(0.0), InvalidParameter);
  EXPECT_THROW(SurfaceFamily::zero().shifted(0.0), InvalidParameter);
  EXPECT_THROW(SurfaceFamily::zero().shifted(-1.0), InvalidParameter);
  EXPECT_THROW(SurfaceFamily::zero().shifted(1.0).shifted(2.0), InvalidParameter);
}

TEST(DomainSpecTest, Validation) {
  EXPECT_THROW(DomainSpec(0.0, 1.0, -1.0, 1.0), InvalidParameter);
  EXPECT_THROW(DomainSpec(-0.5, 1.0, -1.0, 1.0), InvalidParameter);
  EXPECT_THROW(DomainSpec(1.0, 0.5, -1.0, 1.0), InvalidParameter);
  const DomainSpec d(0.5, 2.0, -2.0, 2.0);
  EXPECT_TRUE(d.contains(1.0, 0.0));
  EXPECT_FALSE(d.contains(0.4, 0.0));
}

TEST(EvalJet, ZeroFamily) {
  const Jet<3> j = SurfaceFamily::zero().eval_jet(1.7, -0.3);
  for (int it = 0; it <= 3; ++it)
    for (int ix = 0; it + ix <= 3; ++ix) EXPECT_EQ(j.deriv(it, ix), 0.0);
}

TEST(EvalJet, LinearFamily) {
  const Jet<3> j = SurfaceFamily::linear(2.0, 3.0).eval_jet(1.0, 1.0);
  EXPECT_EQ(j.u(), 5.0);
  EXPECT_EQ(j.ut(), 2.0);
  EXPECT_EQ(j.ux(), 3.0);
  EXPECT_EQ(j.utt(), 0.0);
  EXPECT_EQ(j.utx(), 0.0);
  EXPECT_EQ(j.uxx(), 0.0);
  EXPECT_EQ(j.uttt(), 0.0);
}

TEST(EvalJet, LogFamilyAtAxis) {
  // closed-form jet of asinh(x/t) at (1,0)
  const Jet<3> j = SurfaceFamily::log_sinh(1.0).eval_jet(1.0, 0.0);
  EXPECT_NEAR(j.u(), 0.0, 1e-15);
  EXPECT_NEAR(j.ut(), 0.0, 1e-15);
  EXPECT_NEAR(j.ux(), 1.0, 1e-15);
  EXPECT_NEAR(j.utt(), 0.0, 1e-15);
  EXPECT_NEAR(j.utx(), -1.0, 1e-15);
  EXPECT_NEAR(j.uxx(), 0.0, 1e-15);
  EXPECT_NEAR(j.uttt(), 0.0, 1e-15);
  EXPECT_NEAR(j.uttx(), 2.0, 1e-14);
  EXPECT_NEAR(j.utxx(), 0.0, 1e-15);
  EXPECT_NEAR(j.uxxx(), -1.0, 1e-14);

  const SurfaceFamily f = SurfaceFamily::log_sinh(1.0);
  const FdField field = [&f](long double t, long double x) { return f.value(t, x); };
  EXPECT_LT(fd_crosscheck(field, 1.0, 0.0, 1e-4, j), 1e-5);
}

TEST(EvalJet, LogFamilyFullJet) {
  // closed-form jet of asinh(x/t) at (1,1): all ten slots are rational
  // multiples of sqrt(2) except the value log(1+sqrt 2)
  const Jet<3> j = SurfaceFamily::log_sinh(1.0).eval_jet(1.0, 1.0);
  EXPECT_NEAR(j.u(), 0.881373587019543025, 1e-15);
  EXPECT_NEAR(j.ut(), -kSqrt2 / 2, 1e-15);
  EXPECT_NEAR(j.ux(), kSqrt2 / 2, 1e-15);
  EXPECT_NEAR(j.utt(), 3 * kSqrt2 / 4, 1e-14);
  EXPECT_NEAR(j.utx(), -kSqrt2 / 4, 1e-14);
  EXPECT_NEAR(j.uxx(), -kSqrt2 / 4, 1e-14);
  EXPECT_NEAR(j.uttt(), -13 * kSqrt2 / 8, 1e-13);
  EXPECT_NEAR(j.uttx(), kSqrt2 / 8, 1e-13);
  EXPECT_NEAR(j.utxx(), 3 * kSqrt2 / 8, 1e-13);
  EXPECT_NEAR(j.uxxx(), kSqrt2 / 8, 1e-13);
}

TEST(EvalJet, ArctanFamilyFullJet) {
  // closed-form jet of atan(x/t) at (1,1/2): all slots rational
  const Jet<3> j = SurfaceFamily::nutku_arctan(1.0).eval_jet(1.0, 0.5);
  EXPECT_NEAR(j.u(), 0.463647609000806116, 1e-15);
  EXPECT_NEAR(j.ut(), -0.4, 1e-15);
  EXPECT_NEAR(j.ux(), 0.8, 1e-15);
  EXPECT_NEAR(j.utt(), 0.64, 1e-14);
  EXPECT_NEAR(j.utx(), -0.48, 1e-14);
  EXPECT_NEAR(j.uxx(), -0.64, 1e-14);
  EXPECT_NEAR(j.uttt(), -1.408, 1e-13);
  EXPECT_NEAR(j.uttx(), 0.256, 1e-13);
  EXPECT_NEAR(j.utxx(), 1.408, 1e-13);
  EXPECT_NEAR(j.uxxx(), -0.256, 1e-13);
}

TEST(EvalJet, DomainGuards) {
  const SurfaceFamily f = SurfaceFamily::log_sinh(1.0);
  EXPECT_THROW(f.eval_jet(0.0, 1.0), OutOfDomain);
  EXPECT_THROW(f.eval_jet(-1.0, 1.0), OutOfDomain);
  EXPECT_THROW(f.eval_jet(5e-4, 1.0, /*margin=*/1e-3), OutOfDomain);
  EXPECT_NO_THROW(f.eval_jet(2e-3, 1.0, /*margin=*/1e-3));

  const SurfaceFamily s = f.shifted(2.0);
  EXPECT_THROW(s.eval_jet(2.0, 0.5), OutOfDomain);
  EXPECT_THROW(s.eval_jet(2.5, 0.5), OutOfDomain);
  EXPECT_NO_THROW(s.eval_jet(1.9, 0.5));
}

TEST(FamilyProperties, LogFormIdentity) {
  // the asinh implementation reproduces k*ln(x/t + sqrt(1 + x^2/t^2))
  const SurfaceFamily f = SurfaceFamily::log_sinh(1.7);
  for (double t : {0.3, 1.0, 2.5}) {
    for (double x = -3.0; x <= 3.0; x += 0.375) {
      const double printed = 1.7 * std::log(x / t + std::sqrt(1.0 + x * x / (t * t)));
      const double got = f.eval_jet(t, x).u();
      EXPECT_NEAR(got, printed, 1e-13 * std::max(1.0, std::abs(printed)));
    }
  }
}

TEST(FamilyProperties, OddSymmetryInX) {
  for (const SurfaceFamily& f :
       {SurfaceFamily::log_sinh(1.3), SurfaceFamily::nutku_arctan(-0.8)}) {
    for (double t : {0.5, 1.0, 3.0})
      for (double x : {0.25, 1.0, 2.0}) {
        const double up = f.eval_jet(t, x).u();
        const double dn = f.eval_jet(t, -x).u();
        EXPECT_NEAR(up, -dn, 1e-13 * std::max(1.0, std::abs(up)));
      }
  }
}

TEST(SingularTrace, BlowupProduct) {
  std::vector<double> ts;
  for (double t = 10.0; t >= 1e-3; t *= 0.5) ts.push_back(t);

  for (double k : {2.0, -1.5}) {
    for (const SurfaceFamily& f :
         {SurfaceFamily::log_sinh(k), SurfaceFamily::nutku_arctan(k)}) {
      const auto trace = singular_trace(f, ts);
      for (const TraceSample& s : trace)
        EXPECT_NEAR(s.product, k, 1e-12 * std::max(1.0, std::abs(k))) << f.name();
    }
  }

  // spot values: u_x(1,0) = k and the 1/t blow-up
  const auto at1 = singular_trace(SurfaceFamily::log_sinh(2.0), std::vector<double>{1.0});
  EXPECT_NEAR(at1[0].ux, 2.0, 1e-13);
  const auto tiny =
      singular_trace(SurfaceFamily::nutku_arctan(1.0), std::vector<double>{0.001});
  EXPECT_NEAR(tiny[0].ux, 1000.0, 1e-9);

  const auto zero = singular_trace(SurfaceFamily::zero(), std::vector<double>{0.7});
  EXPECT_EQ(zero[0].ux, 0.0);
}

TEST(TimeShift, FixedPointOfReflection) {
  const SurfaceFamily inner = SurfaceFamily::log_sinh(1.0);
  const SurfaceFamily shifted = time_shift(inner, 1.0);
  for (double x : {-1.0, 0.3, 2.0}) {
    const Jet<3> a = shifted.eval_jet(0.5, x);
    const Jet<3> b = inner.eval_jet(0.5, x);
    EXPECT_NEAR(a.u(), b.u(), 1e-15);
    EXPECT_NEAR(a.ux(), b.ux(), 1e-15);
    EXPECT_NEAR(a.ut(), -b.ut(), 1e-15);  // reflection flips u_t
  }
}

TEST(TimeShift, ZeroStaysZero) {
  const Jet<3> j = time_shift(SurfaceFamily::zero(), 3.0).eval_jet(1.0, 0.4);
  for (int it = 0; it <= 3; ++it)
    for (int ix = 0; it + ix <= 3; ++ix) EXPECT_EQ(j.deriv(it, ix), 0.0);
}

TEST(TimeShift, ReflectionSignPattern) {
  // all ten slots relate to the inner family at the reflected point with
  // sign (-1)^(order of t-derivatives)
  const SurfaceFamily inner = SurfaceFamily::log_sinh(1.0);
  const SurfaceFamily shifted = inner.shifted(2.0);
  const Jet<3> s = shifted.eval_jet(1.5, 1.0);
  const Jet<3> i = inner.eval_jet(0.5, 1.0);
  for (int it = 0; it <= 3; ++it)
    for (int ix = 0; it + ix <= 3; ++ix) {
      const double expected = ((it % 2) ? -1.0 : 1.0) * i.deriv(it, ix);
      EXPECT_NEAR(s.deriv(it, ix), expected,
                  1e-13 * std::max(1.0, std::abs(expected)))
          << "slot (" << it << "," << ix << ")";
    }

  // and the chain rule agrees with finite differences of the shifted value
  const FdField field = [&shifted](long double t, long double x) {
    return shifted.value(t, x);
  };
  EXPECT_LT(fd_crosscheck(field, 1.5, 1.0, 1e-4, s), 1e-5);
}

TEST(OdeProfileFamily, MatchesArctanClosedForm) {
  // the paper-variant profile with C=1, D=0 is atan(rho); the family built
  // from its table must reproduce k=1 arctan jets
  const auto table = std::make_shared<const OdeProfileTable>(
      ode_integrate(OdeVariant::paper, 1.0, 0.0, -10.0, 10.0, 1e-3));
  const SurfaceFamily prof = SurfaceFamily::ode_profile(table);
  const SurfaceFamily arctan = SurfaceFamily::nutku_arctan(1.0);

  for (double t : {0.6, 1.0, 1.7})
    for (double x : {-1.1, 0.20005, 1.4}) {
      const Jet<3> a = prof.eval_jet(t, x);
      const Jet<3> b = arctan.eval_jet(t, x);
      EXPECT_NEAR(a.u(), b.u(), 1e-9);
      EXPECT_NEAR(a.ut(), b.ut(), 1e-8);
      EXPECT_NEAR(a.ux(), b.ux(), 1e-8);
      EXPECT_NEAR(a.utt(), b.utt(), 1e-7);
      EXPECT_NEAR(a.uxx(), b.uxx(), 1e-7);
    }

  // outside the table range
  EXPECT_THROW(prof.eval_jet(0.1, 5.0), OutOfDomain);
}

TEST(OdeProfileFamily, FdCrosscheckMidPieces) {
  const auto table = std::make_shared<const OdeProfileTable>(
      ode_integrate(OdeVariant::alt, 1.0, 0.0, -10.0, 10.0, 1e-3));
  const SurfaceFamily prof = SurfaceFamily::ode_profile(table);
  const FdField field = [&prof](long double t, long double x) {
    return prof.value(t, x);
  };
  // third-derivative jumps at piece knots are O(step^3), far below the
  // tolerance, so the stencil may cross knots freely
  for (double x : {0.40035, -0.70015, 1.20045}) {
    const Jet<3> j = prof.eval_jet(1.0, x);
    EXPECT_LT(fd_crosscheck(field, 1.0, x, 1e-4, j), 1e-5) << "x = " << x;
  }
}

}  // namespace
}  // namespace minsurf
