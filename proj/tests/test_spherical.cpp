#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "drharm/errors.hpp"
#include "drharm/spherical.hpp"
#include "support.hpp"

using namespace drharm;
using drharm::test::rel_err;
using namespace std::complex_literals;

TEST(Phi, EuclideanCosine) {
  const SpaceParams s(0, 0);
  EXPECT_LT(rel_err(phi(s, 1.0, std::numbers::pi), -1.0), 1e-12);
  for (double r : {0.3, 2.0, 7.5}) EXPECT_LT(rel_err(phi(s, 2.0, r), std::cos(2.0 * r)), 1e-10);
}

TEST(Phi, RealHyperbolicPlane) {
  // (2,0): sin(lambda r) / (2 lambda sinh(r/2))
  const SpaceParams s(2, 0);
  for (double l : {0.5, 3.0}) {
    for (double r : {0.1, 1.0, 6.0}) {
      EXPECT_LT(rel_err(phi(s, l, r), std::sin(l * r) / (2 * l * std::sinh(r / 2))), 1e-10);
    }
  }
}

TEST(Phi, ValueAtOriginIsOne) {
  EXPECT_EQ(phi(SpaceParams(3, 2), 4.0 + 1i, 0.0), std::complex<double>(1.0));
}

TEST(Phi, ImaginaryRhoIsConstant) {
  const SpaceParams s(4, 3);
  for (double r : {0.5, 3.0, 9.0}) EXPECT_LT(rel_err(phi(s, {0.0, s.rho()}, r), 1.0), 1e-12);
}

TEST(Phi, EvenInLambda) {
  const SpaceParams s(2, 1);
  const std::complex<double> l(1.3, 0.4);
  EXPECT_LT(rel_err(phi(s, -l, 2.0), phi(s, l, 2.0)), 1e-12);
}

struct Reference {
  int p, q;
  std::complex<double> lambda;
  double r;
  std::complex<double> value;
};

TEST(Phi, ReferenceValues) {
  const Reference refs[] = {
      {2, 1, 2.0, 1.0, 0.51016815594883607761},
      {3, 2, 1.0 + 0.5i, 3.0, {0.05246595043065800348, -0.068331827052843198504}},
      {8, 7, 3.0, 5.0, 2.9043071368951953326e-10},
      {1, 0, 0.5, 2.0, 0.72207522827937457342},
      {4, 3, 1i, 2.0, 0.31096321640876202963},
      {2, 1, 20.0 + 2i, 2.0, {0.10735672584267459741, -0.011213804704246241641}},
      {0, 3, 10.0, 8.0, -5.7240654184129319922e-7},
      {6, 0, 3i, 4.0, 74.459852988002296825},
      {2, 2, 40.0, 1.5, 0.00050665562698906311589},
  };
  SeriesOptions opt;
  opt.tol = 1e-14;
  for (const auto& ref : refs) {
    EXPECT_LT(rel_err(phi(SpaceParams(ref.p, ref.q), ref.lambda, ref.r, opt), ref.value), 1e-9)
        << ref.p << "," << ref.q << " " << ref.lambda << " " << ref.r;
  }
}

TEST(Phi, ReportCarriesDiagnostics) {
  const EvalReport r = phi_report(SpaceParams(2, 1), 2.0, 1.0);
  EXPECT_GT(r.terms_used, 0);
  EXPECT_GE(r.est_error, 0.0);
  EXPECT_LT(r.est_error, 1e-10);
}

TEST(Phi, Caps) {
  EXPECT_THROW(phi(SpaceParams(1, 0), 1.0, 10.5), Error);
  EXPECT_THROW(phi(SpaceParams(1, 0), 60i, 1.0), Error);
  EXPECT_THROW(phi(SpaceParams(1, 0), 1.0, -0.5), Error);
}

TEST(PhiDk, ComplexReference) {
  const SpaceParams s(3, 2);
  const std::complex<double> want[] = {{-0.12846944518775134623, -0.054362870664643779765},
                                       {-0.11188594675650902402, 0.023083637097009980378},
                                       {0.048056662892116059698, 0.019111423843432414044},
                                       {0.039730787902122008911, -0.011445277228847095396}};
  for (int k = 1; k <= 4; ++k) EXPECT_LT(rel_err(phi_dk(s, {1.0 + 0.5i, k}, 1.0), want[k - 1]), 1e-9) << k;
}

TEST(PhiDk, EuclideanDerivatives) {
  const SpaceParams s(0, 0);
  const double l = 1.7;
  const double t = 2.3;
  for (int k = 0; k <= 4; ++k) {
    EXPECT_LT(rel_err(phi_dk(s, {l, k}, t), psi({l, k}, t)), 1e-10) << k;
  }
  EXPECT_THROW(phi_dk(s, {l, 5}, t), Error);
}

TEST(Psi, Closed) {
  EXPECT_NEAR(psi({2.0, 1}, 0.5).real(), -0.5 * std::sin(1.0), 1e-15);
  EXPECT_NEAR(psi({2.0, 2}, 0.5).real(), -0.25 * std::cos(1.0), 1e-15);
}

TEST(OdeOracle, AgreesWithSeries) {
  for (const auto& [p, q] : {std::pair{2, 1}, {5, 0}, {3, 4}, {8, 7}}) {
    const SpaceParams s(p, q);
    for (double l : {0.0, 1.3, 4.9}) {
      for (double r : {0.2, 2.0, 5.0}) {
        EXPECT_LT(rel_err(phi_ode_oracle(s, l, r), phi(s, l, r)), 1e-8) << p << q << " " << l << " " << r;
      }
    }
  }
}

TEST(OdeOracle, StepBudget) {
  OdeOptions opt;
  opt.max_steps = 3;
  try {
    phi_ode_oracle(SpaceParams(2, 1), 40.0, 9.0, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StepUnderflow);
  }
}
