#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "drharm/abel.hpp"
#include "drharm/errors.hpp"
#include "drharm/spherical.hpp"
#include "support.hpp"

using namespace drharm;
using drharm::test::rel_err;
using namespace std::complex_literals;

namespace {

const RadialJetFunction kOne = [](double t, int order) { return TaylorJet::constant(t, 1.0, order); };

std::vector<double> ten_radii() {
  std::vector<double> r;
  for (int i = 1; i <= 10; ++i) r.push_back(0.5 * i);
  return r;
}

}  // namespace

TEST(TaylorJet, PowerCoefficients) {
  const TaylorJet j = TaylorJet::power(3.0, 1.0, 0.5, 3);
  ASSERT_EQ(j.order(), 3);
  EXPECT_NEAR(j.coeffs()[0].real(), 2.0, 1e-15);
  EXPECT_NEAR(j.coeffs()[1].real(), 0.25, 1e-15);
  EXPECT_NEAR(j.coeffs()[2].real(), -1.0 / 64, 1e-15);
  EXPECT_NEAR(j.coeffs()[3].real(), 1.0 / 512, 1e-15);
  EXPECT_THROW(TaylorJet::power(0.5, -1.0, 0.5, 2), Error);
}

TEST(TaylorJet, ProductOfPowersAddsExponents) {
  const TaylorJet a = TaylorJet::power(2.0, 1.0, 0.3, 5);
  const TaylorJet b = TaylorJet::power(2.0, 1.0, 1.2, 5);
  const TaylorJet c = TaylorJet::power(2.0, 1.0, 1.5, 5);
  const TaylorJet ab = a * b;
  for (int k = 0; k <= 5; ++k) EXPECT_LT(rel_err(ab.coeffs()[k], c.coeffs()[k]), 1e-13);
}

TEST(TaylorJet, DerivativeLowersOrder) {
  const TaylorJet j(1.5, {1.0, 2.0, 3.0});
  const TaylorJet d = j.derivative();
  ASSERT_EQ(d.order(), 1);
  EXPECT_EQ(d.coeffs()[0], std::complex<double>(2.0));
  EXPECT_EQ(d.coeffs()[1], std::complex<double>(6.0));
  EXPECT_THROW(TaylorJet::constant(1.5, 1.0, 0).derivative(), Error);
  const TaylorJet s = j + 2.0 * j;
  EXPECT_EQ(s.coeffs()[2], std::complex<double>(9.0));
}

TEST(Superposition, Validation) {
  EXPECT_THROW(CosineSum({{1.0, 1.0, 3}}), Error);
  EXPECT_THROW(CosineSum({{1.0, 1.0, 0}, {2.0, 1.0, 0}}), Error);
  EXPECT_NO_THROW(CosineSum({{1.0, 1.0, 0}, {2.0, 1.0, 1}}));
}

TEST(Superposition, DualAbelKeepsCoefficients) {
  const SpaceParams s(2, 1);
  const CosineSum cs({{2.0, 1.0, 0}, {-1.0i, 0.5, 1}});
  const SphericalSum image = dual_abel(cs, s);
  const double r = 1.7;
  EXPECT_LT(rel_err(image(r), 2.0 * phi(s, 1.0, r) - 1.0i * phi_dk(s, {0.5, 1}, r)), 1e-14);
  EXPECT_LT(rel_err(cs(r), 2.0 * std::cos(r) - 1.0i * psi({0.5, 1}, r)), 1e-15);
}

TEST(SphericalJet, MatchesFiniteDifferences) {
  const SpaceParams s(4, 2);
  const SphericalSum sum(s, {{1.0, 1.3, 0}, {0.5, 0.7, 1}});
  const double r = 1.2;
  const double t = std::cosh(r);
  const TaylorJet j = spherical_sum_jet(sum, t, 2);
  EXPECT_LT(rel_err(j.value(), sum(r)), 1e-12);
  const double h = 1e-4;
  auto at_t = [&](double tt) { return sum(std::acosh(tt)); };
  const auto d1 = (at_t(t + h) - at_t(t - h)) / (2 * h);
  const auto d2 = (at_t(t + h) - 2.0 * at_t(t) + at_t(t - h)) / (h * h);
  EXPECT_LT(rel_err(j.coeffs()[1], d1), 1e-7);
  EXPECT_LT(rel_err(2.0 * j.coeffs()[2], d2), 1e-5);
}

TEST(InverseDualAbel, EuclideanIsIdentity) {
  const SpaceParams s(0, 0);
  EXPECT_DOUBLE_EQ(calibrate_constant(s), 1.0);
  const CosineSum cs({{1.0, 0.8, 0}, {0.3, 2.0, 2}, {-1.0, 1.5, 1}});
  EXPECT_LE(roundtrip(cs, s, ten_radii()), 1e-12);
}

TEST(InverseDualAbel, ConstantMapsToHyperbolicCosine) {
  for (const auto& [p, q] : {std::pair{2, 0}, {0, 2}, {2, 2}, {4, 2}, {6, 4}}) {
    const SpaceParams s(p, q);
    for (double r : {0.3, 1.7, 4.0}) {
      EXPECT_LT(rel_err(inverse_dual_abel(s, kOne, std::cosh(r)), std::cosh(s.rho() * r)), 1e-10)
          << p << "," << q << " r=" << r;
    }
  }
}

TEST(InverseDualAbel, CalibrationStable) {
  for (const auto& [p, q] : {std::pair{2, 0}, {0, 2}, {2, 2}, {4, 2}}) {
    const Calibration cal = calibrate(SpaceParams(p, q));
    EXPECT_GT(cal.constant, 0.0);
    EXPECT_LE(cal.relative_difference, 1e-9);
  }
  EXPECT_NEAR(calibrate_constant(SpaceParams(2, 0)), std::sqrt(2.0), 1e-12);
}

TEST(InverseDualAbel, SphericalFunctionMapsToCosine) {
  const SpaceParams s(2, 2);
  const double lambda = 1.1;
  const SphericalSum image(s, {{1.0, lambda, 0}});
  const RadialJetFunction u = [&](double t, int order) { return spherical_sum_jet(image, t, order); };
  for (double r : {0.4, 1.0, 3.3}) {
    EXPECT_LT(rel_err(inverse_dual_abel(s, u, std::cosh(r)), std::cos(lambda * r)), 1e-8) << r;
  }
}

TEST(Roundtrip, SingleAndMultiTerm) {
  const SpaceParams s(2, 2);
  EXPECT_LE(roundtrip(CosineSum({{1.0, 1.0, 0}}), s, ten_radii()), 1e-8);
  const CosineSum three({{1.0, 0.5, 0}, {1.0, 1.0, 0}, {1.0, 2.0, 0}});
  EXPECT_LE(roundtrip(three, s, ten_radii()), 1e-7);
}

TEST(Roundtrip, ImaginaryDerivativePreimage) {
  // The preimage of phi_{i rho, 1} is -i r sinh(rho r): (-i) times a positive function.
  const SpaceParams s(2, 2);
  const double rho = s.rho();
  const SphericalSum image(s, {{1.0, {0.0, rho}, 1}});
  const RadialJetFunction u = [&](double t, int order) { return spherical_sum_jet(image, t, order); };
  for (double r : {0.25, 1.0, 2.0, 4.5}) {
    const std::complex<double> b = inverse_dual_abel(s, u, std::cosh(r));
    const std::complex<double> want(0.0, -r * std::sinh(rho * r));
    EXPECT_LT(rel_err(b, want), 1e-8) << r;
    EXPECT_LT(b.imag(), 0.0);
  }
}

TEST(InverseDualAbel, Errors) {
  try {
    inverse_dual_abel(SpaceParams(2, 1), kOne, 2.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedParameters);
    EXPECT_NE(std::string(e.what()).find("R_{1/2}"), std::string::npos);
  }
  EXPECT_THROW(calibrate(SpaceParams(3, 2)), Error);
  EXPECT_THROW(inverse_dual_abel(SpaceParams(2, 2), kOne, 1.0, 1.0), Error);
  const RadialJetFunction shallow = [](double t, int) { return TaylorJet::constant(t, 1.0, 1); };
  try {
    inverse_dual_abel(SpaceParams(2, 2), shallow, 2.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::JetDepth);
  }
  EXPECT_THROW(roundtrip(CosineSum({{1.0, 1.0, 0}}), SpaceParams(2, 2), std::vector<double>{0.0}), Error);
}
