#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "drharm/errors.hpp"
#include "drharm/zeros.hpp"

using namespace drharm;
using namespace std::complex_literals;
constexpr double kPi = std::numbers::pi;

TEST(RealZeros, Sine) {
  const ZeroSet s = real_zeros([](double x) { return std::sin(x); }, 10.0);
  ASSERT_EQ(s.zeros.size(), 3u);
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(s.zeros[k], (k + 1) * kPi, 1e-10);
    EXPECT_LE(s.residuals[k], s.tol);
    EXPECT_EQ(s.multiplicities[k], 1);
  }
  EXPECT_FALSE(s.certified_count.has_value());
}

TEST(RealZeros, TangencyWarnsByDefault) {
  auto f = [](double x) { return (x - 2.005) * (x - 2.005); };
  const ZeroSet s = real_zeros(f, 5.0);
  EXPECT_TRUE(s.zeros.empty());
  ASSERT_EQ(s.tangent_warnings.size(), 1u);
  EXPECT_NEAR(s.tangent_warnings[0], 2.005, 1e-4);
}

TEST(RealZeros, TangencyAcceptedAsDoubleZero) {
  ZeroOptions opt;
  opt.accept_double_zeros = true;
  const ZeroSet s = real_zeros([](double x) { return 1.0 - std::cos(x); }, 8.0, opt,
                               [](double x) { return std::sin(x); });
  ASSERT_EQ(s.zeros.size(), 1u);
  EXPECT_NEAR(s.zeros[0], 2 * kPi, 1e-6);
  EXPECT_EQ(s.multiplicities[0], 2);
  EXPECT_TRUE(s.tangent_warnings.empty());
}

TEST(ComplexCount, Polynomials) {
  const Rectangle box{-2.0, 2.0, -2.0, 2.0};
  EXPECT_EQ(complex_zero_count([](std::complex<double> z) { return z * z + 1.0; }, box), 2);
  EXPECT_EQ(complex_zero_count([](std::complex<double> z) { return std::pow(z - 0.5, 3); }, box), 3);
  EXPECT_EQ(complex_zero_count([](std::complex<double> z) { return z - 3.0; }, box), 0);
  EXPECT_EQ(complex_zero_count([](std::complex<double> z) { return std::sin(kPi * z); }, {-2.5, 2.5, -1, 1}), 5);
}

TEST(ComplexCount, ZeroOnContour) {
  try {
    complex_zero_count([](std::complex<double> z) { return z - 2.0; }, {-2.0, 2.0, -1.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ContourTooClose);
  }
}

TEST(SpectralEquation, EuclideanBall) {
  const SpectralEquation eq(SpaceParams(0, 0), 1.0, DistKind::Ball);
  EXPECT_LT(std::abs(eq(kPi)), 1e-12);
  EXPECT_GT(std::abs(eq(2.0)), 0.1);
  EXPECT_LT(std::abs(eq.transform_value(kPi)), 1e-12);
}

TEST(SpectralEquation, MeanValueRemovesTrivialSolutions) {
  const SpaceParams s(2, 1);
  const SpectralEquation eq(s, 1.0, DistKind::MeanValue);
  EXPECT_LT(std::abs(eq.transform_value({0.0, s.rho()})), 1e-12);
  EXPECT_GT(std::abs(eq({0.0, s.rho()})), 1e-3);
  EXPECT_GT(std::abs(eq({1e-6, s.rho()})), 1e-3);
}

TEST(SpectralZeroSet, EuclideanBallCertified) {
  const ZeroSet s = spectral_zero_set(SpaceParams(0, 0), 1.0, DistKind::Ball, 20.0);
  ASSERT_EQ(s.zeros.size(), 6u);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(s.zeros[k], (k + 1) * kPi, 1e-9);
  ASSERT_TRUE(s.certified_count.has_value());
  EXPECT_EQ(*s.certified_count, 12);
  EXPECT_EQ(s.expected_count, 12);
  EXPECT_FALSE(s.uncertified);
}

TEST(SpectralZeroSet, DamekRicciReferenceZeros) {
  const ZeroSet sphere = spectral_zero_set(SpaceParams(2, 1), 1.0, DistKind::Sphere, 10.0);
  ASSERT_FALSE(sphere.zeros.empty());
  EXPECT_NEAR(sphere.zeros[0], 3.831205993467690211, 1e-9);
  EXPECT_FALSE(sphere.uncertified);
  const ZeroSet ball = spectral_zero_set(SpaceParams(2, 1), 1.0, DistKind::Ball, 10.0);
  ASSERT_FALSE(ball.zeros.empty());
  EXPECT_NEAR(ball.zeros[0], 5.0890682899890937242, 1e-9);
  EXPECT_FALSE(ball.uncertified);
}

TEST(SpectralZeroSet, EuclideanMeanValueDoubleZeros) {
  const ZeroSet s = spectral_zero_set(SpaceParams(0, 0), 1.0, DistKind::MeanValue, 20.0);
  ASSERT_EQ(s.zeros.size(), 3u);
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(s.zeros[k], 2 * (k + 1) * kPi, 1e-8);
    EXPECT_EQ(s.multiplicities[k], 2);
  }
  EXPECT_EQ(s.expected_count, 12);
  EXPECT_FALSE(s.uncertified);
}

TEST(SpectralZeroSet, CountMatchesExpectation) {
  for (const auto kind : {DistKind::Ball, DistKind::Sphere, DistKind::MeanValue}) {
    const ZeroSet s = spectral_zero_set(SpaceParams(2, 1), 1.5, kind, 15.0);
    ASSERT_TRUE(s.certified_count.has_value()) << to_string(kind);
    EXPECT_EQ(*s.certified_count, s.expected_count) << to_string(kind);
    EXPECT_FALSE(s.uncertified) << to_string(kind) << ": " << s.note;
  }
}

TEST(SpectralZeroSet, WindowCap) {
  EXPECT_THROW(spectral_zero_set(SpaceParams(0, 0), 1.0, DistKind::Ball, 41.0), Error);
}

TEST(CommonZero, EqualRadiiShareEveryZero) {
  const PairVerdict v = common_zero(SpaceParams(2, 1), 1.0, 1.0, DistKind::Sphere, 10.0);
  EXPECT_EQ(v.admissible, Admissibility::Inadmissible);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_NEAR(v.witness->real(), 3.831205993467690211, 1e-9);
  EXPECT_EQ(v.min_gap, 0.0);
}

TEST(CommonZero, ScopeRecorded) {
  const PairVerdict v = common_zero(SpaceParams(0, 0), 1.0, std::sqrt(2.0), DistKind::Ball, 20.0);
  EXPECT_EQ(v.admissible, Admissibility::Admissible);
  EXPECT_EQ(v.lambda_max, 20.0);
  EXPECT_GT(v.strip_height, 0.0);
  EXPECT_GT(v.min_gap, 0.05);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(RadialZeros, Euclidean) {
  const auto ball = radial_zeros(SpaceParams(0, 0), DistKind::Ball, kPi, 3.5);
  ASSERT_EQ(ball.size(), 3u);
  EXPECT_NEAR(ball[0].location, 1.0, 1e-10);
  EXPECT_NEAR(ball[1].location, 2.0, 1e-10);
  const auto sphere = radial_zeros(SpaceParams(0, 0), DistKind::Sphere, kPi, 2.0);
  ASSERT_EQ(sphere.size(), 2u);
  EXPECT_NEAR(sphere[0].location, 0.5, 1e-10);
  EXPECT_NEAR(sphere[1].location, 1.5, 1e-10);
  const auto mean = radial_zeros(SpaceParams(0, 0), DistKind::MeanValue, kPi, 5.0);
  ASSERT_EQ(mean.size(), 2u);
  EXPECT_NEAR(mean[0].location, 2.0, 1e-6);
  EXPECT_EQ(mean[0].multiplicity, 2);
}

TEST(RadialZeros, DamekRicciReference) {
  const auto z = radial_zeros(SpaceParams(2, 1), DistKind::Sphere, 2.0, 4.0);
  ASSERT_EQ(z.size(), 2u);
  EXPECT_NEAR(z[0].location, 1.9131124825807419767, 1e-9);
  EXPECT_NEAR(z[1].location, 3.4990787226915195474, 1e-9);
}
