#pragma once

#include <complex>
#include <vector>

namespace drharm {

/// Arguments of F(a, b; c; z) in the regime used throughout the library:
/// c > 0 real and z <= 0 real.
struct HypArgs {
  std::complex<double> a;
  std::complex<double> b;
  double c = 1.0;
  double z = 0.0;
};

struct SeriesOptions {
  double tol = 1e-12;
  long term_cap = 200000;
};

struct EvalReport {
  std::complex<double> value;
  long terms_used = 0;
  double est_error = 0.0;
  /// Decimal digits of the arithmetic used for the leading terms (16 means
  /// plain double).
  int precision_digits = 16;
};

/// F(a, b; c; z) for z <= 0 through the Pfaff transformation
///   F(a, b; c; z) = (1 - z)^(-a) F(a, c - b; c; z / (z - 1)),
/// summing the Maclaurin series in w = z / (z - 1) in [0, 1).
///
/// The leading terms of the series can be much larger than the sum when |a|
/// or |b| is large; the engine measures this first and sums those terms in
/// extended precision (50, 100 or 200 digits) before finishing the tail in
/// compensated double arithmetic. est_error covers the geometric tail bound
/// and an accumulated rounding estimate.
///
/// Throws Error(InvalidDomain) for z > 0, c <= 0, tol < 1e-14 or w rounding
/// to 1, and NonConvergenceError when the term cap is reached first.
EvalReport f21_neg(const HypArgs& args, const SeriesOptions& options = {});

/// F(rho - i lambda, rho + i lambda; c; z). For |z| <= 1/2 the series in z is
/// summed directly with the real factor (rho + j)^2 + lambda^2; otherwise the
/// Pfaff form is used. The result has an exactly zero imaginary part for
/// real lambda.
EvalReport f21_neg_conjpair(double rho, std::complex<double> lambda, double c,
                            double z, const SeriesOptions& options = {});

struct LambdaDerivatives {
  /// derivatives[j] = d^j/dlambda^j F(rho - i lambda, rho + i lambda; c; z).
  std::vector<std::complex<double>> derivatives;
  long terms_used = 0;
  double est_error = 0.0;
  int precision_digits = 16;
};

inline constexpr int kMaxLambdaOrder = 4;

/// Lambda-derivatives up to `order` (<= kMaxLambdaOrder) of the conjugate
/// pair function, by truncated Taylor arithmetic in lambda carried through
/// every term of the series and through the Pfaff prefactor.
LambdaDerivatives f21_conjpair_lambda_derivatives(double rho, std::complex<double> lambda,
                                                  double c, double z, int order,
                                                  const SeriesOptions& options = {});

}  // namespace drharm
