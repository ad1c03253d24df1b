#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "drharm/geometry.hpp"
#include "drharm/hypergeom.hpp"

namespace drharm {

/// One term coef * psi_{lambda,k} (line side) or coef * phi_{lambda,k}
/// (space side).
struct SpectralTerm {
  std::complex<double> coef;
  std::complex<double> lambda;
  int k = 0;
};

inline constexpr int kMaxSumDerivative = 2;

/// Finite superposition t -> sum coef psi_{lambda,k}(t); an even function on
/// the line. Terms must have k <= 2 and distinct (lambda, k).
class CosineSum {
 public:
  CosineSum() = default;
  explicit CosineSum(std::vector<SpectralTerm> terms);

  const std::vector<SpectralTerm>& terms() const noexcept { return terms_; }
  std::complex<double> operator()(double t) const;

  /// sum |coef| cosh(|Im lambda| t) max(1, |t|^k): a bound on the size of the
  /// terms at t, used to make errors relative.
  double envelope(double t) const;

 private:
  std::vector<SpectralTerm> terms_;
};

/// Finite superposition r -> sum coef phi_{lambda,k}^(p,q)(r).
class SphericalSum {
 public:
  SphericalSum(SpaceParams params, std::vector<SpectralTerm> terms);

  const SpaceParams& params() const noexcept { return params_; }
  const std::vector<SpectralTerm>& terms() const noexcept { return terms_; }
  std::complex<double> operator()(double r) const;

 private:
  SpaceParams params_;
  std::vector<SpectralTerm> terms_;
};

/// Truncated Taylor expansion sum_j c_j (t - center)^j, j <= order.
class TaylorJet {
 public:
  TaylorJet(double center, std::vector<std::complex<double>> coeffs);

  static TaylorJet constant(double center, std::complex<double> value, int order);
  /// (t + shift)^exponent expanded at center; needs center + shift > 0.
  static TaylorJet power(double center, double shift, double exponent, int order);

  double center() const noexcept { return center_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::complex<double>>& coeffs() const noexcept { return coeffs_; }
  std::complex<double> value() const { return coeffs_.front(); }

  /// d/dt; the result has one order less.
  TaylorJet derivative() const;

  friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b);
  friend TaylorJet operator+(const TaylorJet& a, const TaylorJet& b);
  friend TaylorJet operator*(std::complex<double> s, const TaylorJet& a);

 private:
  double center_;
  std::vector<std::complex<double>> coeffs_;
};

/// A smooth radial function given through its Taylor jets in t = cosh r:
/// (t, order) -> jet of that order at t.
using RadialJetFunction = std::function<TaylorJet(double t, int order)>;

/// Dual Abel transform on superpositions: psi_{lambda,k} -> phi_{lambda,k}
/// with the same coefficients.
SphericalSum dual_abel(const CosineSum& sum, const SpaceParams& params);

/// Jet in t = cosh r of a spherical superposition. The m-th t-derivative of
/// phi_lambda is (-1/2)^m (rho - i lambda)_m (rho + i lambda)_m / (n/2)_m
/// F(rho + m - i lambda, rho + m + i lambda; n/2 + m; (1 - t)/2).
TaylorJet spherical_sum_jet(const SphericalSum& sum, double t, int order,
                            const SeriesOptions& options = {});

/// The inverse B = a^{-1} for p = 2k, q = 2l, as an operator in t = cosh r:
///   C (t+1)^{1/2} (t-1)^{1/2} (d/dt o (t+1)^{1/2})^k (d/dt)^l
///     [(t+1)^{l-1/2} (t-1)^{l+k-1/2} u(t)],
/// where d/dt o (t+1)^{1/2} multiplies first and then differentiates.
/// Returns (B u)(arccosh t_eval). Throws UnsupportedParameters for odd p or
/// odd q, JetDepthError when u's jets are shallower than k + l + 2.
std::complex<double> inverse_dual_abel(const SpaceParams& params, const RadialJetFunction& u,
                                       double t_eval, double constant);

/// Same, with the calibrated constant.
std::complex<double> inverse_dual_abel(const SpaceParams& params, const RadialJetFunction& u,
                                       double t_eval);

struct Calibration {
  double constant = 0.0;
  /// Constant obtained from the second calibration point r = 2.
  double cross_check = 0.0;
  double relative_difference = 0.0;
};

/// Calibrates C_{p,q} from B(1) = cosh(rho r) at r = 1 and cross-checks at
/// r = 2. Throws CalibrationInconsistent above 1e-8 relative disagreement.
Calibration calibrate(const SpaceParams& params);
double calibrate_constant(const SpaceParams& params);

/// max over the sample radii of |B(dual_abel(sum))(r) - sum(r)| / envelope(r).
double roundtrip(const CosineSum& sum, const SpaceParams& params,
                 std::span<const double> sample_points);

}  // namespace drharm
