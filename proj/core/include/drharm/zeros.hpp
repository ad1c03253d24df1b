#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "drharm/geometry.hpp"
#include "drharm/hypergeom.hpp"
#include "drharm/transforms.hpp"

namespace drharm {

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<std::complex<double>(std::complex<double>)>;

struct ZeroOptions {
  double scan_step = 0.01;
  /// Residual bound |f(zero)| <= tol for every reported zero.
  double tol = 1e-10;
  /// Accept a tangency (|f| <= tol at a local extremum, f' changing sign) as
  /// a zero of multiplicity two instead of only warning about it.
  bool accept_double_zeros = false;
};

/// A real zero located by the scan.
struct RealZero {
  double location = 0.0;
  double residual = 0.0;
  int multiplicity = 1;
};

/// Zeros of an even entire spectral function on a window (0, window].
///
/// The certificate counts zeros with the argument principle on the symmetric
/// rectangle [-X, X] x [-H, H] (X >= window, H = strip_height). Evenness
/// makes each zero lambda != 0 appear with -lambda, so the count must equal
///   2 (sum of real multiplicities + #imaginary + #origin) + 4 #complex
/// where complex zeros are stored by their first quadrant representative.
struct ZeroSet {
  std::vector<double> zeros;
  std::vector<double> residuals;
  std::vector<int> multiplicities;
  /// y > 0 with f(i y) = 0.
  std::vector<double> imaginary_zeros;
  /// Non-real, non-imaginary zeros with Re > 0, Im > 0.
  std::vector<std::complex<double>> complex_zeros;
  bool zero_at_origin = false;
  /// Near-zero extrema without a sign change that were not accepted.
  std::vector<double> tangent_warnings;

  double window = 0.0;
  double contour_right_edge = 0.0;
  double strip_height = 0.0;
  double tol = 0.0;
  std::optional<int> certified_count;
  int expected_count = 0;
  bool uncertified = false;
  std::string note;
};

/// Sign-change scan of f on (0, window] at resolution scan_step; brackets
/// are refined by bisection and polished with a safeguarded secant method
/// until |f| <= tol. `derivative` (optional) is used to locate tangencies.
/// The returned set carries no certificate.
ZeroSet real_zeros(const RealFunction& f, double window, const ZeroOptions& options = {},
                   const RealFunction& derivative = nullptr);

struct Rectangle {
  double x0 = 0.0;
  double x1 = 0.0;
  double y0 = 0.0;
  double y1 = 0.0;
};

/// Winding number of f along the boundary of the rectangle (counter
/// clockwise), refining each edge until every argument increment is below
/// pi/2. Throws Error(ContourTooClose) when min |f| on the contour is below
/// 1e-9 max |f|.
int complex_zero_count(const ComplexFunction& f, const Rectangle& box, int samples_per_edge = 64);

/// The spectral equation whose solutions decide admissibility, reduced by
/// the factors that never vanish:
///   Ball:      phi_lambda^(p,q+2)(r)
///   Sphere:    phi_lambda^(p,q)(r)
///   MeanValue: (phi_lambda(r) - 1) / (lambda^2 + rho^2), which removes the
///              solutions lambda = +-i rho that every radius shares.
class SpectralEquation {
 public:
  SpectralEquation(const SpaceParams& params, double r, DistKind kind,
                   const SeriesOptions& options = {});

  std::complex<double> operator()(std::complex<double> lambda) const;
  std::complex<double> derivative(std::complex<double> lambda) const;

  /// The unreduced transform value FT_r(lambda).
  std::complex<double> transform_value(std::complex<double> lambda) const;

  const SpaceParams& params() const noexcept { return params_; }
  double radius() const noexcept { return r_; }
  DistKind kind() const noexcept { return kind_; }

 private:
  std::complex<double> near_exceptional(std::complex<double> lambda, bool derivative) const;

  SpaceParams params_;
  SpaceParams eval_params_;
  double r_;
  DistKind kind_;
  SeriesOptions options_;
};

struct SpectralZeroOptions {
  ZeroOptions zero;
  double strip_height = 2.0;
  int samples_per_edge = 64;
};

/// Real zeros of the kind's spectral equation on (0, lambda_max], zeros on
/// the imaginary segment i (0, H], and an argument principle certificate over
/// the strip |Im lambda| <= H. Missing zeros off the axes are located by
/// recursive subdivision; if the counts still disagree the set is flagged
/// uncertified.
ZeroSet spectral_zero_set(const SpaceParams& params, double r, DistKind kind, double lambda_max,
                          const SpectralZeroOptions& options = {});

enum class Admissibility { Admissible, Inadmissible, Unknown };

std::string_view to_string(Admissibility a);

struct PairVerdict {
  Admissibility admissible = Admissibility::Unknown;
  std::optional<std::complex<double>> witness;
  /// |reduced equation| at the witness for r1 and r2.
  double witness_residual_1 = 0.0;
  double witness_residual_2 = 0.0;
  /// Smallest distance between the two zero sets (infinity if one is empty).
  double min_gap = 0.0;
  double lambda_max = 0.0;
  double strip_height = 0.0;
  double tol = 0.0;
  double delta = 0.0;
  ZeroSet zeros_1;
  ZeroSet zeros_2;
  std::string note;
};

/// Decides whether the spectral equations at r1 and r2 share a solution in
/// the certified region (0, lambda_max] x [-H, H].
PairVerdict common_zero(const SpaceParams& params, double r1, double r2, DistKind kind,
                        double lambda_max, double delta = 1e-6,
                        const SpectralZeroOptions& options = {});

/// Zeros in r of the radial function behind the kind at fixed real
/// lambda0 > 0 (Ball: phi^(p,q+2), Sphere: phi, MeanValue: phi - 1, whose
/// zeros are accepted as double zeros).
std::vector<RealZero> radial_zeros(const SpaceParams& params, DistKind kind, double lambda0,
                                   double r_max, const ZeroOptions& options = {});

}  // namespace drharm
