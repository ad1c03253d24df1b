#pragma once

#include <complex>
#include <vector>

#include "drharm/geometry.hpp"
#include "drharm/spherical.hpp"
#include "drharm/transforms.hpp"
#include "drharm/zeros.hpp"

namespace drharm {

/// Value of the translated functional <tau_s T_r, phi_lambda0> at center
/// distance s, computed as FT_r(lambda0) phi_lambda0(s).
struct TranslatedValue {
  double center = 0.0;
  std::complex<double> value;
  /// |value| / scale
  double relative = 0.0;
};

struct AnnihilationReport {
  DistKind kind = DistKind::Ball;
  std::complex<double> lambda0;
  double radius = 0.0;
  /// vol(B_r), vol(S_r) or 1.
  double scale = 1.0;
  std::complex<double> transform_value;
  std::vector<TranslatedValue> translated;
  /// <T_r, phi_lambda0> at s = 0 computed without the closed form: radial
  /// quadrature for balls, the ODE oracle for spheres and mean values.
  std::complex<double> center_value;
  double center_residual = 0.0;
  double tol = 0.0;
  bool passed = false;
};

inline constexpr double kAnnihilationTol = 1e-7;

/// Checks that f = phi_lambda0 is annihilated by T_r and all its translates.
/// Centers must lie in [0, 5]; the report lists them in increasing order.
AnnihilationReport verify_annihilation(const SpaceParams& params, DistKind kind,
                                       std::complex<double> lambda0, double r,
                                       std::vector<double> centers,
                                       double tol = kAnnihilationTol);

struct Scenario {
  SpaceParams params;
  DistKind kind = DistKind::Ball;
  double r1 = 0.0;
  double r2 = 0.0;
  double lambda_max = 0.0;
  double delta = 0.0;
  PairVerdict verdict;
  /// One report per radius when the verdict is Inadmissible; empty otherwise.
  std::vector<AnnihilationReport> evidence;
};

/// Admissibility of the radius pair for the kind, within the window
/// (0, lambda_max] and the certified strip.
Scenario check_pair(const SpaceParams& params, DistKind kind, double r1, double r2,
                    double lambda_max, double delta = 1e-6,
                    const SpectralZeroOptions& options = {});

/// Mean value pair check with the imaginary scan extended to i (0, rho + 2].
/// The solutions +-i rho shared by all radii are never reported.
Scenario harmonicity_scenario(const SpaceParams& params, double r1, double r2,
                              double lambda_max, double delta = 1e-6,
                              const SpectralZeroOptions& options = {});

struct InadmissiblePair {
  double r1 = 0.0;
  double r2 = 0.0;
  double lambda0 = 0.0;
  /// |radial function| at r1, r2 (phi^(p,q+2), phi or phi - 1).
  double residual_1 = 0.0;
  double residual_2 = 0.0;
  /// |FT_{r_j}(lambda0)|.
  double transform_residual_1 = 0.0;
  double transform_residual_2 = 0.0;
  double tol = 0.0;
  bool certified = false;
};

/// First two zeros r1 < r2 <= r_max of the kind's radial function at
/// lambda0. Throws Error(NotEnoughZeros) when there are fewer than two.
InadmissiblePair generate_inadmissible_pair(const SpaceParams& params, DistKind kind,
                                            double lambda0, double r_max = kMaxRadius,
                                            const ZeroOptions& options = {});

/// Centers 0, 0.5, ..., 5 used for translated checks.
std::vector<double> default_centers();

}  // namespace drharm
