#include "drharm/tworadius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "drharm/errors.hpp"
#include "drharm/spherical.hpp"

namespace drharm {

std::vector<double> default_centers() {
  std::vector<double> c;
  for (int i = 0; i <= 10; ++i) c.push_back(0.5 * i);
  return c;
}

AnnihilationReport verify_annihilation(const SpaceParams& params, DistKind kind,
                                       std::complex<double> lambda0, double r,
                                       std::vector<double> centers, double tol) {
  for (double s : centers) {
    if (!(s >= 0.0) || !(s <= 5.0)) throw_domain("center distances must lie in [0, 5]");
  }
  std::sort(centers.begin(), centers.end());

  AnnihilationReport rep;
  rep.kind = kind;
  rep.lambda0 = lambda0;
  rep.radius = r;
  rep.tol = tol;
  rep.scale = distribution_scale(kind, params, r);
  rep.transform_value = transform(kind, params, r, lambda0).value;
  for (double s : centers) {
    const std::complex<double> v = rep.transform_value * phi(params, lambda0, s);
    rep.translated.push_back({s, v, std::abs(v) / rep.scale});
  }

  switch (kind) {
    case DistKind::Ball:
      rep.center_value = ball_transform_quadrature(params, r, lambda0, 1e-11).value;
      break;
    case DistKind::Sphere:
      rep.center_value = sphere_area(params, r) * phi_ode_oracle(params, lambda0, r);
      break;
    case DistKind::MeanValue:
      rep.center_value = phi_ode_oracle(params, lambda0, r) - 1.0;
      break;
  }
  rep.center_residual = std::abs(rep.center_value) / rep.scale;
  rep.passed = rep.center_residual <= tol;
  for (const auto& t : rep.translated) rep.passed = rep.passed && t.relative <= tol;
  return rep;
}

namespace {

Scenario run_pair(const SpaceParams& params, DistKind kind, double r1, double r2,
                  double lambda_max, double delta, const SpectralZeroOptions& options) {
  Scenario sc{params, kind, r1, r2, lambda_max, delta, {}, {}};
  sc.verdict = common_zero(params, r1, r2, kind, lambda_max, delta, options);
  if (sc.verdict.admissible == Admissibility::Inadmissible && sc.verdict.witness) {
    const auto centers = default_centers();
    sc.evidence.push_back(verify_annihilation(params, kind, *sc.verdict.witness, r1, centers));
    if (r2 != r1) {
      sc.evidence.push_back(verify_annihilation(params, kind, *sc.verdict.witness, r2, centers));
    }
  }
  return sc;
}

}  // namespace

Scenario check_pair(const SpaceParams& params, DistKind kind, double r1, double r2,
                    double lambda_max, double delta, const SpectralZeroOptions& options) {
  return run_pair(params, kind, r1, r2, lambda_max, delta, options);
}

Scenario harmonicity_scenario(const SpaceParams& params, double r1, double r2, double lambda_max,
                              double delta, const SpectralZeroOptions& options) {
  SpectralZeroOptions opt = options;
  opt.strip_height = std::max(opt.strip_height, params.rho() + 2.0);
  return run_pair(params, DistKind::MeanValue, r1, r2, lambda_max, delta, opt);
}

InadmissiblePair generate_inadmissible_pair(const SpaceParams& params, DistKind kind,
                                            double lambda0, double r_max,
                                            const ZeroOptions& options) {
  const auto zeros = radial_zeros(params, kind, lambda0, r_max, options);
  if (zeros.size() < 2) {
    std::ostringstream os;
    os << "the radial function at lambda0 = " << lambda0 << " has " << zeros.size()
       << " zero(s) in (0, " << r_max << "], need two";
    throw Error(ErrorKind::NotEnoughZeros, os.str());
  }
  InadmissiblePair pair;
  pair.lambda0 = lambda0;
  pair.r1 = zeros[0].location;
  pair.r2 = zeros[1].location;
  pair.residual_1 = zeros[0].residual;
  pair.residual_2 = zeros[1].residual;
  pair.transform_residual_1 = std::abs(transform(kind, params, pair.r1, lambda0).value);
  pair.transform_residual_2 = std::abs(transform(kind, params, pair.r2, lambda0).value);
  pair.tol = options.tol;
  pair.certified = pair.residual_1 <= pair.tol && pair.residual_2 <= pair.tol;
  return pair;
}

}  // namespace drharm
