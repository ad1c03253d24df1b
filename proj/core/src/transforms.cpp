#include "drharm/transforms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "drharm/errors.hpp"
#include "drharm/spherical.hpp"
#include "quadrature.hpp"

namespace drharm {

std::string_view to_string(DistKind kind) {
  switch (kind) {
    case DistKind::Ball: return "ball";
    case DistKind::Sphere: return "sphere";
    case DistKind::MeanValue: return "mean";
  }
  return "unknown";
}

DistKind parse_dist_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "ball") return DistKind::Ball;
  if (lower == "sphere") return DistKind::Sphere;
  if (lower == "mean" || lower == "meanvalue" || lower == "mean-value") return DistKind::MeanValue;
  throw_domain("unknown distribution kind '" + std::string(text) + "'");
}

namespace {

void check_radius(double r) {
  if (!(r > 0.0) || !(r <= kMaxRadius)) {
    throw_domain("transform radius must lie in (0, 10], got " + std::to_string(r));
  }
}

}  // namespace

TransformValue sphere_transform(const SpaceParams& params, double r, std::complex<double> lambda,
                                const SeriesOptions& options) {
  check_radius(r);
  const double area = sphere_area(params, r);
  const EvalReport e = phi_report(params, lambda, r, options);
  return {area * e.value, TransformMethod::ClosedForm, area * e.est_error};
}

TransformValue ball_transform(const SpaceParams& params, double r, std::complex<double> lambda,
                              const SeriesOptions& options) {
  check_radius(r);
  const int n = params.dimension();
  const double constant =
      std::pow(2.0, n) * std::pow(std::numbers::pi, n / 2.0) / gamma_half_integer(n + 2);
  const double factor = constant * std::pow(std::sinh(r / 2), n) *
                        std::pow(std::cosh(r / 2), params.q() + 1);
  const EvalReport e = phi_report(params.ball_shift(), lambda, r, options);
  return {factor * e.value, TransformMethod::ClosedForm, factor * e.est_error};
}

TransformValue ball_transform_quadrature(const SpaceParams& params, double r,
                                         std::complex<double> lambda, double rel_tol) {
  check_radius(r);
  SeriesOptions inner;
  inner.tol = 1e-13;
  auto integrand = [&](double s) -> std::complex<double> {
    if (s <= 0.0) return params.dimension() == 1 ? 2.0 : 0.0;
    return sphere_area(params, s) * phi(params, lambda, s, inner);
  };
  const auto result = detail::integrate(integrand, 0.0, r, rel_tol);
  return {result.value, TransformMethod::Quadrature, result.error};
}

TransformValue mean_value_transform(const SpaceParams& params, double r,
                                    std::complex<double> lambda, const SeriesOptions& options) {
  check_radius(r);
  const EvalReport e = phi_report(params, lambda, r, options);
  return {e.value - 1.0, TransformMethod::ClosedForm, e.est_error};
}

TransformValue transform(DistKind kind, const SpaceParams& params, double r,
                         std::complex<double> lambda, const SeriesOptions& options) {
  switch (kind) {
    case DistKind::Ball: return ball_transform(params, r, lambda, options);
    case DistKind::Sphere: return sphere_transform(params, r, lambda, options);
    case DistKind::MeanValue: return mean_value_transform(params, r, lambda, options);
  }
  throw_domain("unknown distribution kind");
}

double distribution_scale(DistKind kind, const SpaceParams& params, double r) {
  switch (kind) {
    case DistKind::Ball: return ball_volume(params, r);
    case DistKind::Sphere: return sphere_area(params, r);
    case DistKind::MeanValue: return 1.0;
  }
  return 1.0;
}

SpectralFunction convolve_spectral(SpectralFunction f, SpectralFunction g) {
  return [f = std::move(f), g = std::move(g)](std::complex<double> lambda) {
    return f(lambda) * g(lambda);
  };
}

SpectralFunction delta_transform() {
  return [](std::complex<double>) { return std::complex<double>(1.0, 0.0); };
}

PaleyWienerReport paley_wiener_check(const SpectralFunction& f, double R, int m,
                                     const SpectralGrid& grid, int threads) {
  if (grid.re_points < 3 || grid.im_points < 3) throw_domain("Paley-Wiener grid needs >= 3 points per axis");
  if (grid.re_max > 40.0 || grid.im_max > 10.0) throw_domain("Paley-Wiener grid exceeds |Re| <= 40, |Im| <= 10");
  const int nr = grid.re_points;
  const int ni = grid.im_points;
  std::vector<double> normalized(static_cast<std::size_t>(nr) * ni);

  auto node = [&](int i, int j) {
    const double re = -grid.re_max + 2.0 * grid.re_max * i / (nr - 1);
    const double im = -grid.im_max + 2.0 * grid.im_max * j / (ni - 1);
    return std::complex<double>(re, im);
  };
  auto fill_rows = [&](int first, int stride) {
    for (int j = first; j < ni; j += stride) {
      for (int i = 0; i < nr; ++i) {
        const std::complex<double> lambda = node(i, j);
        const double weight =
            std::pow(1.0 + std::abs(lambda), m) * std::exp(R * std::abs(lambda.imag()));
        normalized[static_cast<std::size_t>(j) * nr + i] = std::abs(f(lambda)) / weight;
      }
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    fill_rows(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(fill_rows, t, threads);
    for (auto& th : pool) th.join();
  }

  PaleyWienerReport rep;
  bool finite = true;
  for (int j = 0; j < ni; ++j) {
    for (int i = 0; i < nr; ++i) {
      const double v = normalized[static_cast<std::size_t>(j) * nr + i];
      if (!std::isfinite(v)) finite = false;
      const bool edge = i == 0 || i == nr - 1 || j == 0 || j == ni - 1;
      double& slot = edge ? rep.boundary_max : rep.interior_max;
      slot = std::max(slot, std::isfinite(v) ? v : std::numeric_limits<double>::infinity());
    }
  }
  rep.c_star = std::max(rep.boundary_max, rep.interior_max);
  rep.trend_limit = std::exp(0.1 * R);
  rep.trend_ratio = rep.interior_max > 0.0 ? rep.boundary_max / rep.interior_max
                                           : std::numeric_limits<double>::infinity();
  rep.passed = finite && std::isfinite(rep.c_star) && rep.trend_ratio <= rep.trend_limit;
  return rep;
}

}  // namespace drharm
