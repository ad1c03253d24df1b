#include "drharm/abel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "drharm/errors.hpp"
#include "drharm/spherical.hpp"

namespace drharm {
namespace {

void check_terms(const std::vector<SpectralTerm>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].k < 0 || terms[i].k > kMaxSumDerivative) {
      throw_domain("superposition terms need 0 <= k <= 2");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (terms[i].lambda == terms[j].lambda && terms[i].k == terms[j].k) {
        throw_domain("superposition terms must have distinct (lambda, k)");
      }
    }
  }
}

}  // namespace

CosineSum::CosineSum(std::vector<SpectralTerm> terms) : terms_(std::move(terms)) {
  check_terms(terms_);
}

std::complex<double> CosineSum::operator()(double t) const {
  std::complex<double> s = 0.0;
  for (const auto& term : terms_) s += term.coef * psi({term.lambda, term.k}, t);
  return s;
}

double CosineSum::envelope(double t) const {
  double s = 0.0;
  for (const auto& term : terms_) {
    s += std::abs(term.coef) * std::cosh(std::abs(term.lambda.imag()) * t) *
         std::max(1.0, std::pow(std::abs(t), term.k));
  }
  return s;
}

SphericalSum::SphericalSum(SpaceParams params, std::vector<SpectralTerm> terms)
    : params_(params), terms_(std::move(terms)) {
  check_terms(terms_);
}

std::complex<double> SphericalSum::operator()(double r) const {
  std::complex<double> s = 0.0;
  for (const auto& term : terms_) s += term.coef * phi_dk(params_, {term.lambda, term.k}, r);
  return s;
}

TaylorJet::TaylorJet(double center, std::vector<std::complex<double>> coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw_domain("a jet needs at least one coefficient");
}

TaylorJet TaylorJet::constant(double center, std::complex<double> value, int order) {
  std::vector<std::complex<double>> c(order + 1, 0.0);
  c[0] = value;
  return TaylorJet(center, std::move(c));
}

TaylorJet TaylorJet::power(double center, double shift, double exponent, int order) {
  const double base = center + shift;
  if (!(base > 0.0)) throw_domain("power jet needs a positive base");
  // (base + h)^a = base^a sum_j binom(a, j) (h / base)^j
  std::vector<std::complex<double>> c(order + 1);
  double coef = std::pow(base, exponent);
  for (int j = 0; j <= order; ++j) {
    c[j] = coef;
    coef *= (exponent - j) / ((j + 1) * base);
  }
  return TaylorJet(center, std::move(c));
}

TaylorJet TaylorJet::derivative() const {
  if (order() == 0) throw Error(ErrorKind::JetDepth, "cannot differentiate an order-0 jet");
  std::vector<std::complex<double>> c(coeffs_.size() - 1);
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = static_cast<double>(j + 1) * coeffs_[j + 1];
  return TaylorJet(center_, std::move(c));
}

TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<std::complex<double>> c(order + 1, 0.0);
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TaylorJet(a.center_, std::move(c));
}

TaylorJet operator+(const TaylorJet& a, const TaylorJet& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<std::complex<double>> c(order + 1);
  for (int i = 0; i <= order; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return TaylorJet(a.center_, std::move(c));
}

TaylorJet operator*(std::complex<double> s, const TaylorJet& a) {
  std::vector<std::complex<double>> c(a.coeffs_);
  for (auto& x : c) x *= s;
  return TaylorJet(a.center_, std::move(c));
}

SphericalSum dual_abel(const CosineSum& sum, const SpaceParams& params) {
  return SphericalSum(params, sum.terms());
}

namespace {

// Lambda-jet (Taylor coefficients in delta, order k) of
// prod_{j<m} ((rho + j)^2 + (lambda + delta)^2).
std::vector<std::complex<double>> pochhammer_pair_jet(double rho, std::complex<double> lambda,
                                                      int m, int k) {
  std::vector<std::complex<double>> p(k + 1, 0.0);
  p[0] = 1.0;
  for (int j = 0; j < m; ++j) {
    const std::complex<double> f[3] = {(rho + j) * (rho + j) + lambda * lambda, 2.0 * lambda, 1.0};
    std::vector<std::complex<double>> next(k + 1, 0.0);
    for (int a = 0; a <= k; ++a) {
      for (int b = 0; b <= 2 && a + b <= k; ++b) next[a + b] += p[a] * f[b];
    }
    p = std::move(next);
  }
  return p;
}

}  // namespace

TaylorJet spherical_sum_jet(const SphericalSum& sum, double t, int order,
                            const SeriesOptions& options) {
  if (!(t >= 1.0)) throw_domain("jet centre must satisfy t = cosh r >= 1");
  const double rho = sum.params().rho();
  const double c = sum.params().half_dimension();
  const double z = (1.0 - t) / 2.0;
  std::vector<std::complex<double>> coeffs(order + 1, 0.0);
  for (const SpectralTerm& term : sum.terms()) {
    const int k = term.k;
    double poch_c = 1.0;   // (c)_m
    double factorial = 1.0;  // m!
    double half_power = 1.0;  // (-1/2)^m
    for (int m = 0; m <= order; ++m) {
      if (m > 0) {
        poch_c *= c + m - 1;
        factorial *= m;
        half_power *= -0.5;
      }
      const auto poly = pochhammer_pair_jet(rho, term.lambda, m, k);
      const LambdaDerivatives f =
          f21_conjpair_lambda_derivatives(rho + m, term.lambda, c + m, z, k, options);
      // k-th lambda derivative of poly * F via Leibniz on Taylor coefficients.
      std::complex<double> taylor_k = 0.0;
      double fact_i = 1.0;
      for (int i = 0; i <= k; ++i) {
        if (i > 0) fact_i *= i;
        taylor_k += f.derivatives[i] / fact_i * poly[k - i];
      }
      double fact_k = 1.0;
      for (int i = 2; i <= k; ++i) fact_k *= i;
      coeffs[m] += term.coef * half_power / (poch_c * factorial) * taylor_k * fact_k;
    }
  }
  return TaylorJet(t, std::move(coeffs));
}

namespace {

struct EvenParts {
  int k;
  int l;
};

EvenParts even_parts(const SpaceParams& params) {
  if (params.q() % 2 != 0) {
    throw Error(ErrorKind::UnsupportedParameters,
                "odd q needs the fractional operator R_{1/2}^(alpha,beta); only even p and "
                "even q are supported");
  }
  if (params.p() % 2 != 0) {
    throw Error(ErrorKind::UnsupportedParameters,
                "the explicit inverse needs p = 2k even");
  }
  return {params.p() / 2, params.q() / 2};
}

}  // namespace

std::complex<double> inverse_dual_abel(const SpaceParams& params, const RadialJetFunction& u,
                                       double t_eval, double constant) {
  const auto [k, l] = even_parts(params);
  if (!(t_eval > 1.0) || !std::isfinite(t_eval)) throw_domain("t_eval must be > 1");
  const int depth = k + l + 2;
  const TaylorJet uj = u(t_eval, depth);
  if (uj.order() < depth) {
    std::ostringstream os;
    os << "radial function supplied a jet of order " << uj.order() << ", need " << depth;
    throw Error(ErrorKind::JetDepth, os.str());
  }
  TaylorJet g = TaylorJet::power(t_eval, 1.0, l - 0.5, depth) *
                TaylorJet::power(t_eval, -1.0, l + k - 0.5, depth) * uj;
  for (int i = 0; i < l; ++i) g = g.derivative();
  for (int i = 0; i < k; ++i) g = (TaylorJet::power(t_eval, 1.0, 0.5, g.order()) * g).derivative();
  return constant * std::sqrt(t_eval + 1.0) * std::sqrt(t_eval - 1.0) * g.value();
}

std::complex<double> inverse_dual_abel(const SpaceParams& params, const RadialJetFunction& u,
                                       double t_eval) {
  return inverse_dual_abel(params, u, t_eval, calibrate_constant(params));
}

Calibration calibrate(const SpaceParams& params) {
  even_parts(params);
  const RadialJetFunction one = [](double t, int order) { return TaylorJet::constant(t, 1.0, order); };
  const double rho = params.rho();
  auto at = [&](double r) {
    return std::cosh(rho * r) / inverse_dual_abel(params, one, std::cosh(r), 1.0).real();
  };
  Calibration cal;
  cal.constant = at(1.0);
  cal.cross_check = at(2.0);
  cal.relative_difference = std::abs(cal.constant - cal.cross_check) / std::abs(cal.constant);
  if (!(cal.relative_difference <= 1e-8)) {
    std::ostringstream os;
    os << "calibration of C_{" << params.p() << "," << params.q() << "} disagrees: " << cal.constant
       << " at r = 1 vs " << cal.cross_check << " at r = 2";
    throw Error(ErrorKind::CalibrationInconsistent, os.str());
  }
  return cal;
}

double calibrate_constant(const SpaceParams& params) { return calibrate(params).constant; }

double roundtrip(const CosineSum& sum, const SpaceParams& params,
                 std::span<const double> sample_points) {
  const SphericalSum image = dual_abel(sum, params);
  SeriesOptions options;
  options.tol = 1e-13;
  const RadialJetFunction u = [&](double t, int order) {
    return spherical_sum_jet(image, t, order, options);
  };
  const double constant = calibrate_constant(params);
  double worst = 0.0;
  for (double r : sample_points) {
    if (!(r > 0.0)) throw_domain("roundtrip sample points must be positive");
    const std::complex<double> back = inverse_dual_abel(params, u, std::cosh(r), constant);
    const double scale = std::max(sum.envelope(r), 1e-300);
    worst = std::max(worst, std::abs(back - sum(r)) / scale);
  }
  return worst;
}

}  // namespace drharm
