#include "drharm/hypergeom.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "drharm/errors.hpp"

namespace drharm {
namespace {

namespace mp = boost::multiprecision;
using Float50 = mp::number<mp::cpp_bin_float<50>, mp::et_off>;
using Float100 = mp::number<mp::cpp_bin_float<100>, mp::et_off>;
using Float200 = mp::number<mp::cpp_bin_float<200>, mp::et_off>;

template <class R>
struct Cx {
  R re{};
  R im{};
};

template <class R>
Cx<R> operator+(const Cx<R>& x, const Cx<R>& y) {
  return {x.re + y.re, x.im + y.im};
}

template <class R>
Cx<R> operator*(const Cx<R>& x, const Cx<R>& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

template <class R>
Cx<R> operator*(const Cx<R>& x, const R& s) {
  return {x.re * s, x.im * s};
}

template <class R>
double magnitude(const Cx<R>& x) {
  return std::hypot(static_cast<double>(x.re), static_cast<double>(x.im));
}

// Truncated polynomial in the lambda offset: sum_j c[j] delta^j, j <= order.
template <class R>
struct LJet {
  std::array<Cx<R>, kMaxLambdaOrder + 1> c{};
  int order = 0;

  template <class S>
  static LJet from(const LJet<S>& other) {
    LJet out;
    out.order = other.order;
    for (int j = 0; j <= other.order; ++j) {
      out.c[j] = {R(static_cast<double>(other.c[j].re)),
                  R(static_cast<double>(other.c[j].im))};
    }
    return out;
  }

  double norm() const {
    double m = 0.0;
    for (int j = 0; j <= order; ++j) m = std::max(m, magnitude(c[j]));
    return m;
  }
};

template <class R>
LJet<R> operator*(const LJet<R>& x, const LJet<R>& y) {
  LJet<R> out;
  out.order = x.order;
  for (int i = 0; i <= x.order; ++i) {
    for (int j = 0; i + j <= x.order; ++j) out.c[i + j] = out.c[i + j] + x.c[i] * y.c[j];
  }
  return out;
}

template <class R>
LJet<R> scaled(LJet<R> x, const R& s) {
  for (int j = 0; j <= x.order; ++j) x.c[j] = x.c[j] * s;
  return x;
}

template <class R>
LJet<R> shifted(LJet<R> x, const R& k) {
  x.c[0].re += k;
  return x;
}

using DJet = LJet<double>;

DJet constant_jet(std::complex<double> v, std::complex<double> slope, int order) {
  DJet j;
  j.order = order;
  j.c[0] = {v.real(), v.imag()};
  if (order >= 1) j.c[1] = {slope.real(), slope.imag()};
  return j;
}

std::complex<double> to_std(const Cx<double>& x) { return {x.re, x.im}; }

// exp of a jet whose nonconstant part is linear: exp(c0 + c1 delta).
DJet exp_linear(const DJet& x) {
  DJet out;
  out.order = x.order;
  const std::complex<double> base = std::exp(to_std(x.c[0]));
  const std::complex<double> slope = to_std(x.c[1]);
  std::complex<double> coef = base;
  for (int j = 0; j <= x.order; ++j) {
    out.c[j] = {coef.real(), coef.imag()};
    coef *= slope / static_cast<double>(j + 1);
  }
  return out;
}

struct SeriesResult {
  DJet sum;
  long terms = 0;
  double est_error = 0.0;
  int digits = 16;
};

// Neumaier compensated accumulator per jet component.
struct CompensatedJet {
  DJet sum;
  DJet comp;

  void add(const DJet& term) {
    for (int j = 0; j <= term.order; ++j) {
      accumulate(sum.c[j].re, comp.c[j].re, term.c[j].re);
      accumulate(sum.c[j].im, comp.c[j].im, term.c[j].im);
    }
  }

  DJet value() const {
    DJet out = sum;
    for (int j = 0; j <= sum.order; ++j) {
      out.c[j].re += comp.c[j].re;
      out.c[j].im += comp.c[j].im;
    }
    return out;
  }

  static void accumulate(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }
};

// Series problem: sum_k T_k with T_0 = 1 and
//   T_{k+1} = T_k (A + k)(B + k) x / ((c + k)(k + 1)).
struct SeriesProblem {
  DJet a;
  DJet b;
  double c = 1.0;
  double x = 0.0;
  int order = 0;
};

struct Survey {
  double log_peak = 0.0;  // log of the largest term norm
  long head_end = 0;      // first index that may be summed in double
  bool terminates = false;
};

// Walks the term norms with rescaling so that huge intermediate terms never
// overflow. Stops once the terms are below one and shrinking.
Survey survey_terms(const SeriesProblem& pr, long cap) {
  Survey s;
  DJet term;
  term.order = pr.order;
  term.c[0] = {1.0, 0.0};
  double log_scale = 0.0;
  double prev_ratio = std::numeric_limits<double>::infinity();
  for (long k = 0; k < cap; ++k) {
    const double kd = static_cast<double>(k);
    const DJet factor =
        scaled(shifted(pr.a, kd) * shifted(pr.b, kd), pr.x / ((pr.c + kd) * (kd + 1.0)));
    term = term * factor;
    const double ratio = term.norm();
    if (ratio == 0.0) {
      s.terminates = true;
      s.head_end = k + 1;
      return s;
    }
    term = scaled(term, 1.0 / ratio);
    log_scale += std::log(ratio);
    s.log_peak = std::max(s.log_peak, log_scale);
    if (ratio < 1.0 && log_scale < 0.0 && (ratio <= prev_ratio || ratio <= std::abs(pr.x)) &&
        k >= 2) {
      s.head_end = k + 1;
      return s;
    }
    prev_ratio = ratio;
  }
  s.head_end = cap;
  return s;
}

int digits_needed(const Survey& s, double tol) {
  return static_cast<int>(std::ceil(s.log_peak / std::log(10.0) - std::log10(tol) + 2.0));
}

// Sums terms 0..head_end-1 in the arithmetic R. Returns the sum, the last
// term reached (T_{head_end}) and the sum of term norms for the rounding
// estimate.
template <class R>
struct HeadResult {
  DJet sum;
  DJet next_term;
  double norm_sum = 0.0;
  double weighted_norm_sum = 0.0;
};

template <class R>
HeadResult<R> sum_head(const SeriesProblem& pr, long head_end) {
  const LJet<R> a = LJet<R>::from(pr.a);
  const LJet<R> b = LJet<R>::from(pr.b);
  const R x(pr.x);
  const R c(pr.c);
  LJet<R> term;
  term.order = pr.order;
  term.c[0] = {R(1), R(0)};
  LJet<R> sum = term;
  HeadResult<R> out;
  out.norm_sum = 1.0;
  for (long k = 0; k < head_end; ++k) {
    const R kr(static_cast<double>(k));
    const LJet<R> factor = scaled(shifted(a, kr) * shifted(b, kr), R(x / ((c + kr) * (kr + 1))));
    term = term * factor;
    if (k + 1 < head_end) {
      for (int j = 0; j <= pr.order; ++j) sum.c[j] = sum.c[j] + term.c[j];
      const double tn = term.norm();
      out.norm_sum += tn;
      out.weighted_norm_sum += tn * static_cast<double>(k + 1);
    }
  }
  out.sum = DJet::from(sum);
  out.next_term = DJet::from(term);
  return out;
}

constexpr double kUnit = std::numeric_limits<double>::epsilon() / 2;

SeriesResult sum_series(const SeriesProblem& pr, const SeriesOptions& opt) {
  const double ax = std::abs(pr.x);
  const Survey survey = survey_terms(pr, opt.term_cap);
  const int digits = digits_needed(survey, opt.tol);

  SeriesResult res;
  CompensatedJet acc;
  acc.sum.order = acc.comp.order = pr.order;
  DJet term;
  term.order = pr.order;
  long k0 = 0;
  double rounding = 0.0;

  if (digits <= 16) {
    term.c[0] = {1.0, 0.0};
    acc.add(term);
    res.digits = 16;
    rounding += 4 * kUnit;
  } else {
    auto take = [&](auto head, double unit) {
      acc.add(head.sum);
      term = head.next_term;
      k0 = survey.head_end;
      rounding += unit * (4 * head.norm_sum + 3 * head.weighted_norm_sum) +
                  4 * kUnit * head.sum.norm();
    };
    if (digits <= 48) {
      take(sum_head<Float50>(pr, survey.head_end), 0.5e-49);
      res.digits = 50;
    } else if (digits <= 98) {
      take(sum_head<Float100>(pr, survey.head_end), 0.5e-99);
      res.digits = 100;
    } else if (digits <= 198) {
      take(sum_head<Float200>(pr, survey.head_end), 0.5e-199);
      res.digits = 200;
    } else {
      std::ostringstream os;
      os << "hypergeometric series needs about " << digits
         << " significant digits, beyond the supported 200";
      throw NonConvergenceError(os.str(), {0.0, 0.0},
                                std::numeric_limits<double>::infinity());
    }
    // The head may already contain every nonzero term.
    if (survey.terminates) {
      res.sum = acc.value();
      res.terms = survey.head_end;
      res.est_error = rounding;
      return res;
    }
    acc.add(term);
    rounding += 4 * kUnit * term.norm();
  }

  double prev_ratio = std::numeric_limits<double>::infinity();
  double prev_norm = term.norm();
  for (long k = k0;; ++k) {
    if (k >= opt.term_cap) {
      const DJet v = acc.value();
      std::ostringstream os;
      os << "hypergeometric series reached the term cap " << opt.term_cap
         << " (x = " << pr.x << ")";
      throw NonConvergenceError(os.str(), to_std(v.c[0]), std::numeric_limits<double>::infinity());
    }
    const double kd = static_cast<double>(k);
    const DJet factor =
        scaled(shifted(pr.a, kd) * shifted(pr.b, kd), pr.x / ((pr.c + kd) * (kd + 1.0)));
    term = term * factor;
    const double tn = term.norm();
    acc.add(term);
    rounding += (4.0 + 3.0 * static_cast<double>(k + 1 - k0)) * kUnit * tn;
    if (tn == 0.0) {
      res.terms = k + 2;
      break;
    }
    const double ratio = prev_norm > 0.0 ? tn / prev_norm : std::numeric_limits<double>::infinity();
    prev_norm = tn;
    // Beyond the peak the ratio is either still falling or already below |x|;
    // in both cases max(ratio, |x|) bounds every later ratio.
    if (ratio <= prev_ratio || ratio <= ax) {
      double q = std::max(ratio, ax);
      if (pr.order > 0) q *= 1.0 + 4.0 * pr.order / (kd + 1.0);
      if (q < 1.0) {
        const double tail = tn * q / (1.0 - q);
        const double scale = std::max(1.0, acc.value().norm());
        if (tail <= opt.tol * scale) {
          res.terms = k + 2;
          res.est_error = tail + rounding;
          res.sum = acc.value();
          return res;
        }
      }
    }
    prev_ratio = ratio;
  }
  res.sum = acc.value();
  res.est_error = rounding;
  return res;
}

void validate(double c, double z, const SeriesOptions& opt) {
  if (!(c > 0.0) || !std::isfinite(c)) throw_domain("hypergeometric parameter c must be positive");
  if (!(z <= 0.0) || !std::isfinite(z)) {
    throw_domain("hypergeometric argument z must be a finite nonpositive real");
  }
  if (!(opt.tol >= 1e-14) || !(opt.tol < 1.0)) throw_domain("series tolerance must lie in [1e-14, 1)");
  if (opt.term_cap < 1) throw_domain("term cap must be positive");
}

double pfaff_argument(double z) {
  const double w = z / (z - 1.0);
  if (!(w < 1.0)) throw_domain("Pfaff argument z/(z-1) rounds to 1; |z| is too large");
  return w;
}

// Evaluates prefactor * series for a (possibly differentiated) Pfaff form:
// (1 - z)^(-A) F(A, c - B; c; w).
SeriesResult pfaff_series(const DJet& a, const DJet& c_minus_b, double c, double z,
                          const SeriesOptions& opt) {
  const double w = pfaff_argument(z);
  SeriesProblem pr{a, c_minus_b, c, w, a.order};
  SeriesResult inner = sum_series(pr, opt);
  // (1 - z)^(-A) = exp(-A log(1 - z)) with real log.
  const double log1mz = std::log1p(-z);
  DJet expo = scaled(a, -log1mz);
  const DJet pre = exp_linear(expo);
  SeriesResult out = inner;
  out.sum = pre * inner.sum;
  out.est_error = pre.norm() * inner.est_error * (1.0 + pr.order);
  return out;
}

}  // namespace

EvalReport f21_neg(const HypArgs& args, const SeriesOptions& options) {
  validate(args.c, args.z, options);
  const DJet a = constant_jet(args.a, 0.0, 0);
  const DJet cb = constant_jet(args.c - args.b, 0.0, 0);
  const SeriesResult r = pfaff_series(a, cb, args.c, args.z, options);
  return {to_std(r.sum.c[0]), r.terms, r.est_error, r.digits};
}

LambdaDerivatives f21_conjpair_lambda_derivatives(double rho, std::complex<double> lambda,
                                                  double c, double z, int order,
                                                  const SeriesOptions& options) {
  validate(c, z, options);
  if (order < 0 || order > kMaxLambdaOrder) {
    throw_domain("lambda derivative order must lie in [0, 4]");
  }
  const std::complex<double> i(0.0, 1.0);
  // A = rho - i(lambda + delta), B = rho + i(lambda + delta).
  const DJet a = constant_jet(rho - i * lambda, -i, order);
  SeriesResult r;
  if (z >= -0.5) {
    const DJet b = constant_jet(rho + i * lambda, i, order);
    r = sum_series(SeriesProblem{a, b, c, z, order}, options);
  } else {
    const DJet cb = constant_jet(c - rho - i * lambda, -i, order);
    r = pfaff_series(a, cb, c, z, options);
  }
  LambdaDerivatives out;
  out.derivatives.resize(order + 1);
  double factorial = 1.0;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) factorial *= j;
    std::complex<double> d = to_std(r.sum.c[j]) * factorial;
    if (lambda.imag() == 0.0) d = {d.real(), 0.0};
    out.derivatives[j] = d;
  }
  out.terms_used = r.terms;
  out.est_error = r.est_error * factorial;
  out.precision_digits = r.digits;
  return out;
}

EvalReport f21_neg_conjpair(double rho, std::complex<double> lambda, double c, double z,
                            const SeriesOptions& options) {
  const LambdaDerivatives d = f21_conjpair_lambda_derivatives(rho, lambda, c, z, 0, options);
  return {d.derivatives[0], d.terms_used, d.est_error, d.precision_digits};
}

}  // namespace drharm
