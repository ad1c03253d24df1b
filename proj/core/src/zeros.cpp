#include "drharm/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "drharm/errors.hpp"
#include "drharm/spherical.hpp"

namespace drharm {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Bracketed {
  double x;
  double fx;
};

// Bisection down to a narrow bracket, then Illinois-safeguarded secant steps.
Bracketed refine_bracket(const RealFunction& f, double a, double fa, double b, double fb,
                         double tol) {
  const double narrow = 1e-3 * (b - a);
  while (b - a > narrow) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return {m, 0.0};
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  Bracketed best = std::abs(fa) < std::abs(fb) ? Bracketed{a, fa} : Bracketed{b, fb};
  int side = 0;
  for (int it = 0; it < 200; ++it) {
    if (b - a <= 4 * kEps * std::max(std::abs(a), std::abs(b)) + 1e-300) break;
    double x = (a * fb - b * fa) / (fb - fa);
    if (!(x > a && x < b)) x = 0.5 * (a + b);
    const double fx = f(x);
    if (std::abs(fx) < std::abs(best.fx)) best = {x, fx};
    if (fx == 0.0 || std::abs(fx) <= 1e-6 * tol) break;
    if ((fx < 0.0) == (fa < 0.0)) {
      a = x;
      fa = fx;
      if (side == -1) fb *= 0.5;
      side = -1;
    } else {
      b = x;
      fb = fx;
      if (side == 1) fa *= 0.5;
      side = 1;
    }
  }
  return best;
}

double central_difference(const RealFunction& f, double x) {
  const double h = 1e-6 * std::max(1.0, std::abs(x));
  return (f(x + h) - f(x - h)) / (2 * h);
}

// Locates the extremum of f between a and b (a local minimum of |f|).
double locate_extremum(const RealFunction& f, const RealFunction& df, double a, double b,
                       double tol) {
  RealFunction d = df ? df : RealFunction([&f](double x) { return central_difference(f, x); });
  const double da = d(a);
  const double db = d(b);
  if (da == 0.0) return a;
  if (db == 0.0) return b;
  if ((da < 0.0) != (db < 0.0)) return refine_bracket(d, a, da, b, db, tol * 1e-3).x;
  // Golden section on |f|.
  const double g = (std::sqrt(5.0) - 1) / 2;
  double x1 = b - g * (b - a);
  double x2 = a + g * (b - a);
  double f1 = std::abs(f(x1));
  double f2 = std::abs(f(x2));
  for (int it = 0; it < 100 && b - a > 1e-12 * std::max(1.0, std::abs(a)); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = std::abs(f(x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = std::abs(f(x2));
    }
  }
  return 0.5 * (a + b);
}

void validate_scan(double window, const ZeroOptions& opt) {
  if (!(window > 0.0) || !std::isfinite(window)) throw_domain("zero window must be positive");
  if (!(opt.scan_step > 0.0)) throw_domain("scan step must be positive");
  if (!(opt.tol > 0.0)) throw_domain("zero tolerance must be positive");
}

}  // namespace

ZeroSet real_zeros(const RealFunction& f, double window, const ZeroOptions& opt,
                   const RealFunction& derivative) {
  validate_scan(window, opt);
  std::vector<double> xs;
  xs.push_back(std::min(1e-3 * opt.scan_step, 1e-3 * window));
  const long steps = static_cast<long>(std::ceil(window / opt.scan_step - 1e-9));
  for (long i = 1; i < steps; ++i) xs.push_back(static_cast<double>(i) * opt.scan_step);
  xs.push_back(window);
  std::vector<double> fs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) fs[i] = f(xs[i]);

  std::vector<RealZero> found;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (fs[i] == 0.0) {
      found.push_back({xs[i], 0.0, 1});
      continue;
    }
    if (fs[i + 1] != 0.0 && (fs[i] < 0.0) != (fs[i + 1] < 0.0)) {
      const Bracketed z = refine_bracket(f, xs[i], fs[i], xs[i + 1], fs[i + 1], opt.tol);
      found.push_back({z.x, std::abs(z.fx), 1});
    }
  }
  if (fs.back() == 0.0) found.push_back({xs.back(), 0.0, 1});

  ZeroSet out;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const double a = fs[i - 1], m = fs[i], b = fs[i + 1];
    if (a == 0.0 || m == 0.0 || b == 0.0) continue;
    const bool same_sign = (a < 0.0) == (m < 0.0) && (m < 0.0) == (b < 0.0);
    if (!same_sign || std::abs(m) > std::abs(a) || std::abs(m) > std::abs(b)) continue;
    const double x = locate_extremum(f, derivative, xs[i - 1], xs[i + 1], opt.tol);
    const double v = std::abs(f(x));
    if (v > opt.tol) continue;
    if (opt.accept_double_zeros) {
      found.push_back({x, v, 2});
    } else {
      out.tangent_warnings.push_back(x);
    }
  }

  std::sort(found.begin(), found.end(),
            [](const RealZero& l, const RealZero& r) { return l.location < r.location; });
  std::vector<RealZero> unique;
  for (const RealZero& z : found) {
    if (!unique.empty() &&
        std::abs(z.location - unique.back().location) <= 1e-12 * std::max(1.0, z.location)) {
      continue;
    }
    unique.push_back(z);
  }
  // Rounding can split a double zero into two sign changes a hair apart.
  std::vector<RealZero> merged;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    if (i + 1 < unique.size() && unique[i].multiplicity == 1 && unique[i + 1].multiplicity == 1) {
      const double a = unique[i].location;
      const double b = unique[i + 1].location;
      if (b - a < 0.5 * opt.scan_step && std::abs(f(0.5 * (a + b))) <= opt.tol) {
        const double x = locate_extremum(f, derivative, a, b, opt.tol);
        if (opt.accept_double_zeros) {
          merged.push_back({x, std::abs(f(x)), 2});
        } else {
          out.tangent_warnings.push_back(x);
          out.uncertified = true;
          out.note = "double zero";
        }
        ++i;
        continue;
      }
    }
    merged.push_back(unique[i]);
  }
  unique = std::move(merged);
  out.window = window;
  out.tol = opt.tol;
  for (const RealZero& z : unique) {
    if (z.residual > opt.tol) {
      out.tangent_warnings.push_back(z.location);
      out.uncertified = true;
      out.note = "a bracketed zero could not be polished below the tolerance";
      continue;
    }
    out.zeros.push_back(z.location);
    out.residuals.push_back(z.residual);
    out.multiplicities.push_back(z.multiplicity);
  }
  return out;
}

namespace {

struct ContourWalk {
  const ComplexFunction& f;
  double total = 0.0;
  double min_abs = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  bool unresolved = false;

  void note(std::complex<double> v) {
    const double a = std::abs(v);
    min_abs = std::min(min_abs, a);
    max_abs = std::max(max_abs, a);
  }

  void segment(std::complex<double> za, std::complex<double> fa, std::complex<double> zb,
               std::complex<double> fb, int depth) {
    const double d = std::arg(fb / fa);
    if (std::abs(d) < std::numbers::pi / 2 || !std::isfinite(d)) {
      if (!std::isfinite(d)) unresolved = true;
      total += d;
      return;
    }
    if (depth >= 24) {
      unresolved = true;
      total += d;
      return;
    }
    const std::complex<double> zm = 0.5 * (za + zb);
    const std::complex<double> fm = f(zm);
    note(fm);
    if (fm == 0.0) {
      unresolved = true;
      return;
    }
    segment(za, fa, zm, fm, depth + 1);
    segment(zm, fm, zb, fb, depth + 1);
  }
};

}  // namespace

int complex_zero_count(const ComplexFunction& f, const Rectangle& box, int samples_per_edge) {
  if (!(box.x1 > box.x0) || !(box.y1 > box.y0)) throw_domain("degenerate rectangle");
  if (samples_per_edge < 2) throw_domain("samples_per_edge must be >= 2");
  const std::complex<double> corners[5] = {
      {box.x0, box.y0}, {box.x1, box.y0}, {box.x1, box.y1}, {box.x0, box.y1}, {box.x0, box.y0}};
  ContourWalk walk{f};
  std::complex<double> z_prev = corners[0];
  const std::complex<double> f_first = f(z_prev);
  std::complex<double> f_prev = f_first;
  walk.note(f_prev);
  for (int e = 0; e < 4; ++e) {
    for (int s = 1; s <= samples_per_edge; ++s) {
      const double t = static_cast<double>(s) / samples_per_edge;
      const std::complex<double> z = (s == samples_per_edge) ? corners[e + 1]
                                                            : corners[e] + t * (corners[e + 1] - corners[e]);
      const std::complex<double> fz = (e == 3 && s == samples_per_edge) ? f_first : f(z);
      walk.note(fz);
      if (fz == 0.0 || f_prev == 0.0) {
        walk.unresolved = true;
      } else {
        walk.segment(z_prev, f_prev, z, fz, 0);
      }
      z_prev = z;
      f_prev = fz;
    }
  }
  const double winding = walk.total / (2 * std::numbers::pi);
  const double rounded = std::round(winding);
  if (walk.unresolved || walk.min_abs < 1e-9 * walk.max_abs || std::abs(winding - rounded) > 0.05) {
    std::ostringstream os;
    os << "contour [" << box.x0 << "," << box.x1 << "]x[" << box.y0 << "," << box.y1
       << "] passes too close to a zero (min |f| = " << walk.min_abs
       << ", max |f| = " << walk.max_abs << "); perturb the rectangle";
    throw Error(ErrorKind::ContourTooClose, os.str());
  }
  return static_cast<int>(rounded);
}

SpectralEquation::SpectralEquation(const SpaceParams& params, double r, DistKind kind,
                                   const SeriesOptions& options)
    : params_(params),
      eval_params_(kind == DistKind::Ball ? params.ball_shift() : params),
      r_(r),
      kind_(kind),
      options_(options) {
  if (!(r > 0.0) || !(r <= kMaxRadius)) throw_domain("spectral equation radius must lie in (0, 10]");
}

namespace {

double exceptional_radius(double rho) { return rho == 0.0 ? 1e-3 : 1e-4; }

}  // namespace

std::complex<double> SpectralEquation::near_exceptional(std::complex<double> lambda,
                                                        bool derivative) const {
  const double rho = params_.rho();
  const std::complex<double> lambda0(0.0, lambda.imag() >= 0.0 ? rho : -rho);
  const std::complex<double> h = lambda - lambda0;
  const LambdaDerivatives jets = f21_conjpair_lambda_derivatives(
      rho, lambda0, params_.half_dimension(), -std::pow(std::sinh(r_ / 2), 2), 4, options_);
  const auto& d = jets.derivatives;
  const double fact[5] = {1, 1, 2, 6, 24};
  if (rho == 0.0) {
    // (phi - 1) / lambda^2 with phi - 1 = sum_{j>=2} d_j h^j / j!
    std::complex<double> g = 0.0, dg = 0.0;
    for (int j = 2; j <= 4; ++j) g += d[j] * std::pow(h, j - 2) / fact[j];
    for (int j = 3; j <= 4; ++j) dg += d[j] * static_cast<double>(j - 2) * std::pow(h, j - 3) / fact[j];
    return derivative ? dg : g;
  }
  std::complex<double> num = 0.0, dnum = 0.0;
  for (int j = 1; j <= 4; ++j) num += d[j] * std::pow(h, j - 1) / fact[j];
  for (int j = 2; j <= 4; ++j) dnum += d[j] * static_cast<double>(j - 1) * std::pow(h, j - 2) / fact[j];
  const std::complex<double> den = h + 2.0 * lambda0;
  return derivative ? (dnum * den - num) / (den * den) : num / den;
}

std::complex<double> SpectralEquation::operator()(std::complex<double> lambda) const {
  if (kind_ != DistKind::MeanValue) return phi(eval_params_, lambda, r_, options_);
  const double rho = params_.rho();
  const std::complex<double> mu = lambda * lambda + rho * rho;
  const std::complex<double> lambda0(0.0, lambda.imag() >= 0.0 ? rho : -rho);
  if (std::abs(lambda - lambda0) < exceptional_radius(rho)) return near_exceptional(lambda, false);
  return (phi(params_, lambda, r_, options_) - 1.0) / mu;
}

std::complex<double> SpectralEquation::derivative(std::complex<double> lambda) const {
  if (kind_ != DistKind::MeanValue) return phi_dk(eval_params_, {lambda, 1}, r_, options_);
  const double rho = params_.rho();
  const std::complex<double> lambda0(0.0, lambda.imag() >= 0.0 ? rho : -rho);
  if (std::abs(lambda - lambda0) < exceptional_radius(rho)) return near_exceptional(lambda, true);
  const std::complex<double> mu = lambda * lambda + rho * rho;
  const std::complex<double> g = (phi(params_, lambda, r_, options_) - 1.0) / mu;
  return (phi_dk(params_, {lambda, 1}, r_, options_) - 2.0 * lambda * g) / mu;
}

std::complex<double> SpectralEquation::transform_value(std::complex<double> lambda) const {
  return transform(kind_, params_, r_, lambda, options_).value;
}

namespace {

std::optional<std::complex<double>> newton(const SpectralEquation& eq, std::complex<double> z,
                                           double tol) {
  for (int it = 0; it < 60; ++it) {
    const std::complex<double> fz = eq(z);
    if (std::abs(fz) <= 1e-3 * tol) return z;
    const std::complex<double> dz = eq.derivative(z);
    if (dz == 0.0) return std::nullopt;
    const std::complex<double> step = fz / dz;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
    if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(z))) {
      return std::abs(eq(z)) <= tol ? std::optional(z) : std::nullopt;
    }
  }
  return std::abs(eq(z)) <= tol ? std::optional(z) : std::nullopt;
}

struct Locator {
  const SpectralEquation& eq;
  ComplexFunction f;
  double tol;
  int samples;
  std::vector<std::complex<double>> found;
  bool ok = true;

  int count(const Rectangle& b) { return complex_zero_count(f, b, samples); }

  void run(const Rectangle& b, int n, int depth) {
    if (n <= 0 || !ok) return;
    const double size = std::max(b.x1 - b.x0, b.y1 - b.y0);
    if (n == 1 && (size < 0.5 || depth >= 3)) {
      const std::complex<double> centre(0.5 * (b.x0 + b.x1), 0.5 * (b.y0 + b.y1));
      if (auto z = newton(eq, centre, tol)) {
        const double slack = 1e-9 * std::max(1.0, size);
        if (z->real() >= b.x0 - slack && z->real() <= b.x1 + slack && z->imag() >= b.y0 - slack &&
            z->imag() <= b.y1 + slack) {
          found.push_back(*z);
          return;
        }
      }
    }
    if (depth > 14) {
      ok = false;
      return;
    }
    for (double shift : {0.5137, 0.4721, 0.5549}) {
      const double xm = b.x0 + shift * (b.x1 - b.x0);
      const double ym = b.y0 + (1.0 - shift) * (b.y1 - b.y0);
      const Rectangle parts[4] = {{b.x0, xm, b.y0, ym},
                                  {xm, b.x1, b.y0, ym},
                                  {b.x0, xm, ym, b.y1},
                                  {xm, b.x1, ym, b.y1}};
      int counts[4];
      try {
        for (int i = 0; i < 4; ++i) counts[i] = count(parts[i]);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ContourTooClose) continue;
        throw;
      }
      if (counts[0] + counts[1] + counts[2] + counts[3] != n) {
        ok = false;
        return;
      }
      for (int i = 0; i < 4; ++i) run(parts[i], counts[i], depth + 1);
      return;
    }
    ok = false;
  }
};

}  // namespace

ZeroSet spectral_zero_set(const SpaceParams& params, double r, DistKind kind, double lambda_max,
                          const SpectralZeroOptions& options) {
  if (!(lambda_max > 0.0) || !(lambda_max <= 40.0)) throw_domain("lambda_max must lie in (0, 40]");
  if (!(options.strip_height > 0.0)) throw_domain("strip height must be positive");
  const SpectralEquation eq(params, r, kind);
  ZeroOptions zopt = options.zero;
  zopt.accept_double_zeros = true;

  const double scan_end = lambda_max + 1.0;
  ZeroSet scan = real_zeros([&eq](double x) { return eq(x).real(); }, scan_end, zopt,
                            [&eq](double x) { return eq.derivative(x).real(); });

  ZeroSet out;
  out.window = lambda_max;
  out.tol = zopt.tol;
  out.tangent_warnings = scan.tangent_warnings;
  out.uncertified = scan.uncertified;
  out.note = scan.note;
  for (std::size_t i = 0; i < scan.zeros.size(); ++i) {
    if (scan.zeros[i] > lambda_max) continue;
    out.zeros.push_back(scan.zeros[i]);
    out.residuals.push_back(scan.residuals[i]);
    out.multiplicities.push_back(scan.multiplicities[i]);
  }
  out.zero_at_origin = std::abs(eq(0.0)) <= zopt.tol;

  const ComplexFunction f = [&eq](std::complex<double> z) { return eq(z); };
  double height = options.strip_height;
  std::optional<int> count;
  double edge = lambda_max;
  std::string failure;
  for (int attempt = 0; attempt < 8 && !count; ++attempt) {
    // Right edge at least 0.02 away from every real zero found beyond the window.
    edge = lambda_max + 0.05 * attempt;
    for (int shift = 0; shift < 20; ++shift) {
      bool clear = true;
      for (double z : scan.zeros) clear = clear && std::abs(z - edge) >= 0.02;
      if (clear) break;
      edge += 0.05;
    }
    height = options.strip_height * (1.0 + 0.013 * attempt);
    try {
      count = complex_zero_count(f, {-edge, edge, -height, height}, options.samples_per_edge);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ContourTooClose) throw;
      failure = e.what();
    }
  }
  out.contour_right_edge = edge;
  out.strip_height = height;

  ZeroOptions iopt = zopt;
  iopt.scan_step = std::min(zopt.scan_step, height / 50);
  const ZeroSet imag = real_zeros([&eq](double y) { return eq({0.0, y}).real(); }, height, iopt);
  out.imaginary_zeros = imag.zeros;

  if (!count) {
    out.uncertified = true;
    out.note = "argument principle count failed: " + failure;
    return out;
  }
  out.certified_count = count;

  int expected = out.zero_at_origin ? 2 : 0;
  for (std::size_t i = 0; i < scan.zeros.size(); ++i) {
    if (scan.zeros[i] < edge) expected += 2 * scan.multiplicities[i];
  }
  expected += 2 * static_cast<int>(out.imaginary_zeros.size());

  if (*count > expected && (*count - expected) % 4 == 0) {
    Locator loc{eq, f, zopt.tol, options.samples_per_edge, {}, true};
    const Rectangle quadrant{5e-3, edge, 5e-3, height};
    try {
      loc.run(quadrant, (*count - expected) / 4, 0);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ContourTooClose) throw;
      loc.ok = false;
    }
    std::sort(loc.found.begin(), loc.found.end(),
              [](auto a, auto b) { return a.real() < b.real(); });
    if (loc.ok) {
      for (auto z : loc.found) {
        if (z.real() <= lambda_max) out.complex_zeros.push_back(z);
        expected += 4;
      }
    }
  }
  out.expected_count = expected;
  if (*count != expected) {
    out.uncertified = true;
    std::ostringstream os;
    os << "argument principle count " << *count << " differs from the " << expected
       << " zeros located";
    out.note = os.str();
  }
  return out;
}

std::string_view to_string(Admissibility a) {
  switch (a) {
    case Admissibility::Admissible: return "admissible";
    case Admissibility::Inadmissible: return "inadmissible";
    case Admissibility::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

struct ZeroPoint {
  std::complex<double> z;
  int multiplicity;
};

std::vector<ZeroPoint> zero_points(const ZeroSet& s) {
  std::vector<ZeroPoint> pts;
  if (s.zero_at_origin) pts.push_back({0.0, 2});
  for (std::size_t i = 0; i < s.zeros.size(); ++i) pts.push_back({s.zeros[i], s.multiplicities[i]});
  for (double y : s.imaginary_zeros) pts.push_back({{0.0, y}, 1});
  for (auto z : s.complex_zeros) pts.push_back({z, 1});
  return pts;
}

// Gauss-Newton on the residual pair (g1, g2), where g is the equation itself
// for simple zeros and its derivative for double zeros.
std::complex<double> joint_polish(const SpectralEquation& e1, const SpectralEquation& e2,
                                  std::complex<double> z, bool use_derivative) {
  auto residual = [&](std::complex<double> x) {
    return use_derivative ? std::norm(e1.derivative(x)) + std::norm(e2.derivative(x))
                          : std::norm(e1(x)) + std::norm(e2(x));
  };
  double best = residual(z);
  for (int it = 0; it < 30; ++it) {
    std::complex<double> g1, g2, d1, d2;
    if (use_derivative) {
      const double h = 1e-5 * std::max(1.0, std::abs(z));
      g1 = e1.derivative(z);
      g2 = e2.derivative(z);
      d1 = (e1.derivative(z + h) - e1.derivative(z - h)) / (2 * h);
      d2 = (e2.derivative(z + h) - e2.derivative(z - h)) / (2 * h);
    } else {
      g1 = e1(z);
      g2 = e2(z);
      d1 = e1.derivative(z);
      d2 = e2.derivative(z);
    }
    const double den = std::norm(d1) + std::norm(d2);
    if (den == 0.0) break;
    const std::complex<double> step = (std::conj(d1) * g1 + std::conj(d2) * g2) / den;
    const std::complex<double> next = z - step;
    const double r = residual(next);
    if (!(r < best)) break;
    best = r;
    z = next;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
  }
  if (z.imag() != 0.0 && std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z))) z = z.real();
  return z;
}

}  // namespace

PairVerdict common_zero(const SpaceParams& params, double r1, double r2, DistKind kind,
                        double lambda_max, double delta, const SpectralZeroOptions& options) {
  if (!(delta > 0.0)) throw_domain("separation threshold must be positive");
  PairVerdict v;
  v.lambda_max = lambda_max;
  v.delta = delta;
  v.tol = options.zero.tol;
  v.zeros_1 = spectral_zero_set(params, r1, kind, lambda_max, options);
  v.zeros_2 = r1 == r2 ? v.zeros_1 : spectral_zero_set(params, r2, kind, lambda_max, options);
  v.strip_height = std::min(v.zeros_1.strip_height, v.zeros_2.strip_height);

  const SpectralEquation e1(params, r1, kind);
  const SpectralEquation e2(params, r2, kind);
  const auto p1 = zero_points(v.zeros_1);
  const auto p2 = zero_points(v.zeros_2);

  v.min_gap = std::numeric_limits<double>::infinity();
  std::vector<std::pair<ZeroPoint, ZeroPoint>> close;
  for (const auto& a : p1) {
    for (const auto& b : p2) {
      const double gap = std::abs(a.z - b.z);
      v.min_gap = std::min(v.min_gap, gap);
      if (gap < delta) close.emplace_back(a, b);
    }
  }

  const bool uncertified = v.zeros_1.uncertified || v.zeros_2.uncertified;
  std::sort(close.begin(), close.end(), [](const auto& l, const auto& r) {
    return std::abs(l.first.z) < std::abs(r.first.z);
  });
  for (const auto& [a, b] : close) {
    const bool doubled = a.multiplicity > 1 && b.multiplicity > 1;
    const std::complex<double> z = joint_polish(e1, e2, 0.5 * (a.z + b.z), doubled);
    const double res1 = std::abs(e1(z));
    const double res2 = std::abs(e2(z));
    if (res1 <= v.tol && res2 <= v.tol) {
      v.admissible = Admissibility::Inadmissible;
      v.witness = z;
      v.witness_residual_1 = res1;
      v.witness_residual_2 = res2;
      v.note = "common zero found within the certified region";
      return v;
    }
  }
  if (uncertified) {
    v.admissible = Admissibility::Unknown;
    v.note = "zero set not certified: " +
             (v.zeros_1.uncertified ? v.zeros_1.note : v.zeros_2.note);
    return v;
  }
  if (!close.empty()) {
    v.admissible = Admissibility::Unknown;
    v.note = "zeros closer than delta that do not polish to a common zero";
    return v;
  }
  v.admissible = Admissibility::Admissible;
  v.note = "no common zero in (0, lambda_max] x [-H, H]";
  return v;
}

std::vector<RealZero> radial_zeros(const SpaceParams& params, DistKind kind, double lambda0,
                                   double r_max, const ZeroOptions& options) {
  if (!(lambda0 > 0.0) || !std::isfinite(lambda0)) throw_domain("lambda0 must be a positive real");
  if (!(r_max > 0.0) || !(r_max <= kMaxRadius)) throw_domain("r_max must lie in (0, 10]");
  const SpaceParams eval = kind == DistKind::Ball ? params.ball_shift() : params;
  const double shift = kind == DistKind::MeanValue ? 1.0 : 0.0;
  ZeroOptions opt = options;
  opt.accept_double_zeros = kind == DistKind::MeanValue;
  auto f = [&](double r) { return phi(eval, lambda0, r).real() - shift; };
  // d/dr F(a, b; c; -sinh^2(r/2)) = -(ab / c) sinh(r/2) cosh(r/2) F(a+1, b+1; c+1; z).
  auto df = [&](double r) {
    const double rho = eval.rho();
    const double c = eval.half_dimension();
    const double z = -std::pow(std::sinh(r / 2), 2);
    const double g = f21_neg_conjpair(rho + 1.0, lambda0, c + 1.0, z).value.real();
    return -(rho * rho + lambda0 * lambda0) / c * std::sinh(r / 2) * std::cosh(r / 2) * g;
  };
  const ZeroSet s = real_zeros(f, r_max, opt, df);
  std::vector<RealZero> out;
  for (std::size_t i = 0; i < s.zeros.size(); ++i) {
    out.push_back({s.zeros[i], s.residuals[i], s.multiplicities[i]});
  }
  return out;
}

}  // namespace drharm
