// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "drharm/abel.hpp"
#include "drharm/geometry.hpp"
#include "drharm/spherical.hpp"
#include "drharm/transforms.hpp"
#include "drharm/tworadius.hpp"
#include "drharm_cli/cli.hpp"

using namespace drharm;
using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double rel(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::abs(want);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome anchor(const SpaceParams& params, const std::function<double(double, double)>& exact,
               double limit_seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  SeriesOptions opt;
  opt.tol = 1e-14;
  double worst = 0.0;
  for (double l : {0.5, 1.0, 2.0, 5.0}) {
    for (int i = 1; i <= 160; ++i) {
      const double r = 0.05 * i;
      worst = std::max(worst, rel(phi(params, l, r, opt), exact(l, r)));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst <= 1e-10 && secs <= limit_seconds, fmt("max rel err %.3e (limit 1e-10), %.2f s", worst, secs)};
}

Outcome criterion1() {
  return anchor(SpaceParams(0, 0), [](double l, double r) { return std::cos(l * r); }, 10.0);
}

Outcome criterion2() {
  return anchor(SpaceParams(2, 0), [](double l, double r) { return std::sin(l * r) / (2 * l * std::sinh(r / 2)); },
                10.0);
}

Outcome criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& [p, q] : {std::pair{0, 0}, {2, 1}, {4, 3}, {8, 7}}) {
    const SpaceParams s(p, q);
    for (double r : {0.5, 1.0, 2.0, 5.0}) {
      for (std::complex<double> l : {0.0 + 0i, 1.0 + 0i, 3.0 + 0i, 1i, 1.0 + 1i}) {
        worst = std::max(worst, rel(ball_transform(s, r, l).value, ball_transform_quadrature(s, r, l).value));
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst <= 1e-6 && secs <= 60.0, fmt("max rel diff %.3e (limit 1e-6), %.2f s", worst, secs)};
}

Outcome criterion4() {
  std::mt19937_64 gen(4);
  std::uniform_int_distribution<int> pq(0, 8);
  std::uniform_real_distribution<double> lam(0.0, 5.0);
  std::uniform_real_distribution<double> rad(0.01, 5.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const SpaceParams s(pq(gen), pq(gen));
    const double l = lam(gen);
    const double r = rad(gen);
    worst = std::max(worst, rel(phi(s, l, r), phi_ode_oracle(s, l, r)));
  }
  return {worst <= 1e-6, fmt("max rel deviation %.3e over 20 samples (limit 1e-6)", worst)};
}

Outcome criterion5() {
  std::vector<double> radii;
  for (int i = 1; i <= 10; ++i) radii.push_back(0.5 * i);
  double worst = 0.0;
  double drift = 0.0;
  for (const auto& [p, q] : {std::pair{2, 0}, {0, 2}, {2, 2}, {4, 2}}) {
    const SpaceParams s(p, q);
    drift = std::max(drift, calibrate(s).relative_difference);
    for (double l : {0.7, 1.5, 3.0}) worst = std::max(worst, roundtrip(CosineSum({{1.0, l, 0}}), s, radii));
  }
  return {worst <= 1e-7 && drift <= 1e-9,
          fmt("max roundtrip err %.3e (limit 1e-7), calibration drift %.3e (limit 1e-9)", worst, drift)};
}

struct Criteria67 {
  Scenario ball12;
  Scenario ball1r2;
  Scenario mean12;
  Scenario generated;
  InadmissiblePair pair;
};

Criteria67 run67() {
  const SpaceParams s00(0, 0);
  const SpaceParams s21(2, 1);
  Criteria67 c{check_pair(s00, DistKind::Ball, 1.0, 2.0, 20.0),
               check_pair(s00, DistKind::Ball, 1.0, std::numbers::sqrt2, 20.0),
               check_pair(s00, DistKind::MeanValue, 1.0, 2.0, 20.0),
               {},
               generate_inadmissible_pair(s21, DistKind::Sphere, 2.0)};
  c.generated = check_pair(s21, DistKind::Sphere, c.pair.r1, c.pair.r2, 20.0);
  return c;
}

double witness_error(const Scenario& sc, double want) {
  if (sc.verdict.admissible != Admissibility::Inadmissible || !sc.verdict.witness) return INFINITY;
  return std::abs(*sc.verdict.witness - want);
}

Outcome criterion6(const Criteria67& c) {
  const double e1 = witness_error(c.ball12, kPi);
  const bool adm = c.ball1r2.verdict.admissible == Admissibility::Admissible;
  const double gap = c.ball1r2.verdict.min_gap;
  const double e3 = witness_error(c.mean12, 2 * kPi);
  const bool pass = e1 <= 1e-8 && adm && gap > 0.05 && e3 <= 1e-8;
  return {pass, fmt("ball(1,2) witness err %.3e; ball(1,sqrt2) min_gap %.4f; mean(1,2) witness err %.3e", e1,
                    adm ? gap : -1.0, e3)};
}

Outcome criterion7(const Criteria67& c) {
  const double e = witness_error(c.generated, 2.0);
  double residual = c.generated.evidence.empty() ? INFINITY : 0.0;
  for (const auto& ev : c.generated.evidence) residual = std::max(residual, ev.center_residual);
  return {e <= 1e-6 && residual <= 1e-7,
          fmt("pair (%.6f, %.6f), witness err %.3e", c.pair.r1, c.pair.r2, e) +
              fmt(", center residual %.3e x vol-scale (limit 1e-7)", residual)};
}

Outcome criterion8(const Criteria67& c) {
  int sets = 0;
  int bad = 0;
  for (const Scenario* sc : {&c.ball12, &c.ball1r2, &c.mean12, &c.generated}) {
    for (const ZeroSet* z : {&sc->verdict.zeros_1, &sc->verdict.zeros_2}) {
      ++sets;
      int real_count = 0;
      for (int m : z->multiplicities) real_count += m;
      const bool ok = !z->uncertified && z->certified_count && *z->certified_count == 2 * real_count;
      bad += ok ? 0 : 1;
    }
  }
  return {bad == 0, fmt("%.0f zero sets, %.0f with strip count != 2 x real count or uncertified", sets, bad)};
}

Outcome criterion9() {
  const SpaceParams s(2, 1);
  const double h = cheeger(s);
  const double growth = log_growth_estimate(s, 60.0);
  const auto pw = paley_wiener_check([&](std::complex<double> l) { return sphere_transform(s, 1.0, l).value; },
                                     1.0, 1);
  const bool pass = h == 2.0 && std::abs(growth - 2.0) <= 0.1 && pw.passed;
  return {pass, fmt("cheeger %.17g, growth(60) %.6f, Paley-Wiener trend ratio %.4f", h, growth, pw.trend_ratio) +
                    (pw.passed ? " (passed)" : " (failed)")};
}

Outcome criterion10() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = cli::run_selftest(20241016);
  const auto b = cli::run_selftest(20241016);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / 2;
  const bool same = a.report == b.report;
  return {same && a.passed && secs <= 300.0,
          std::string(same ? "reports byte-identical" : "reports differ") +
              (a.passed ? ", selftest passed" : ", selftest failed") + fmt(", %.1f s per run", secs)};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int n, const Outcome& o) {
    std::printf("criterion %d: %s  %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  };
  auto guarded = [&](int n, const std::function<Outcome()>& fn) {
    try {
      report(n, fn());
    } catch (const std::exception& e) {
      report(n, {false, std::string("error: ") + e.what()});
    }
  };
  guarded(1, criterion1);
  guarded(2, criterion2);
  guarded(3, criterion3);
  guarded(4, criterion4);
  guarded(5, criterion5);
  try {
    const Criteria67 c = run67();
    report(6, criterion6(c));
    report(7, criterion7(c));
    report(8, criterion8(c));
  } catch (const std::exception& e) {
    for (int n : {6, 7, 8}) report(n, {false, std::string("error: ") + e.what()});
  }
  guarded(9, criterion9);
  guarded(10, criterion10);
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
