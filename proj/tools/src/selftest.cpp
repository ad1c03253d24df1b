#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "drharm/abel.hpp"
#include "drharm/errors.hpp"
#include "drharm/geometry.hpp"
#include "drharm/spherical.hpp"
#include "drharm/transforms.hpp"
#include "drharm/tworadius.hpp"
#include "drharm_cli/cli.hpp"
#include "drharm_cli/format.hpp"

namespace drharm::cli {
namespace {

class Suite {
 public:
  explicit Suite(std::uint64_t seed) : seed_(seed) { out_ << "drharm selftest seed=" << seed << '\n'; }

  // `measure` returns a value that must not exceed `limit`.
  void check(const std::string& name, double limit, const std::function<double()>& measure) {
    double value = std::numeric_limits<double>::quiet_NaN();
    std::string error;
    try {
      value = measure();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && value <= limit;
    ++total_;
    passed_ += ok ? 1 : 0;
    out_ << (ok ? "PASS " : "FAIL ") << name << " value=" << format_number(value)
         << " limit=" << format_number(limit);
    if (!error.empty()) out_ << " error=\"" << error << '"';
    out_ << '\n';
  }

  SelftestResult finish() {
    out_ << "summary " << passed_ << '/' << total_ << " passed\n";
    return {out_.str(), passed_ == total_};
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::ostringstream out_;
  int total_ = 0;
  int passed_ = 0;
};

// Uniform in [a, b) from the raw engine output, identical on every platform.
double uniform(std::mt19937_64& gen, double a, double b) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return a + (b - a) * u;
}

double anchor_error(const SpaceParams& params, const std::function<double(double, double)>& exact) {
  SeriesOptions opt;
  opt.tol = 1e-14;
  double worst = 0.0;
  for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
    for (int i = 1; i <= 160; ++i) {
      const double r = 0.05 * i;
      const double ex = exact(lambda, r);
      worst = std::max(worst, std::abs(phi(params, lambda, r, opt) - ex) / std::abs(ex));
    }
  }
  return worst;
}

double verdict_mismatch(const Scenario& sc, Admissibility expected) {
  return sc.verdict.admissible == expected ? 0.0 : 1.0;
}

double witness_error(const Scenario& sc, double expected) {
  if (sc.verdict.admissible != Admissibility::Inadmissible || !sc.verdict.witness) return 1.0;
  return std::abs(*sc.verdict.witness - expected);
}

double certification_failures(const Scenario& sc) {
  double bad = 0.0;
  for (const ZeroSet* s : {&sc.verdict.zeros_1, &sc.verdict.zeros_2}) {
    if (s->uncertified || !s->certified_count || *s->certified_count != s->expected_count) bad += 1.0;
  }
  return bad;
}

}  // namespace

SelftestResult run_selftest(std::uint64_t seed) {
  Suite suite(seed);
  const SpaceParams s00(0, 0);
  const SpaceParams s20(2, 0);
  const SpaceParams s21(2, 1);
  const SpaceParams s22(2, 2);

  suite.check("phi.anchor_euclidean", 1e-10, [&] {
    return anchor_error(s00, [](double l, double r) { return std::cos(l * r); });
  });
  suite.check("phi.anchor_2_0", 1e-10, [&] {
    return anchor_error(s20, [](double l, double r) { return std::sin(l * r) / (2 * l * std::sinh(r / 2)); });
  });

  suite.check("transform.ball_vs_quadrature", 1e-6, [&] {
    double worst = 0.0;
    for (const auto& params : {s00, SpaceParams(2, 1), SpaceParams(4, 3)}) {
      for (double r : {0.5, 2.0}) {
        for (std::complex<double> l : {std::complex<double>(0, 0), {1, 1}, {0, 1}}) {
          const auto closed = ball_transform(params, r, l).value;
          const auto quad = ball_transform_quadrature(params, r, l).value;
          worst = std::max(worst, std::abs(closed - quad) / std::abs(quad));
        }
      }
    }
    return worst;
  });

  suite.check("phi.ode_oracle_random", 1e-6, [&] {
    std::mt19937_64 gen(suite.seed());
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const int p = static_cast<int>(uniform(gen, 0, 9));
      const int q = static_cast<int>(uniform(gen, 0, 8));
      const double lambda = uniform(gen, 0, 5);
      const double r = uniform(gen, 0.05, 5);
      const SpaceParams params(p, q);
      const auto series = phi(params, lambda, r);
      const auto ode = phi_ode_oracle(params, lambda, r);
      worst = std::max(worst, std::abs(series - ode) / std::max(std::abs(ode), 1e-300));
    }
    return worst;
  });

  suite.check("abel.roundtrip", 1e-7, [&] {
    std::vector<double> radii;
    for (int i = 1; i <= 10; ++i) radii.push_back(0.5 * i);
    double worst = 0.0;
    for (const auto& params : {s20, SpaceParams(0, 2), s22, SpaceParams(4, 2)}) {
      for (double l : {0.7, 1.5, 3.0}) {
        worst = std::max(worst, roundtrip(CosineSum({{1.0, l, 0}}), params, radii));
      }
    }
    return worst;
  });
  suite.check("abel.calibration_stability", 1e-9, [&] {
    double worst = 0.0;
    for (const auto& params : {s20, SpaceParams(0, 2), s22, SpaceParams(4, 2)}) {
      worst = std::max(worst, calibrate(params).relative_difference);
    }
    return worst;
  });
  suite.check("abel.imaginary_preimage", 1e-7, [&] {
    std::vector<double> radii{0.5, 1.0, 2.0, 3.0};
    return roundtrip(CosineSum({{1.0, {0.0, s22.rho()}, 1}}), s22, radii);
  });

  const Scenario ball12 = check_pair(s00, DistKind::Ball, 1.0, 2.0, 20.0);
  const Scenario ball1r2 = check_pair(s00, DistKind::Ball, 1.0, std::numbers::sqrt2, 20.0);
  const Scenario mean12 = harmonicity_scenario(s00, 1.0, 2.0, 20.0);
  suite.check("tworadius.ball_1_2_witness", 1e-8, [&] { return witness_error(ball12, std::numbers::pi); });
  suite.check("tworadius.ball_1_sqrt2_admissible", 0.0,
              [&] { return verdict_mismatch(ball1r2, Admissibility::Admissible); });
  suite.check("tworadius.ball_1_sqrt2_gap", 0.0,
              [&] { return ball1r2.verdict.min_gap > 0.05 ? 0.0 : 1.0; });
  suite.check("tworadius.mean_1_2_witness", 1e-8,
              [&] { return witness_error(mean12, 2 * std::numbers::pi); });

  std::optional<Scenario> generated;
  suite.check("tworadius.counterexample_2_1", 1e-6, [&] {
    const InadmissiblePair pair = generate_inadmissible_pair(s21, DistKind::Sphere, 2.0);
    generated = check_pair(s21, DistKind::Sphere, pair.r1, pair.r2, 20.0);
    return witness_error(*generated, 2.0);
  });
  suite.check("tworadius.counterexample_center_residual", 1e-7, [&] {
    if (!generated || generated->evidence.empty()) throw std::runtime_error("no evidence");
    double worst = 0.0;
    for (const auto& e : generated->evidence) worst = std::max(worst, e.center_residual);
    return worst;
  });
  suite.check("zeros.certified", 0.0, [&] {
    double bad = certification_failures(ball12) + certification_failures(ball1r2) +
                 certification_failures(mean12);
    return generated ? bad + certification_failures(*generated) : bad + 1.0;
  });

  suite.check("geometry.cheeger_2_1", 0.0, [&] { return std::abs(cheeger(s21) - 2.0); });
  suite.check("geometry.growth_2_1", 0.1, [&] { return std::abs(log_growth_estimate(s21, 60.0) - 2.0); });
  suite.check("transforms.paley_wiener_sphere", 0.0, [&] {
    const auto rep = paley_wiener_check(
        [&](std::complex<double> l) { return sphere_transform(s21, 1.0, l).value; }, 1.0, 1, {});
    return rep.passed ? 0.0 : 1.0;
  });
  suite.check("transforms.paley_wiener_negative_control", 0.0, [&] {
    const auto rep = paley_wiener_check([](std::complex<double> l) { return std::exp(l * l); }, 1.0, 1, {});
    return rep.passed ? 1.0 : 0.0;
  });

  return suite.finish();
}

}  // namespace drharm::cli
