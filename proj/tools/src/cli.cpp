#include "drharm_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "drharm/abel.hpp"
#include "drharm/errors.hpp"
#include "drharm/spherical.hpp"
#include "drharm/transforms.hpp"
#include "drharm/tworadius.hpp"
#include "drharm/zeros.hpp"
#include "drharm_cli/format.hpp"

namespace drharm::cli {
namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::vector<int> space{0, 0};
  std::string kind = "ball";
  std::vector<std::string> radii;
  std::vector<std::string> lambdas;
  std::string lambda0;
  std::vector<std::string> centers{"0:5:0.5"};
  std::string terms;
  double lambda_max = 20.0;
  double r_max = kMaxRadius;
  double tol = 1e-12;
  double zero_tol = 1e-10;
  double quad_tol = 1e-10;
  double delta = 1e-6;
  double strip_height = 2.0;
  std::string format = "csv";
  std::uint64_t seed = 0;
};

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw_domain(std::string(name) + " must be positive");
}

struct Context {
  RunConfig cfg;
  SpaceParams params{0, 0};
  SeriesOptions series;
  SpectralZeroOptions zero;

  void finish() {
    params = SpaceParams(cfg.space.at(0), cfg.space.at(1));
    require_positive(cfg.tol, "--tol");
    require_positive(cfg.zero_tol, "--zero-tol");
    require_positive(cfg.quad_tol, "--quad-tol");
    require_positive(cfg.delta, "--delta");
    require_positive(cfg.strip_height, "--strip-height");
    require_positive(cfg.lambda_max, "--lambda-max");
    if (cfg.format != "csv" && cfg.format != "json") throw_domain("--format must be csv or json");
    series.tol = cfg.tol;
    zero.zero.tol = cfg.zero_tol;
    zero.strip_height = cfg.strip_height;
  }

  DistKind kind() const { return parse_dist_kind(cfg.kind); }

  std::vector<double> radii() const { return expand_grid(cfg.radii); }

  std::vector<std::complex<double>> lambdas() const {
    std::vector<std::complex<double>> out;
    for (const auto& tok : cfg.lambdas) out.push_back(parse_complex(tok));
    return out;
  }

  std::complex<double> lambda0() const {
    if (cfg.lambda0.empty()) throw_domain("--lambda0 is required");
    return parse_complex(cfg.lambda0);
  }

  double single_radius() const {
    const auto r = radii();
    if (r.size() != 1) throw_domain("exactly one --r value is required");
    return r.front();
  }
};

// A small table with CSV and JSON renderings sharing one column list.
class Table {
 public:
  using Cell = std::variant<double, int, std::string>;

  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<Cell> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      Json arr = Json::array();
      for (const auto& row : rows_) {
        Json obj = Json::object();
        for (std::size_t c = 0; c < columns_.size(); ++c) {
          std::visit([&](const auto& v) { obj[columns_[c]] = v; }, row[c]);
        }
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << '\n';
      return;
    }
    for (std::size_t c = 0; c < columns_.size(); ++c) out << (c ? "," : "") << columns_[c];
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << ',';
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, double>) {
                out << format_number(v);
              } else {
                out << v;
              }
            },
            row[c]);
      }
      out << '\n';
    }
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

Json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json zero_set_json(const ZeroSet& s) {
  Json zeros = Json::array();
  for (std::size_t i = 0; i < s.zeros.size(); ++i) {
    zeros.push_back({{"location", s.zeros[i]},
                     {"residual", s.residuals[i]},
                     {"multiplicity", s.multiplicities[i]}});
  }
  Json complex_zeros = Json::array();
  for (const auto& z : s.complex_zeros) complex_zeros.push_back(complex_json(z));
  Json j;
  j["zeros"] = zeros;
  j["imaginary_zeros"] = s.imaginary_zeros;
  j["complex_zeros"] = complex_zeros;
  j["zero_at_origin"] = s.zero_at_origin;
  j["tangent_warnings"] = s.tangent_warnings;
  j["window"] = s.window;
  j["contour_right_edge"] = s.contour_right_edge;
  j["strip_height"] = s.strip_height;
  j["tol"] = s.tol;
  j["certified_count"] = s.certified_count ? Json(*s.certified_count) : Json(nullptr);
  j["expected_count"] = s.expected_count;
  j["uncertified"] = s.uncertified;
  j["note"] = s.note;
  return j;
}

Json annihilation_json(const AnnihilationReport& r) {
  Json translated = Json::array();
  for (const auto& t : r.translated) {
    translated.push_back({{"center", t.center},
                          {"value", complex_json(t.value)},
                          {"relative", t.relative}});
  }
  return Json{{"kind", to_string(r.kind)},
              {"lambda0", complex_json(r.lambda0)},
              {"radius", r.radius},
              {"scale", r.scale},
              {"transform_value", complex_json(r.transform_value)},
              {"center_value", complex_json(r.center_value)},
              {"center_residual", r.center_residual},
              {"translated", translated},
              {"tol", r.tol},
              {"passed", r.passed}};
}

Json scenario_json(const Scenario& sc) {
  const PairVerdict& v = sc.verdict;
  Json j;
  j["verdict"] = to_string(v.admissible);
  j["witness"] = v.witness ? complex_json(*v.witness) : Json(nullptr);
  j["witness_residuals"] = v.witness ? Json{v.witness_residual_1, v.witness_residual_2} : Json(nullptr);
  j["min_gap"] = number_or_null(v.min_gap);
  j["scope"] = Json{{"space", {sc.params.p(), sc.params.q()}},
                    {"kind", to_string(sc.kind)},
                    {"r1", sc.r1},
                    {"r2", sc.r2},
                    {"lambda_max", v.lambda_max},
                    {"strip_height", v.strip_height},
                    {"tol", v.tol},
                    {"delta", v.delta}};
  j["certificates"] = Json{
      {"r1", {{"count", v.zeros_1.certified_count ? Json(*v.zeros_1.certified_count) : Json(nullptr)},
              {"expected", v.zeros_1.expected_count},
              {"uncertified", v.zeros_1.uncertified}}},
      {"r2", {{"count", v.zeros_2.certified_count ? Json(*v.zeros_2.certified_count) : Json(nullptr)},
              {"expected", v.zeros_2.expected_count},
              {"uncertified", v.zeros_2.uncertified}}}};
  Json evidence = Json::array();
  for (const auto& e : sc.evidence) evidence.push_back(annihilation_json(e));
  j["evidence"] = evidence;
  j["note"] = v.note;
  return j;
}

int verdict_exit(Admissibility a) {
  switch (a) {
    case Admissibility::Admissible: return exit_code::kOk;
    case Admissibility::Inadmissible: return exit_code::kInadmissible;
    case Admissibility::Unknown: return exit_code::kUnknown;
  }
  return exit_code::kUnknown;
}

bool lambda_less(std::complex<double> a, std::complex<double> b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

int cmd_eval_phi(const Context& ctx, std::ostream& out) {
  auto lambdas = ctx.lambdas();
  auto radii = ctx.radii();
  if (lambdas.empty() || radii.empty()) throw_domain("eval-phi needs --lambda and --r values");
  std::stable_sort(lambdas.begin(), lambdas.end(), lambda_less);
  std::stable_sort(radii.begin(), radii.end());
  Table table({"p", "q", "lambda_re", "lambda_im", "r", "phi_re", "phi_im", "est_error"});
  for (const auto lambda : lambdas) {
    for (const double r : radii) {
      const EvalReport e = phi_report(ctx.params, lambda, r, ctx.series);
      table.add({ctx.params.p(), ctx.params.q(), lambda.real(), lambda.imag(), r, e.value.real(),
                 e.value.imag(), e.est_error});
    }
  }
  table.write(out, ctx.cfg.format);
  return exit_code::kOk;
}

int cmd_transform(const Context& ctx, std::ostream& out) {
  const DistKind kind = ctx.kind();
  auto lambdas = ctx.lambdas();
  auto radii = ctx.radii();
  if (lambdas.empty() || radii.empty()) throw_domain("transform needs --lambda and --r values");
  std::stable_sort(lambdas.begin(), lambdas.end(), lambda_less);
  std::stable_sort(radii.begin(), radii.end());
  Table table({"p", "q", "kind", "r", "lambda_re", "lambda_im", "closed_re", "closed_im",
               "reference_re", "reference_im", "reference_method", "abs_diff", "rel_diff",
               "scale"});
  for (const double r : radii) {
    const double scale = distribution_scale(kind, ctx.params, r);
    for (const auto lambda : lambdas) {
      const std::complex<double> closed = transform(kind, ctx.params, r, lambda, ctx.series).value;
      std::complex<double> reference;
      std::string method;
      switch (kind) {
        case DistKind::Ball:
          reference = ball_transform_quadrature(ctx.params, r, lambda, ctx.cfg.quad_tol).value;
          method = "quadrature";
          break;
        case DistKind::Sphere:
          reference = sphere_area(ctx.params, r) * phi_ode_oracle(ctx.params, lambda, r);
          method = "ode";
          break;
        case DistKind::MeanValue:
          reference = phi_ode_oracle(ctx.params, lambda, r) - 1.0;
          method = "ode";
          break;
      }
      const double diff = std::abs(closed - reference);
      table.add({ctx.params.p(), ctx.params.q(), std::string(to_string(kind)), r, lambda.real(),
                 lambda.imag(), closed.real(), closed.imag(), reference.real(), reference.imag(),
                 method, diff, diff / std::max(scale, std::abs(closed)), scale});
    }
  }
  table.write(out, ctx.cfg.format);
  return exit_code::kOk;
}

Scenario run_check(const Context& ctx, DistKind kind, double r1, double r2) {
  if (kind == DistKind::MeanValue) {
    return harmonicity_scenario(ctx.params, r1, r2, ctx.cfg.lambda_max, ctx.cfg.delta, ctx.zero);
  }
  return check_pair(ctx.params, kind, r1, r2, ctx.cfg.lambda_max, ctx.cfg.delta, ctx.zero);
}

int cmd_check_pair(const Context& ctx, std::ostream& out) {
  const auto radii = ctx.radii();
  if (radii.size() != 2) throw_domain("check-pair needs exactly two --r values");
  const Scenario sc = run_check(ctx, ctx.kind(), radii[0], radii[1]);
  out << scenario_json(sc).dump(2) << '\n';
  return verdict_exit(sc.verdict.admissible);
}

int cmd_counterexample(const Context& ctx, std::ostream& out) {
  const DistKind kind = ctx.kind();
  const std::complex<double> l0 = ctx.lambda0();
  if (l0.imag() != 0.0) throw_domain("counterexample needs a real lambda0");
  ZeroOptions zopt = ctx.zero.zero;
  const InadmissiblePair pair =
      generate_inadmissible_pair(ctx.params, kind, l0.real(), ctx.cfg.r_max, zopt);
  const Scenario sc = run_check(ctx, kind, pair.r1, pair.r2);
  Json j;
  j["space"] = {ctx.params.p(), ctx.params.q()};
  j["kind"] = to_string(kind);
  j["lambda0"] = pair.lambda0;
  j["r1"] = pair.r1;
  j["r2"] = pair.r2;
  j["certificate"] = Json{{"residual_1", pair.residual_1},
                          {"residual_2", pair.residual_2},
                          {"transform_residual_1", pair.transform_residual_1},
                          {"transform_residual_2", pair.transform_residual_2},
                          {"tol", pair.tol},
                          {"certified", pair.certified}};
  j["check"] = scenario_json(sc);
  out << j.dump(2) << '\n';
  const bool ok = pair.certified && sc.verdict.admissible == Admissibility::Inadmissible;
  return ok ? exit_code::kOk : exit_code::kCheckFailed;
}

int cmd_verify(const Context& ctx, std::ostream& out) {
  const AnnihilationReport rep =
      verify_annihilation(ctx.params, ctx.kind(), ctx.lambda0(), ctx.single_radius(),
                          expand_grid(ctx.cfg.centers));
  out << annihilation_json(rep).dump(2) << '\n';
  return rep.passed ? exit_code::kOk : exit_code::kCheckFailed;
}

int cmd_zeros(const Context& ctx, std::ostream& out) {
  const ZeroSet s =
      spectral_zero_set(ctx.params, ctx.single_radius(), ctx.kind(), ctx.cfg.lambda_max, ctx.zero);
  Json j;
  j["space"] = {ctx.params.p(), ctx.params.q()};
  j["kind"] = ctx.cfg.kind;
  j["r"] = ctx.single_radius();
  j["zero_set"] = zero_set_json(s);
  out << j.dump(2) << '\n';
  return s.uncertified ? exit_code::kUnknown : exit_code::kOk;
}

// "coef:lambda,k;coef:lambda,k" with k defaulting to 0.
std::vector<SpectralTerm> parse_terms(const std::string& text) {
  std::vector<SpectralTerm> terms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw_domain("term '" + item + "' must read coef:lambda[,k]");
    const auto comma = item.find(',', colon);
    SpectralTerm t;
    t.coef = parse_complex(std::string_view(item).substr(0, colon));
    t.lambda = parse_complex(std::string_view(item).substr(
        colon + 1, comma == std::string::npos ? std::string::npos : comma - colon - 1));
    if (comma != std::string::npos) {
      const double k = parse_real(std::string_view(item).substr(comma + 1));
      if (k != std::floor(k)) throw_domain("derivative order must be an integer");
      t.k = static_cast<int>(k);
    }
    terms.push_back(t);
  }
  if (terms.empty()) throw_domain("abel-roundtrip needs at least one term");
  return terms;
}

int cmd_abel_roundtrip(const Context& ctx, std::ostream& out) {
  const CosineSum sum(parse_terms(ctx.cfg.terms));
  auto radii = ctx.cfg.radii.empty() ? expand_grid({"0.5:5:0.5"}) : ctx.radii();
  std::stable_sort(radii.begin(), radii.end());
  const Calibration cal = calibrate(ctx.params);
  const double err = roundtrip(sum, ctx.params, radii);
  constexpr double kLimit = 1e-7;
  Json terms = Json::array();
  for (const auto& t : sum.terms()) {
    terms.push_back({{"coef", complex_json(t.coef)}, {"lambda", complex_json(t.lambda)}, {"k", t.k}});
  }
  Json j;
  j["space"] = {ctx.params.p(), ctx.params.q()};
  j["terms"] = terms;
  j["radii"] = radii;
  j["calibration"] = Json{{"constant", cal.constant},
                          {"cross_check", cal.cross_check},
                          {"relative_difference", cal.relative_difference}};
  j["max_error"] = err;
  j["limit"] = kLimit;
  j["passed"] = err <= kLimit;
  out << j.dump(2) << '\n';
  return err <= kLimit ? exit_code::kOk : exit_code::kCheckFailed;
}

int cmd_selftest(const Context& ctx, std::ostream& out) {
  const SelftestResult res = run_selftest(ctx.cfg.seed);
  out << res.report;
  return res.passed ? exit_code::kOk : exit_code::kCheckFailed;
}

void write_error(std::ostream& err, std::string_view kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

int error_exit(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDomain:
    case ErrorKind::UnsupportedParameters: return exit_code::kDomain;
    case ErrorKind::QuadratureFailure: return exit_code::kQuadrature;
    default: return exit_code::kNumerical;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  RunConfig& cfg = ctx.cfg;
  CLI::App app{"Spherical analysis and two-radius theorems on Damek-Ricci spaces", "drharm"};
  app.set_config("--config", "", "key=value configuration file; flags override it");
  app.require_subcommand(1);
  app.add_option("--space", cfg.space, "Space parameters P,Q")
      ->delimiter(',')
      ->expected(2)
      ->allow_extra_args(false)
      ->capture_default_str();
  app.add_option("--kind", cfg.kind, "Distribution kind: ball, sphere or mean")->capture_default_str();
  app.add_option("--r", cfg.radii, "Radii; a:b:step expands to a grid")->delimiter(',');
  app.add_option("--lambda", cfg.lambdas, "Spectral parameters, e.g. 2, 1+0.5i, i")->delimiter(',');
  app.add_option("--lambda0", cfg.lambda0, "Spectral parameter of the counterexample");
  app.add_option("--centers", cfg.centers, "Center distances for verify")->delimiter(',')->capture_default_str();
  app.add_option("--lambda-max", cfg.lambda_max, "Real window (0, lambda_max] for zeros")
      ->capture_default_str();
  app.add_option("--r-max", cfg.r_max, "Radius window for counterexamples")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Series tolerance")->capture_default_str();
  app.add_option("--zero-tol", cfg.zero_tol, "Residual bound for zeros")->capture_default_str();
  app.add_option("--quad-tol", cfg.quad_tol, "Relative quadrature tolerance")->capture_default_str();
  app.add_option("--delta", cfg.delta, "Separation below which zeros count as common")
      ->capture_default_str();
  app.add_option("--strip-height", cfg.strip_height, "Half height of the certified strip")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Table format: csv or json")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();

  int (*handler)(const Context&, std::ostream&) = nullptr;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Context&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };
  sub("eval-phi", "Tabulate spherical functions", cmd_eval_phi);
  sub("transform", "Closed-form transforms next to an independent reference", cmd_transform);
  sub("check-pair", "Decide admissibility of a radius pair", cmd_check_pair);
  sub("counterexample", "Generate and check an inadmissible pair", cmd_counterexample);
  sub("verify", "Verify that phi_lambda0 is annihilated", cmd_verify);
  sub("zeros", "Certified zero set of one spectral equation", cmd_zeros);
  sub("abel-roundtrip", "Invert the dual Abel transform on a cosine sum", cmd_abel_roundtrip)
      ->add_option("terms", cfg.terms, "Terms coef:lambda[,k] separated by ';'")
      ->required();
  sub("selftest", "Run the invariant suite", cmd_selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "InvalidDomain", e.what());
    return exit_code::kDomain;
  }

  try {
    ctx.finish();
    return handler(ctx, out);
  } catch (const Error& e) {
    write_error(err, to_string(e.kind()), e.what());
    return error_exit(e.kind());
  } catch (const std::exception& e) {
    write_error(err, "Internal", e.what());
    return exit_code::kNumerical;
  }
}

}  // namespace drharm::cli
