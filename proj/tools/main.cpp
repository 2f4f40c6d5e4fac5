// Command-line front end: sampling, exact integration, verification
// batteries, conjecture scans and weight-polynomial dumps, with JSON/CSV
// file output. Exit codes: 0 ok, 1 validation error, 2 numeric
// non-convergence, 3 verification suite failure.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "eulerhaar/admissible.hpp"
#include "eulerhaar/errors.hpp"
#include "eulerhaar/euler.hpp"
#include "eulerhaar/finite_type.hpp"
#include "eulerhaar/integrate.hpp"
#include "eulerhaar/jacobians.hpp"
#include "eulerhaar/sampling.hpp"
#include "eulerhaar/verify.hpp"
#include "eulerhaar/version.hpp"

namespace {

using nlohmann::json;
using namespace eulerhaar;

constexpr int kExitValidation = 1;
constexpr int kExitNonConvergence = 2;
constexpr int kExitSuiteFailure = 3;

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + output_path);
  }
  out << text << '\n';
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open input file: " + path);
  }
  json j;
  in >> j;
  return j;
}

json meta(const std::string& command, const json& config) {
  return {{"tool", "eulerhaar"},
          {"version", kVersion},
          {"command", command},
          {"config", config}};
}

json exact_complex_to_json(const ExactComplex& v) {
  if (v.coeff.is_real()) {
    return {{"q", format_rational(v.coeff.re)},
            {"pi_pow", format_pi_pow(v.two_pi_pow)}};
  }
  return {{"re", format_rational(v.coeff.re)},
          {"im", format_rational(v.coeff.im)},
          {"pi_pow", format_pi_pow(v.two_pi_pow)}};
}

GroupFamily parse_family(const std::string& name) {
  if (name == "su") return GroupFamily::SU;
  if (name == "sp") return GroupFamily::Sp;
  if (name == "g2") return GroupFamily::G2;
  throw std::invalid_argument("unknown family: " + name);
}

JacobianSpec build_spec(const std::string& family, int n,
                        const std::string& sp_variant,
                        const std::string& g2_limit) {
  JacobianSpec spec;
  spec.family = parse_family(family);
  spec.n = n;
  spec.sp_variant =
      sp_variant == "squared" ? SpPairVariant::squared : SpPairVariant::printed;
  if (spec.family == GroupFamily::G2 && !g2_limit.empty()) {
    if (g2_limit == "unit" || g2_limit == "xi1" || g2_limit == "circle") {
      spec.g2_limit = G2Limit::preset(g2_limit);
    } else {
      spec.g2_limit = g2_limit_from_json(load_json_file(g2_limit));
    }
  }
  return spec;
}

// ---- sample ----

int cmd_sample(const std::string& group, int n, int count,
               const std::string& sampler, std::uint64_t seed, bool coords,
               const std::string& format, const std::string& output) {
  if (group != "su") {
    throw std::invalid_argument("only --group su supports sampling");
  }
  if (coords && sampler != "euler") {
    throw std::invalid_argument("--coords requires --sampler euler");
  }
  RandomStream rng(seed);
  const json config{{"group", group},       {"n", n},
                    {"count", count},       {"sampler", sampler},
                    {"seed", seed},         {"coords", coords},
                    {"format", format}};

  if (format == "csv") {
    std::ostringstream csv;
    if (coords) {
      const int pairs = coordinate_pair_count(n);
      for (int i = 1; i <= pairs; ++i) csv << "phi_" << i << ',';
      for (int i = 1; i <= pairs; ++i) csv << "psi_" << i << ',';
      for (int i = 1; i <= n - 1; ++i) {
        csv << "omega_" << i << (i == n - 1 ? '\n' : ',');
      }
      csv.precision(17);
      for (int s = 0; s < count; ++s) {
        const EulerCoordinates c = sample_haar_coords(n, rng);
        for (double v : c.phi) csv << v << ',';
        for (double v : c.psi) csv << v << ',';
        for (int i = 0; i < n - 1; ++i) {
          csv << c.omega[i] << (i == n - 2 ? '\n' : ',');
        }
      }
    } else {
      for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
          csv << "g" << r << c << "_re,g" << r << c << "_im";
          csv << ((r == n && c == n) ? '\n' : ',');
        }
      }
      csv.precision(17);
      for (int s = 0; s < count; ++s) {
        const GroupElement g = sampler == "qr"
                                   ? sample_su_qr(n, rng)
                                   : to_group(sample_haar_coords(n, rng));
        for (int r = 0; r < n; ++r) {
          for (int c = 0; c < n; ++c) {
            csv << g.entry(r, c).real() << ',' << g.entry(r, c).imag();
            csv << ((r == n - 1 && c == n - 1) ? '\n' : ',');
          }
        }
      }
    }
    emit(csv.str(), output);
    return 0;
  }

  json out = meta("sample", config);
  json samples = json::array();
  for (int s = 0; s < count; ++s) {
    if (coords) {
      const EulerCoordinates c = sample_haar_coords(n, rng);
      samples.push_back(
          {{"phi", c.phi}, {"psi", c.psi}, {"omega", c.omega}});
    } else {
      const GroupElement g = sampler == "qr"
                                 ? sample_su_qr(n, rng)
                                 : to_group(sample_haar_coords(n, rng));
      json rows = json::array();
      for (int r = 0; r < n; ++r) {
        json row = json::array();
        for (int c = 0; c < n; ++c) {
          row.push_back({{"re", g.entry(r, c).real()},
                         {"im", g.entry(r, c).imag()}});
        }
        rows.push_back(std::move(row));
      }
      samples.push_back({{"matrix", std::move(rows)}});
    }
  }
  out["samples"] = std::move(samples);
  emit(out.dump(2), output);
  return 0;
}

// ---- integrate ----

int cmd_integrate(const std::string& monomial_path, bool mc_check,
                  std::size_t samples, std::optional<std::uint64_t> seed,
                  const std::string& output) {
  const FiniteTypeMonomial f = monomial_from_json(load_json_file(monomial_path));
  json config{{"monomial", monomial_path}, {"mc_check", mc_check}};
  if (mc_check) {
    if (!seed) {
      throw std::invalid_argument("--mc-check requires --seed");
    }
    config["samples"] = samples;
    config["seed"] = *seed;
  }
  json out = meta("integrate", config);
  const ExactComplex value = haar_integral(f);
  out["n"] = f.n;
  out["value"] = exact_complex_to_json(value);
  if (mc_check) {
    RandomStream rng(*seed);
    const MCEstimate mc = mc_integrate_coords(
        [&f](const EulerCoordinates& c) { return evaluate_at(f, c); }, f.n,
        samples, rng);
    const double pull =
        std::abs(mc.mean - value.to_complex()) / (mc.stderr_est + 1e-15);
    out["mc"] = {{"mean_re", mc.mean.real()},
                 {"mean_im", mc.mean.imag()},
                 {"stderr", mc.stderr_est},
                 {"samples", mc.samples},
                 {"pull_sigma", pull}};
  }
  emit(out.dump(2), output);
  return 0;
}

// ---- verify ----

int cmd_verify(const std::string& suite, std::optional<std::uint64_t> seed,
               std::optional<std::size_t> samples, const std::string& output) {
  verify::VerifyConfig cfg;
  if (verify::suite_is_stochastic(suite)) {
    if (!seed) {
      throw std::invalid_argument("suite '" + suite + "' requires --seed");
    }
    cfg.seed = *seed;
  } else if (seed) {
    cfg.seed = *seed;
  }
  if (samples) {
    cfg.haar_samples = *samples;
    cfg.moment_samples = *samples;
  }
  json config{{"suite", suite},
              {"seed", cfg.seed},
              {"haar_samples", cfg.haar_samples},
              {"moment_samples", cfg.moment_samples}};
  const auto results = verify::run_suite(suite, cfg);
  bool pass = true;
  json suites = json::array();
  for (const auto& s : results) {
    json checks = json::array();
    for (const auto& c : s.checks) {
      checks.push_back(
          {{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    }
    suites.push_back(
        {{"name", s.name}, {"pass", s.pass()}, {"checks", std::move(checks)}});
    pass = pass && s.pass();
  }
  json out = meta("verify", config);
  out["suites"] = std::move(suites);
  out["pass"] = pass;
  emit(out.dump(2), output);
  return pass ? 0 : kExitSuiteFailure;
}

// ---- scan ----

int cmd_scan(const std::string& fn_path, const std::string& family, int n,
             int pmax, const std::string& sp_variant,
             const std::string& g2_limit, const std::string& format,
             const std::string& output) {
  if (family == "g2" && g2_limit.empty()) {
    throw std::invalid_argument(
        "--family g2 requires --g2-limit (the upper limit S(xi1) has no "
        "default; use a preset unit|xi1|circle or a JSON file)");
  }
  const JacobianSpec spec = build_spec(family, n, sp_variant, g2_limit);
  const AdmissibleFunction f = admissible_from_json(load_json_file(fn_path));
  const ScanReport report = scan(f, pmax, spec);
  if (format == "csv") {
    emit(scan_report_to_csv(report), output);
    return 0;
  }
  json config{{"fn", fn_path},
              {"family", family},
              {"n", n},
              {"pmax", pmax},
              {"sp_variant", sp_variant}};
  if (!g2_limit.empty()) config["g2_limit"] = g2_limit;
  json out = meta("scan", config);
  out.update(scan_report_to_json(report));
  emit(out.dump(2), output);
  return 0;
}

// ---- jacobian ----

int cmd_jacobian(const std::string& family, int n,
                 const std::string& sp_variant, const std::string& g2_limit,
                 const std::string& output) {
  JacobianSpec spec = build_spec(family, n, sp_variant, g2_limit);
  const HalfSquarePolynomial w = jacobian_polynomial(spec);
  json config{{"family", family}, {"n", n}, {"sp_variant", sp_variant}};
  json out = meta("jacobian", config);
  out["x_arity"] = spec.x_arity();
  out["xi_count"] = spec.xi_count();
  out["z_arity"] = spec.z_arity();
  out["weight"] = w.format();
  json terms = json::array();
  for (const auto& [key, coeff] : w.terms()) {
    terms.push_back({{"xexp", key.xexp},
                     {"sflags", std::vector<int>(key.sflag.begin(),
                                                 key.sflag.end())},
                     {"re", format_rational(coeff.re)},
                     {"im", format_rational(coeff.im)}});
  }
  out["terms"] = std::move(terms);
  emit(out.dump(2), output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler-angle Haar integration toolkit for SU(N)"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "draw Haar samples");
  std::string group = "su";
  int n = 2;
  int count = 1;
  std::string sampler = "euler";
  std::uint64_t seed = 0;
  bool coords = false;
  std::string format = "json";
  std::string output;
  sample->add_option("--group", group, "group family (su)");
  sample->add_option("--n", n, "dimension")->check(CLI::Range(2, 12));
  sample->add_option("--count", count, "number of samples")
      ->check(CLI::PositiveNumber);
  sample->add_option("--sampler", sampler, "euler|qr")
      ->check(CLI::IsMember({"euler", "qr"}));
  sample->add_option("--seed", seed, "RNG seed")->required();
  sample->add_flag("--coords", coords, "emit Euler coordinates, not matrices");
  sample->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sample->add_option("--output", output, "output file (default stdout)");

  // integrate
  auto* integrate = app.add_subcommand("integrate",
                                       "exact Haar integral of a monomial");
  std::string monomial_path;
  bool mc_check = false;
  std::size_t mc_samples = 1'000'000;
  std::optional<std::uint64_t> opt_seed;
  std::string int_output;
  integrate->add_option("--monomial", monomial_path, "monomial JSON file")
      ->required();
  integrate->add_flag("--mc-check", mc_check,
                      "cross-check with the coordinate sampler");
  integrate->add_option("--samples", mc_samples, "Monte Carlo sample count");
  integrate->add_option("--seed", opt_seed, "RNG seed (required with --mc-check)");
  integrate->add_option("--output", int_output, "output file");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run verification batteries");
  std::string suite = "all";
  std::optional<std::uint64_t> verify_seed;
  std::optional<std::size_t> verify_samples;
  std::string verify_output;
  verify_cmd->add_option("--suite", suite, "all|haar|beta|hull|detA")
      ->check(CLI::IsMember({"all", "haar", "beta", "hull", "detA"}));
  verify_cmd->add_option("--seed", verify_seed,
                         "RNG seed (required for stochastic suites)");
  verify_cmd->add_option("--samples", verify_samples,
                         "override Monte Carlo sample counts");
  verify_cmd->add_option("--output", verify_output, "output file");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "conjecture hypothesis scan");
  std::string fn_path;
  std::string family = "su";
  int scan_n = 2;
  int pmax = 1;
  std::string sp_variant = "printed";
  std::string g2_limit;
  std::string scan_format = "json";
  std::string scan_output;
  scan_cmd->add_option("--fn", fn_path, "admissible function JSON file")
      ->required();
  scan_cmd->add_option("--family", family, "su|sp|g2")
      ->check(CLI::IsMember({"su", "sp", "g2"}));
  scan_cmd->add_option("--n", scan_n, "rank parameter (su/sp)");
  scan_cmd->add_option("--pmax", pmax, "largest power P")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--sp-variant", sp_variant, "printed|squared")
      ->check(CLI::IsMember({"printed", "squared"}));
  scan_cmd->add_option("--g2-limit", g2_limit,
                       "upper limit S(xi1): unit|xi1|circle or JSON file");
  scan_cmd->add_option("--format", scan_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  scan_cmd->add_option("--output", scan_output, "output file");

  // jacobian
  auto* jac_cmd = app.add_subcommand("jacobian", "print the expanded weight");
  std::string jac_family = "su";
  int jac_n = 2;
  std::string jac_variant = "printed";
  std::string jac_g2_limit = "unit";  // arity info only; weight needs no S
  std::string jac_output;
  jac_cmd->add_option("--family", jac_family, "su|sp|g2")
      ->check(CLI::IsMember({"su", "sp", "g2"}));
  jac_cmd->add_option("--n", jac_n, "rank parameter (su/sp)");
  jac_cmd->add_option("--sp-variant", jac_variant, "printed|squared")
      ->check(CLI::IsMember({"printed", "squared"}));
  jac_cmd->add_option("--output", jac_output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitValidation;
  }

  try {
    if (sample->parsed()) {
      return cmd_sample(group, n, count, sampler, seed, coords, format, output);
    }
    if (integrate->parsed()) {
      return cmd_integrate(monomial_path, mc_check, mc_samples, opt_seed,
                           int_output);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(suite, verify_seed, verify_samples, verify_output);
    }
    if (scan_cmd->parsed()) {
      return cmd_scan(fn_path, family, scan_n, pmax, sp_variant, g2_limit,
                      scan_format, scan_output);
    }
    if (jac_cmd->parsed()) {
      return cmd_jacobian(jac_family, jac_n, jac_variant, jac_g2_limit,
                          jac_output);
    }
  } catch (const NonConvergenceError& e) {
    std::cerr << json{{"error",
                       {{"code", "non-convergence"},
                        {"message", e.what()},
                        {"best_estimate", e.best_estimate},
                        {"error_estimate", e.error_estimate},
                        {"evaluations", e.evaluations}}}}
                     .dump()
              << '\n';
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << json{{"error",
                       {{"code", "validation"}, {"message", e.what()}}}}
                     .dump()
              << '\n';
    return kExitValidation;
  }
  return 0;
}
