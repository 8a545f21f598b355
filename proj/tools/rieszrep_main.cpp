// Command-line front end: analyze | sweep | exp-check | bounds | gen.
// Data goes to --output (or stdout); diagnostics go to stderr.
// Exit codes: 0 success, 2 validation error, 3 numerical non-convergence.

#include <chrono>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "rieszrep/io.hpp"

namespace {

using rieszrep::Index;
using rieszrep::io::AnalysisConfig;
using rieszrep::io::Format;
using rieszrep::io::Mode;
using rieszrep::io::json;

json echo_common(const AnalysisConfig& cfg) {
  json echo;
  echo["input_path"] = cfg.input_path;
  echo["format"] = cfg.format == Format::json ? "json" : "csv";
  return echo;
}

void run_analyze(const AnalysisConfig& cfg, std::string& bytes) {
  const json doc = rieszrep::io::parse_json_text(rieszrep::io::read_file(cfg.input_path));
  const auto problem = rieszrep::io::problem_from_json(doc);
  rieszrep::validate_problem(problem);
  if (cfg.n < 1) {
    throw rieszrep::ValidationError("analyze requires --n >= 1");
  }
  if (cfg.n > problem.count()) {
    throw rieszrep::ValidationError(
        "--n " + std::to_string(cfg.n) + " exceeds the number of vectors (" +
        std::to_string(problem.count()) + ")");
  }
  const auto verdict = rieszrep::riesz_basis_test(problem, cfg.n);
  const auto tilde = rieszrep::tilde_constants(problem, cfg.n);
  const auto exact = rieszrep::exact_constants(problem, cfg.n);
  const auto variational =
      rieszrep::variational_constants(problem, cfg.n, cfg.variational);
  rieszrep::FrameConstants<double> closed;
  const bool have_closed = cfg.n == 1;
  if (have_closed) closed = rieszrep::closed_form_n1(problem);

  if (cfg.format == Format::csv) {
    bytes = rieszrep::io::analyze_to_csv(cfg.n, verdict, tilde, exact,
                                         variational,
                                         have_closed ? &closed : nullptr);
    return;
  }
  json payload;
  payload["riesz"] = rieszrep::io::to_json(verdict);
  payload["tilde"] = rieszrep::io::to_json(tilde);
  payload["exact"] = rieszrep::io::to_json(exact);
  payload["variational"] = rieszrep::io::to_json(variational);
  if (have_closed) payload["closed_form_n1"] = rieszrep::io::to_json(closed);
  json echo = echo_common(cfg);
  echo["N"] = cfg.n;
  echo["restarts"] = cfg.variational.restarts;
  echo["seed"] = cfg.variational.seed;
  bytes = rieszrep::io::serialize_json(
      rieszrep::io::make_report("analyze", std::move(echo), std::move(payload)));
}

void run_sweep(const AnalysisConfig& cfg, std::string& bytes) {
  const json doc = rieszrep::io::parse_json_text(rieszrep::io::read_file(cfg.input_path));
  const auto problem = rieszrep::io::problem_from_json(doc);
  rieszrep::validate_problem(problem);
  rieszrep::SweepOptions<double> opts;
  opts.n_max = cfg.n_max;
  if (cfg.n_max > problem.count()) {
    throw rieszrep::ValidationError(
        "--n-max " + std::to_string(cfg.n_max) +
        " exceeds the number of vectors (" + std::to_string(problem.count()) + ")");
  }
  const auto report = rieszrep::sweep(problem, opts);
  if (cfg.format == Format::csv) {
    bytes = rieszrep::io::sweep_to_csv(report);
    return;
  }
  json echo = echo_common(cfg);
  echo["n_max"] = cfg.n_max == 0 ? problem.count() : cfg.n_max;
  bytes = rieszrep::io::serialize_json(rieszrep::io::make_report(
      "sweep", std::move(echo), rieszrep::io::to_json(report)));
}

void run_exp_check(const AnalysisConfig& cfg, std::string& bytes) {
  const json doc = rieszrep::io::parse_json_text(rieszrep::io::read_file(cfg.input_path));
  const auto in = rieszrep::io::exp_check_from_json(doc);
  rieszrep::validate_domain(in.domain);
  // Non-throwing variant: a failed certificate is an analysis outcome, not
  // an input error; the report carries condition_holds = false instead.
  const auto cert = rieszrep::try_suff_basis_check(
      in.domain, in.frequencies, in.n, in.a, in.a_prime, in.delta);
  if (cfg.format == Format::csv) {
    bytes = rieszrep::io::exp_certificate_to_csv(cert);
    return;
  }
  json echo = echo_common(cfg);
  echo["N"] = in.n;
  bytes = rieszrep::io::serialize_json(rieszrep::io::make_report(
      "exp-check", std::move(echo), rieszrep::io::to_json(cert)));
}

void run_bounds(const AnalysisConfig& cfg, std::string& bytes) {
  const json doc = rieszrep::io::parse_json_text(rieszrep::io::read_file(cfg.input_path));
  const auto a = rieszrep::io::matrix_from_json(doc);
  const auto report = rieszrep::gershgorin_report(a);
  if (cfg.format == Format::csv) {
    bytes = rieszrep::io::gershgorin_to_csv(report);
    return;
  }
  json echo = echo_common(cfg);
  echo["order"] = a.rows();
  bytes = rieszrep::io::serialize_json(rieszrep::io::make_report(
      "bounds", std::move(echo), rieszrep::io::to_json(report)));
}

void run_gen(const AnalysisConfig& cfg, std::string& bytes) {
  const json doc = rieszrep::io::parse_json_text(rieszrep::io::read_file(cfg.input_path));
  const auto spec = rieszrep::io::family_from_json(doc);
  const auto problem = rieszrep::io::generate_family(spec);
  rieszrep::validate_problem(problem);
  if (cfg.format == Format::csv) {
    throw rieszrep::ValidationError(
        "gen emits a problem file, which is a JSON schema; csv is unsupported");
  }
  bytes = rieszrep::io::serialize_json(rieszrep::io::problem_to_json(problem));
}

int run(const AnalysisConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string bytes;
  switch (cfg.mode) {
    case Mode::analyze: run_analyze(cfg, bytes); break;
    case Mode::sweep: run_sweep(cfg, bytes); break;
    case Mode::exp_check: run_exp_check(cfg, bytes); break;
    case Mode::bounds: run_bounds(cfg, bytes); break;
    case Mode::gen: run_gen(cfg, bytes); break;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  if (cfg.with_timing && cfg.mode != Mode::gen && cfg.format == Format::json) {
    // Timing is opt-in so that default reports stay byte-deterministic.
    json j = rieszrep::io::parse_json_text(bytes);
    j["timing_ms"] = ms;
    bytes = rieszrep::io::serialize_json(j);
  }
  rieszrep::io::write_output(cfg.output_path, bytes);
  if (!cfg.quiet) {
    std::cerr << rieszrep::io::to_string(cfg.mode) << " completed in "
              << rieszrep::io::format_real(ms) << " ms\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riesz-basis analysis of orthonormal bases with replaced vectors"};
  app.require_subcommand(1);

  AnalysisConfig cfg;
  std::string format_name = "json";
  long long n_flag = 0;
  long long n_max_flag = 0;
  long long restarts_flag = cfg.variational.restarts;
  std::uint64_t seed_flag = cfg.variational.seed;

  auto add_common = [&](CLI::App* sub, bool needs_input = true) {
    auto* in = sub->add_option("-i,--input", cfg.input_path, "input file (JSON)");
    if (needs_input) in->required();
    sub->add_option("-o,--output", cfg.output_path,
                    "output file (default: stdout)");
    sub->add_option("--format", format_name, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("-q,--quiet", cfg.quiet, "suppress stderr diagnostics");
    sub->add_flag("--timing", cfg.with_timing,
                  "include timing_ms in JSON reports (breaks byte determinism)");
  };

  auto* analyze = app.add_subcommand(
      "analyze", "verdict and frame constants at a single truncation N");
  add_common(analyze);
  analyze->add_option("-n,--n", n_flag, "truncation N (1-based count)")->required();
  analyze->add_option("--restarts", restarts_flag, "variational restarts");
  analyze->add_option("--seed", seed_flag, "variational seed");

  auto* sweep = app.add_subcommand("sweep", "constants for N = 1..n_max");
  add_common(sweep);
  sweep->add_option("--n-max", n_max_flag, "largest truncation (default: all)");

  auto* exp_check = app.add_subcommand(
      "exp-check", "exponential-basis certificate on a measure-one domain");
  add_common(exp_check);

  auto* bounds = app.add_subcommand(
      "bounds", "Gershgorin singular-value bounds for a raw matrix");
  add_common(bounds);

  auto* gen = app.add_subcommand("gen", "emit a family instance as a problem file");
  add_common(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // flag errors are validation errors
  }

  try {
    cfg.format = rieszrep::io::format_from_string(format_name);
    cfg.n = static_cast<Index>(n_flag);
    cfg.n_max = static_cast<Index>(n_max_flag);
    cfg.variational.restarts = static_cast<int>(restarts_flag);
    cfg.variational.seed = seed_flag;
    if (analyze->parsed()) cfg.mode = Mode::analyze;
    if (sweep->parsed()) cfg.mode = Mode::sweep;
    if (exp_check->parsed()) cfg.mode = Mode::exp_check;
    if (bounds->parsed()) cfg.mode = Mode::bounds;
    if (gen->parsed()) cfg.mode = Mode::gen;
    return run(cfg);
  } catch (const rieszrep::NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const rieszrep::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
