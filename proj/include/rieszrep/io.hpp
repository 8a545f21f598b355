#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "rieszrep/exp_basis.hpp"
#include "rieszrep/families.hpp"
#include "rieszrep/frame_constants.hpp"
#include "rieszrep/gershgorin.hpp"

namespace rieszrep::io {

/// All file payloads use insertion-ordered JSON with a fixed key order, so
/// that identical inputs serialize to identical bytes. Complex numbers are
/// two-element [re, im] arrays; all array indices in files are 0-based
/// (prose and diagnostics count from 1).
using json = nlohmann::ordered_json;

enum class Mode { analyze, sweep, exp_check, bounds, gen };
enum class Format { json, csv };

const char* to_string(Mode mode);
Mode mode_from_string(const std::string& s);
Format format_from_string(const std::string& s);

struct AnalysisConfig {
  Mode mode = Mode::analyze;
  std::string input_path;
  std::string output_path;  // empty = stdout
  Format format = Format::json;
  Index n = 0;      // analyze
  Index n_max = 0;  // sweep; 0 = full range
  VariationalOptions<double> variational;
  bool quiet = false;
  bool with_timing = false;
};

// ---- problem files ----
// { "schema_version": "1", "ambient_dim": M, "vectors": [[[re,im],...],...],
//   "unit_tol": 1e-10, "rank_tol": 1e-10 }
ReplacementProblem<double> problem_from_json(const json& j);
json problem_to_json(const ReplacementProblem<double>& p);

// ---- exp-check files ----
// { "domain": {"kind":"interval_union","intervals":[[a,b],...]}
//           | {"kind":"unit_box","d":d},
//   "frequencies": [[...],...], "N": n, "a": ..., "a_prime": ..., "delta": ... }
struct ExpCheckInput {
  Domain<double> domain;
  RealMatrix<double> frequencies;  // one frequency per row
  Index n = 0;
  double a = 0;
  double a_prime = 0;
  double delta = 0;
};
ExpCheckInput exp_check_from_json(const json& j);

// ---- raw matrices (bounds mode) ----
// { "matrix": [[entry,...],...] } where entry is [re,im] or a plain number.
ComplexMatrix<double> matrix_from_json(const json& j);

// ---- family specs (gen mode) ----
// { "kind": "identity" | "block" | "rotation" | "random_perturbation", ... }
struct FamilySpec {
  std::string kind;
  int n_blocks = 0;               // block
  RealVector<double> thetas;      // rotation
  Index ambient_dim = 0;          // identity, random_perturbation
  Index count = 0;                // identity, random_perturbation
  double epsilon = 0;             // random_perturbation
  std::uint64_t seed = 0;         // random_perturbation
  double unit_tol = 1e-10;
  double rank_tol = 1e-10;
};
FamilySpec family_from_json(const json& j);
ReplacementProblem<double> generate_family(const FamilySpec& spec);

// ---- report payloads ----
json to_json(const FrameConstants<double>& fc);
json to_json(const RieszVerdict<double>& verdict);
json to_json(const SweepReport<double>& report);
json to_json(const GershgorinReport<double>& report);
json to_json(const ExpCertificate<double>& cert);

/// Report envelope: schema version, mode, echo of the resolved inputs, then
/// the payload. Callers may append a timing field afterwards.
json make_report(const std::string& mode, json input_echo, json payload);

/// Stable bytes: two-space indentation and a trailing newline.
std::string serialize_json(const json& j);

/// Decimal with 17 significant digits; round-trips any double exactly.
std::string format_real(double x);

// ---- CSV emission (fixed column orders, see README) ----
std::string sweep_to_csv(const SweepReport<double>& report);
std::string analyze_to_csv(Index n, const RieszVerdict<double>& verdict,
                           const FrameConstants<double>& tilde,
                           const FrameConstants<double>& exact,
                           const FrameConstants<double>& variational,
                           const FrameConstants<double>* closed_n1);
std::string gershgorin_to_csv(const GershgorinReport<double>& report);
std::string exp_certificate_to_csv(const ExpCertificate<double>& cert);

// ---- bytes in/out ----
std::string read_file(const std::string& path);
void write_output(const std::string& path, const std::string& bytes);  // "" = stdout
json parse_json_text(const std::string& text);

}  // namespace rieszrep::io
