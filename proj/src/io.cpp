#include "rieszrep/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rieszrep::io {

namespace {

const json& require_field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(name, 0, "missing required field");
  }
  return *it;
}

double as_number(const json& j, const char* name) {
  if (!j.is_number()) {
    throw ParseError(name, 0, "expected a number, got " + std::string(j.type_name()));
  }
  return j.get<double>();
}

long long as_integer(const json& j, const char* name) {
  if (!j.is_number_integer()) {
    throw ParseError(name, 0, "expected an integer, got " + std::string(j.type_name()));
  }
  return j.get<long long>();
}

std::complex<double> as_complex(const json& j, const char* name) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(name, 0, "expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

void check_schema_version(const json& j) {
  const auto it = j.find("schema_version");
  if (it == j.end()) return;  // absent means the current version
  const std::string v = it->is_string() ? it->get<std::string>() : it->dump();
  if (v != "1") {
    throw SchemaVersionUnsupported("schema_version \"" + v +
                                   "\" unsupported; this build reads \"1\"");
  }
}

json complex_to_json(const std::complex<double>& z) {
  return json::array({z.real(), z.imag()});
}

}  // namespace

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::analyze: return "analyze";
    case Mode::sweep: return "sweep";
    case Mode::exp_check: return "exp-check";
    case Mode::bounds: return "bounds";
    case Mode::gen: return "gen";
  }
  return "unknown";
}

Mode mode_from_string(const std::string& s) {
  if (s == "analyze") return Mode::analyze;
  if (s == "sweep") return Mode::sweep;
  if (s == "exp-check") return Mode::exp_check;
  if (s == "bounds") return Mode::bounds;
  if (s == "gen") return Mode::gen;
  throw ValidationError("unknown mode: " + s);
}

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw ValidationError("unknown format: " + s + " (expected json or csv)");
}

ReplacementProblem<double> problem_from_json(const json& j) {
  check_schema_version(j);
  ReplacementProblem<double> p;
  p.ambient_dim = as_integer(require_field(j, "ambient_dim"), "ambient_dim");
  const json& vectors = require_field(j, "vectors");
  if (!vectors.is_array() || vectors.empty()) {
    throw ParseError("vectors", 0, "expected a non-empty array of vectors");
  }
  const Index rows = static_cast<Index>(vectors.size());
  const Index cols = static_cast<Index>(vectors[0].is_array() ? vectors[0].size() : 0);
  if (cols == 0) {
    throw ParseError("vectors", 0, "each vector must be a non-empty array");
  }
  p.vectors.resize(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = vectors[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ParseError("vectors", 0,
                       "vector " + std::to_string(r) + " has " +
                           std::to_string(row.size()) +
                           " entries, expected " + std::to_string(cols));
    }
    for (Index c = 0; c < cols; ++c) {
      p.vectors(r, c) = as_complex(row[static_cast<std::size_t>(c)], "vectors");
    }
  }
  p.unit_tol = j.contains("unit_tol") ? as_number(j["unit_tol"], "unit_tol") : 1e-10;
  p.rank_tol = j.contains("rank_tol") ? as_number(j["rank_tol"], "rank_tol") : 1e-10;
  return p;
}

json problem_to_json(const ReplacementProblem<double>& p) {
  json vectors = json::array();
  for (Index r = 0; r < p.vectors.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < p.vectors.cols(); ++c) {
      row.push_back(complex_to_json(p.vectors(r, c)));
    }
    vectors.push_back(std::move(row));
  }
  json j;
  j["schema_version"] = "1";
  j["ambient_dim"] = p.ambient_dim;
  j["vectors"] = std::move(vectors);
  j["unit_tol"] = p.unit_tol;
  j["rank_tol"] = p.rank_tol;
  return j;
}

ExpCheckInput exp_check_from_json(const json& j) {
  check_schema_version(j);
  ExpCheckInput in;
  const json& dom = require_field(j, "domain");
  const json& kind = require_field(dom, "kind");
  if (!kind.is_string()) throw ParseError("kind", 0, "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "unit_box") {
    in.domain = Domain<double>::unit_box(
        static_cast<int>(as_integer(require_field(dom, "d"), "d")));
  } else if (k == "interval_union") {
    const json& ivs = require_field(dom, "intervals");
    if (!ivs.is_array() || ivs.empty()) {
      throw ParseError("intervals", 0, "expected a non-empty array of [lo, hi]");
    }
    std::vector<Domain<double>::Interval> list;
    for (const json& iv : ivs) {
      if (!iv.is_array() || iv.size() != 2) {
        throw ParseError("intervals", 0, "expected [lo, hi] pairs");
      }
      list.push_back({as_number(iv[0], "intervals"), as_number(iv[1], "intervals")});
    }
    in.domain = Domain<double>::interval_union(std::move(list));
  } else {
    throw ParseError("kind", 0, "unknown domain kind: " + k);
  }

  const json& freqs = require_field(j, "frequencies");
  if (!freqs.is_array() || freqs.empty()) {
    throw ParseError("frequencies", 0, "expected a non-empty array");
  }
  const Index rows = static_cast<Index>(freqs.size());
  in.frequencies.resize(rows, in.domain.dim);
  for (Index r = 0; r < rows; ++r) {
    const json& row = freqs[static_cast<std::size_t>(r)];
    if (row.is_number() && in.domain.dim == 1) {  // scalar shorthand in 1-D
      in.frequencies(r, 0) = row.get<double>();
      continue;
    }
    if (!row.is_array() || static_cast<Index>(row.size()) != in.domain.dim) {
      throw ParseError("frequencies", 0,
                       "frequency " + std::to_string(r) + " must have " +
                           std::to_string(in.domain.dim) + " components");
    }
    for (Index c = 0; c < in.domain.dim; ++c) {
      in.frequencies(r, c) = as_number(row[static_cast<std::size_t>(c)], "frequencies");
    }
  }
  in.n = as_integer(require_field(j, "N"), "N");
  in.a = as_number(require_field(j, "a"), "a");
  in.a_prime = as_number(require_field(j, "a_prime"), "a_prime");
  in.delta = as_number(require_field(j, "delta"), "delta");
  return in;
}

ComplexMatrix<double> matrix_from_json(const json& j) {
  check_schema_version(j);
  const json& rows = require_field(j, "matrix");
  if (!rows.is_array() || rows.empty()) {
    throw ParseError("matrix", 0, "expected a non-empty array of rows");
  }
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows[0].is_array() ? rows[0].size() : 0);
  if (c == 0) throw ParseError("matrix", 0, "rows must be non-empty arrays");
  ComplexMatrix<double> a(r, c);
  for (Index i = 0; i < r; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c) {
      throw ParseError("matrix", 0, "row " + std::to_string(i) + " is ragged");
    }
    for (Index k = 0; k < c; ++k) {
      a(i, k) = as_complex(row[static_cast<std::size_t>(k)], "matrix");
    }
  }
  return a;
}

FamilySpec family_from_json(const json& j) {
  check_schema_version(j);
  FamilySpec spec;
  const json& kind = require_field(j, "kind");
  if (!kind.is_string()) throw ParseError("kind", 0, "expected a string");
  spec.kind = kind.get<std::string>();
  if (spec.kind == "identity") {
    spec.ambient_dim = as_integer(require_field(j, "ambient_dim"), "ambient_dim");
    spec.count = as_integer(require_field(j, "count"), "count");
  } else if (spec.kind == "block") {
    spec.n_blocks = static_cast<int>(as_integer(require_field(j, "n_blocks"), "n_blocks"));
  } else if (spec.kind == "rotation") {
    const json& thetas = require_field(j, "thetas");
    if (!thetas.is_array() || thetas.empty()) {
      throw ParseError("thetas", 0, "expected a non-empty array of angles");
    }
    spec.thetas.resize(static_cast<Index>(thetas.size()));
    for (Index i = 0; i < spec.thetas.size(); ++i) {
      spec.thetas[i] = as_number(thetas[static_cast<std::size_t>(i)], "thetas");
    }
  } else if (spec.kind == "random_perturbation") {
    spec.ambient_dim = as_integer(require_field(j, "ambient_dim"), "ambient_dim");
    spec.count = as_integer(require_field(j, "count"), "count");
    spec.epsilon = as_number(require_field(j, "epsilon"), "epsilon");
    spec.seed = static_cast<std::uint64_t>(as_integer(require_field(j, "seed"), "seed"));
  } else {
    throw ParseError("kind", 0, "unknown family kind: " + spec.kind);
  }
  if (j.contains("unit_tol")) spec.unit_tol = as_number(j["unit_tol"], "unit_tol");
  if (j.contains("rank_tol")) spec.rank_tol = as_number(j["rank_tol"], "rank_tol");
  return spec;
}

ReplacementProblem<double> generate_family(const FamilySpec& spec) {
  ReplacementProblem<double> p;
  if (spec.kind == "identity") {
    p = gen_identity<double>(spec.ambient_dim, spec.count);
  } else if (spec.kind == "block") {
    p = gen_block_example<double>(spec.n_blocks);
  } else if (spec.kind == "rotation") {
    p = gen_rotation<double>(spec.thetas);
  } else if (spec.kind == "random_perturbation") {
    p = gen_random_perturbation<double>(spec.ambient_dim, spec.count,
                                        spec.epsilon, spec.seed);
  } else {
    throw ValidationError("unknown family kind: " + spec.kind);
  }
  p.unit_tol = spec.unit_tol;
  p.rank_tol = spec.rank_tol;
  return p;
}

json to_json(const FrameConstants<double>& fc) {
  json j;
  j["lower"] = fc.lower;
  j["upper"] = fc.upper;
  j["method"] = to_string(fc.method);
  j["degenerate"] = fc.degenerate;
  return j;
}

json to_json(const RieszVerdict<double>& verdict) {
  json j;
  j["is_riesz_basis"] = verdict.is_riesz_basis;
  j["lambda_min_head"] = verdict.lambda_min_head;
  j["rank_head"] = verdict.rank_head;
  return j;
}

json to_json(const SweepReport<double>& report) {
  json per_n = json::array();
  for (const auto& entry : report.per_n) {
    json e;
    e["N"] = entry.n;
    e["riesz"] = to_json(entry.riesz);
    e["tilde"] = to_json(entry.tilde);
    e["exact"] = to_json(entry.exact);
    per_n.push_back(std::move(e));
  }
  json j;
  j["per_N"] = std::move(per_n);
  j["tail_energy"] = std::vector<double>(
      report.tail_energy.begin(), report.tail_energy.end());
  j["liminf_A"] = report.liminf_a;
  j["limsup_B"] = report.limsup_b;
  j["limits_are_window_estimates"] = true;
  j["uniform_convergence_hint"] = report.uniform_convergence_hint;
  return j;
}

json to_json(const GershgorinReport<double>& report) {
  json intervals = json::array();
  for (const auto& iv : report.intervals) {
    intervals.push_back(json::array({iv.lo, iv.hi}));
  }
  json j;
  j["row_sums"] = std::vector<double>(report.row_sums.begin(), report.row_sums.end());
  j["col_sums"] = std::vector<double>(report.col_sums.begin(), report.col_sums.end());
  j["s"] = std::vector<double>(report.s.begin(), report.s.end());
  j["intervals"] = std::move(intervals);
  j["sigma_min_lower"] = report.sigma_min_lower;
  j["certifies_nonsingular"] = report.certifies_nonsingular;
  return j;
}

json to_json(const ExpCertificate<double>& cert) {
  json j;
  j["N"] = cert.n;
  j["a"] = cert.a;
  j["a_prime"] = cert.a_prime;
  j["delta"] = cert.delta;
  j["condition_holds"] = cert.condition_holds;
  j["A_lower"] = cert.a_lower;
  j["B_upper"] = cert.b_upper;
  j["worst_row"] = cert.worst_row;
  j["worst_sum"] = cert.worst_sum;
  j["sigma_min_gershgorin"] = cert.sigma_min_gershgorin;
  j["violation"] = cert.violation;
  return j;
}

json make_report(const std::string& mode, json input_echo, json payload) {
  json j;
  j["schema_version"] = "1";
  j["mode"] = mode;
  j["input"] = std::move(input_echo);
  j["payload"] = std::move(payload);
  return j;
}

std::string serialize_json(const json& j) { return j.dump(2) + "\n"; }

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string sweep_to_csv(const SweepReport<double>& report) {
  std::ostringstream out;
  out << "N,tilde_A,tilde_B,A,B,tail_energy\n";
  for (const auto& entry : report.per_n) {
    out << entry.n << ',' << format_real(entry.tilde.lower) << ','
        << format_real(entry.tilde.upper) << ','
        << format_real(entry.exact.lower) << ','
        << format_real(entry.exact.upper) << ','
        << format_real(report.tail_energy[entry.n - 1]) << '\n';
  }
  return out.str();
}

std::string analyze_to_csv(Index n, const RieszVerdict<double>& verdict,
                           const FrameConstants<double>& tilde,
                           const FrameConstants<double>& exact,
                           const FrameConstants<double>& variational,
                           const FrameConstants<double>* closed_n1) {
  std::ostringstream out;
  out << "N,is_riesz_basis,lambda_min_head,rank_head,tilde_A,tilde_B,A,B,"
         "var_A,var_B,closed_A,closed_B\n";
  out << n << ',' << (verdict.is_riesz_basis ? "true" : "false") << ','
      << format_real(verdict.lambda_min_head) << ',' << verdict.rank_head << ','
      << format_real(tilde.lower) << ',' << format_real(tilde.upper) << ','
      << format_real(exact.lower) << ',' << format_real(exact.upper) << ','
      << format_real(variational.lower) << ',' << format_real(variational.upper)
      << ',';
  if (closed_n1 != nullptr) {
    out << format_real(closed_n1->lower) << ',' << format_real(closed_n1->upper);
  } else {
    out << ',';
  }
  out << '\n';
  return out.str();
}

std::string gershgorin_to_csv(const GershgorinReport<double>& report) {
  std::ostringstream out;
  out << "row,abs_diag,row_sum,col_sum,s,interval_lo,interval_hi,"
         "sigma_min_lower,certifies_nonsingular\n";
  for (Index i = 0; i < report.row_sums.size(); ++i) {
    const double abs_diag = report.intervals[static_cast<std::size_t>(i)].hi -
                            report.s[i];
    out << (i + 1) << ',' << format_real(abs_diag) << ','
        << format_real(report.row_sums[i]) << ','
        << format_real(report.col_sums[i]) << ',' << format_real(report.s[i])
        << ',' << format_real(report.intervals[static_cast<std::size_t>(i)].lo)
        << ',' << format_real(report.intervals[static_cast<std::size_t>(i)].hi)
        << ',' << format_real(report.sigma_min_lower) << ','
        << (report.certifies_nonsingular ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string exp_certificate_to_csv(const ExpCertificate<double>& cert) {
  std::ostringstream out;
  out << "N,a,a_prime,delta,condition_holds,A_lower,B_upper,worst_row,"
         "worst_sum,sigma_min_gershgorin\n";
  out << cert.n << ',' << format_real(cert.a) << ',' << format_real(cert.a_prime)
      << ',' << format_real(cert.delta) << ','
      << (cert.condition_holds ? "true" : "false") << ','
      << format_real(cert.a_lower) << ',' << format_real(cert.b_upper) << ','
      << cert.worst_row << ',' << format_real(cert.worst_sum) << ','
      << format_real(cert.sigma_min_gershgorin) << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot read input file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty()) {
    std::cout << bytes;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw UnwritableOutput("cannot open output file: " + path);
  }
  out << bytes;
  out.flush();
  if (!out) {
    throw UnwritableOutput("failed writing output file: " + path);
  }
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", e.byte, e.what());
  }
}

}  // namespace rieszrep::io
