// projconst: projection constants of hyperplane kernels in the sup-norm
// sequence space. Computes closed forms and solver values, designs
// certificates for a target constant, and runs agreement sweeps.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "projconst/closed_form.hpp"
#include "projconst/designer.hpp"
#include "projconst/errors.hpp"
#include "projconst/io.hpp"
#include "projconst/projection_norm.hpp"
#include "projconst/solver.hpp"
#include "projconst/sweep.hpp"

namespace {

using namespace projconst;

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string input;
  double tol = 1e-9;
  std::vector<long> levels{10, 100, 1000, 10000};
  std::uint64_t seed = 0;
  std::size_t count = 100;
  bool count_given = false;
  double target = 0.0;
  std::string curve;
  Format format = Format::Text;
  std::string out;
};

// Inputs starting with '{' are inline JSON; anything else is a path.
std::string load_input(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  return read_file(arg);
}

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << '\n';
  } else {
    write_file(cfg.out, payload);
  }
}

int cmd_lambda(const RunConfig& cfg) {
  const HyperplaneFunctional f = parse_functional(load_input(cfg.input));
  const SolverResult result = min_projection_norm(f, cfg.tol);

  bool have_closed = true;
  double closed = 0.0;
  std::string hypothesis_error;
  try {
    closed = mixed_lambda(f);
  } catch (const DomainError& e) {
    have_closed = false;
    hypothesis_error = e.what();
  }

  if (cfg.format == Format::Json) {
    std::string out = "{\"lambda_solver\":" + format_double(result.lambda);
    out += ",\"lambda_closed_form\":";
    out += have_closed ? format_double(closed) : std::string("null");
    out += ",\"delta\":";
    out += have_closed ? format_double(result.lambda - closed)
                       : std::string("null");
    out += ",\"attained\":";
    out += result.attained ? "true" : "false";
    out += ",\"tag\":\"" + to_string(result.tag) + "\"";
    out += ",\"iterations\":" + std::to_string(result.iterations);
    out += "}";
    emit(cfg, out);
  } else {
    std::string out;
    out += "lambda_solver      = " + format_double(result.lambda) + "\n";
    out += "lambda_closed_form = " +
           (have_closed ? format_double(closed) : "unavailable") + "\n";
    if (have_closed) {
      out += "delta              = " + format_double(result.lambda - closed) +
             "\n";
    }
    out += "attained           = " +
           std::string(result.attained ? "true" : "false") + "\n";
    out += "tag                = " + to_string(result.tag) + "\n";
    if (!result.note.empty()) out += "note               = " + result.note + "\n";
    emit(cfg, out);
  }

  if (!have_closed) {
    std::cerr << "hypothesis violation: " << hypothesis_error << "\n";
    return 2;
  }
  return 0;
}

int cmd_norm(const RunConfig& cfg) {
  const auto [f, y] = parse_norm_input(load_input(cfg.input));
  const NormReport report = operator_norm(f, y);
  if (cfg.format == Format::Json) {
    emit(cfg, to_json(report));
  } else {
    std::string out;
    out += "norm       = " + format_double(report.norm) + "\n";
    out += "tail_value = " + format_double(report.tail_value) + "\n";
    out += "pairing    = " + format_double(report.pairing) + "\n";
    for (std::size_t j = 0; j < report.per_coord.size(); ++j) {
      out += "coord[" + std::to_string(j) +
             "]   = " + format_double(report.per_coord[j]) + "\n";
    }
    emit(cfg, out);
  }
  return 0;
}

int cmd_design(const RunConfig& cfg) {
  const ExampleCertificate cert = design_for_target(cfg.target, cfg.tol);
  const std::string path = cfg.out.empty() ? "certificate.json" : cfg.out;
  write_file(path, to_json(cert) + "\n");

  std::cout << "target            = " << format_double(cert.target) << "\n";
  std::cout << "kind              = " << to_string(cert.kind) << "\n";
  if (cert.kind == CertificateKind::Mixed) {
    std::cout << "n                 = " << cert.params.n << "\n";
    std::cout << "a                 = " << format_double(cert.params.a) << "\n";
    std::cout << "b                 = " << format_double(cert.params.b) << "\n";
  }
  std::cout << "lambda_closed_form = " << format_double(cert.lambda_closed_form)
            << "\n";
  std::cout << "lambda_solver      = " << format_double(cert.lambda_solver)
            << "\n";
  std::cout << "last_gap           = "
            << format_double(cert.gap_evidence.gaps.back()) << " at level "
            << cert.gap_evidence.levels.back() << "\n";
  std::cout << "written            = " << path << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const ExampleCertificate cert = parse_certificate(load_input(cfg.input));
  std::vector<std::string> failures;
  const bool ok = verify_certificate(cert, failures);
  if (cfg.format == Format::Json) {
    std::string out = "{\"verified\":";
    out += ok ? "true" : "false";
    out += ",\"failures\":[";
    for (std::size_t i = 0; i < failures.size(); ++i) {
      if (i) out += ",";
      out += "\"" + failures[i] + "\"";
    }
    out += "]}";
    emit(cfg, out);
  } else {
    std::string out = ok ? "verified\n" : "NOT verified\n";
    for (const std::string& fail : failures) out += "  - " + fail + "\n";
    emit(cfg, out);
  }
  return ok ? 0 : 2;
}

int cmd_gaps(const RunConfig& cfg) {
  const HyperplaneFunctional f = parse_functional(load_input(cfg.input));
  const GapSequence gaps = truncation_gaps(f, cfg.levels);
  if (cfg.format == Format::Json) {
    emit(cfg, to_json(gaps));
  } else {
    std::string out;
    for (std::size_t i = 0; i < gaps.levels.size(); ++i) {
      out += "level " + std::to_string(gaps.levels[i]) + ": gap " +
             format_double(gaps.gaps[i]) + "\n";
    }
    emit(cfg, out);
  }
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  if (!cfg.curve.empty()) {
    std::string arg = cfg.curve;
    if (arg.rfind("n=", 0) == 0) arg = arg.substr(2);
    int n = 0;
    try {
      n = std::stoi(arg);
    } catch (...) {
      throw InputError("sweep: cannot parse --curve value \"" + cfg.curve +
                       "\"");
    }
    const std::size_t samples = cfg.count_given ? cfg.count : 50;
    emit(cfg, curve_csv(curve_sweep(n, samples)));
    return 0;
  }

  const std::vector<SweepRow> rows =
      agreement_sweep(cfg.seed, cfg.count, cfg.tol);
  double max_delta = 0.0;
  for (const SweepRow& row : rows) {
    max_delta = std::max(max_delta, std::abs(row.delta));
  }
  emit(cfg, sweep_csv(rows));
  std::ostream& side = cfg.out.empty() ? std::cerr : std::cout;
  side << "instances = " << rows.size() << ", max |delta| = "
       << format_double(max_delta) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "projection constants of hyperplane kernels in the sup-norm sequence "
      "space"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format_name;
  std::map<const CLI::App*, std::string> default_format;
  const auto add_format = [&](CLI::App* sub, const std::string& def) {
    default_format[sub] = def;
    sub->add_option("--format", format_name, "output format (default " + def + ")")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  CLI::App* lambda = app.add_subcommand(
      "lambda", "projection constant of ker f: solver value, closed form "
                "when the hypotheses hold, and their difference");
  lambda->add_option("functional", cfg.input, "functional JSON or file path")
      ->required();
  lambda->add_option("--tol", cfg.tol, "solver tolerance");
  add_format(lambda, "text");
  lambda->add_option("--out", cfg.out, "write output to file");

  CLI::App* norm = app.add_subcommand(
      "norm", "operator norm report for a projection given by (f, y)");
  norm->add_option("input", cfg.input, "JSON with \"f\" and \"y\" or file path")
      ->required();
  add_format(norm, "text");
  norm->add_option("--out", cfg.out, "write output to file");

  CLI::App* design = app.add_subcommand(
      "design", "construct a certified functional whose kernel has the "
                "target projection constant");
  design->add_option("--target", cfg.target, "target constant in (1, 2]")
      ->required();
  design->add_option("--tol", cfg.tol, "matching tolerance");
  design->add_option("--out", cfg.out, "certificate path (certificate.json)");

  CLI::App* verify = app.add_subcommand(
      "verify", "recompute and check a certificate produced by design");
  verify->add_option("certificate", cfg.input, "certificate JSON or file path")
      ->required();
  add_format(verify, "text");
  verify->add_option("--out", cfg.out, "write output to file");

  CLI::App* gaps = app.add_subcommand(
      "gaps", "truncation-gap evidence of non-attainment for a non-attaining "
              "singular part");
  gaps->add_option("functional", cfg.input, "functional JSON or file path")
      ->required();
  gaps->add_option("--levels", cfg.levels, "restriction levels (>= 2, increasing)");
  add_format(gaps, "json");
  gaps->add_option("--out", cfg.out, "write output to file");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "seeded formula-vs-solver agreement sweep, or family curve "
               "samples with --curve");
  CLI::Option* count_opt = sweep->add_option(
      "--count", cfg.count, "number of instances (or curve samples)");
  sweep->add_option("--seed", cfg.seed, "RNG seed; determines all instances");
  sweep->add_option("--tol", cfg.tol, "solver tolerance");
  sweep->add_option("--curve", cfg.curve, "emit curve samples for n, e.g. n=4");
  add_format(sweep, "csv");
  sweep->add_option("--out", cfg.out, "write output to file");

  CLI11_PARSE(app, argc, argv);

  cfg.count_given = count_opt->count() > 0;
  if (format_name.empty()) {
    for (const auto& [sub, def] : default_format) {
      if (sub->parsed()) format_name = def;
    }
  }
  cfg.format = format_name == "json"  ? Format::Json
               : format_name == "csv" ? Format::Csv
                                      : Format::Text;

  try {
    if (lambda->parsed()) return cmd_lambda(cfg);
    if (norm->parsed()) return cmd_norm(cfg);
    if (design->parsed()) return cmd_design(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (gaps->parsed()) return cmd_gaps(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
