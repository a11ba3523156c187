#include "projconst/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace projconst {

namespace {

using nlohmann::json;

std::string join_doubles(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += format_double(xs[i]);
  }
  out += "]";
  return out;
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("invalid JSON");
  return j;
}

double get_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw InputError(std::string("missing or non-numeric field \"") + key +
                     "\"");
  }
  return j[key].get<double>();
}

bool get_bool(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_boolean()) {
    throw InputError(std::string("missing or non-boolean field \"") + key +
                     "\"");
  }
  return j[key].get<bool>();
}

std::vector<double> get_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw InputError(std::string("missing or non-array field \"") + key +
                     "\"");
  }
  std::vector<double> out;
  out.reserve(j[key].size());
  for (const auto& v : j[key]) {
    if (!v.is_number()) {
      throw InputError(std::string("non-numeric entry in \"") + key + "\"");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

HyperplaneFunctional functional_from_json(const json& j) {
  HyperplaneFunctional f;
  f.atomic = get_array(j, "h");
  f.singular_weight = get_number(j, "gamma");
  f.singular_attains = get_bool(j, "attains");
  if (f.singular_weight == 0.0) f.singular_attains = true;
  return f;
}

ExtendedVector vector_from_json(const json& j) {
  ExtendedVector y;
  y.prefix = get_array(j, "y");
  y.tail_mag = get_number(j, "t");
  y.tail_pair = get_number(j, "s");
  return y;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string to_json(const HyperplaneFunctional& f) {
  std::string out = "{\"h\":" + join_doubles(f.atomic);
  out += ",\"gamma\":" + format_double(f.singular_weight);
  out += ",\"attains\":";
  out += f.singular_attains ? "true" : "false";
  out += "}";
  return out;
}

std::string to_json(const ExtendedVector& y) {
  std::string out = "{\"y\":" + join_doubles(y.prefix);
  out += ",\"t\":" + format_double(y.tail_mag);
  out += ",\"s\":" + format_double(y.tail_pair);
  out += "}";
  return out;
}

std::string to_json(const NormReport& report) {
  std::string out = "{\"per_coord\":" + join_doubles(report.per_coord);
  out += ",\"tail_value\":" + format_double(report.tail_value);
  out += ",\"norm\":" + format_double(report.norm);
  out += ",\"pairing\":" + format_double(report.pairing);
  out += "}";
  return out;
}

std::string to_json(const SolverResult& result) {
  std::string out = "{\"lambda\":" + format_double(result.lambda);
  out += ",\"attained\":";
  out += result.attained ? "true" : "false";
  out += ",\"minimizer\":";
  out += result.minimizer ? to_json(*result.minimizer) : std::string("null");
  out += ",\"iterations\":" + std::to_string(result.iterations);
  out += ",\"tolerance\":" + format_double(result.tolerance);
  out += "}";
  return out;
}

std::string to_json(const GapSequence& gaps) {
  std::string out = "{\"levels\":[";
  for (std::size_t i = 0; i < gaps.levels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(gaps.levels[i]);
  }
  out += "],\"gaps\":" + join_doubles(gaps.gaps);
  out += "}";
  return out;
}

std::string to_json(const ExampleCertificate& cert) {
  const bool mixed = cert.kind == CertificateKind::Mixed;
  std::string out = "{\"target\":" + format_double(cert.target);
  out += ",\"kind\":\"" + to_string(cert.kind) + "\"";
  out += ",\"n\":" + (mixed ? std::to_string(cert.params.n) : "null");
  out += ",\"a\":" + (mixed ? format_double(cert.params.a) : "null");
  out += ",\"b\":" + (mixed ? format_double(cert.params.b) : "null");
  out += ",\"functional\":" + to_json(cert.functional);
  out += ",\"lambda_closed_form\":" + format_double(cert.lambda_closed_form);
  out += ",\"lambda_solver\":" + format_double(cert.lambda_solver);
  out += ",\"gaps\":" + to_json(cert.gap_evidence);
  out += ",\"tolerance\":" + format_double(cert.tolerance);
  out += "}";
  return out;
}

HyperplaneFunctional parse_functional(const std::string& text) {
  return functional_from_json(parse_json(text));
}

ExtendedVector parse_vector(const std::string& text) {
  return vector_from_json(parse_json(text));
}

std::pair<HyperplaneFunctional, ExtendedVector> parse_norm_input(
    const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("f") || !j.contains("y")) {
    throw InputError("expected an object with \"f\" and \"y\" members");
  }
  return {functional_from_json(j["f"]), vector_from_json(j["y"])};
}

ExampleCertificate parse_certificate(const std::string& text) {
  const json j = parse_json(text);
  ExampleCertificate cert;
  cert.target = get_number(j, "target");
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw InputError("missing or non-string field \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "mixed") {
    cert.kind = CertificateKind::Mixed;
    cert.params.n = static_cast<int>(get_number(j, "n"));
    cert.params.a = get_number(j, "a");
    cert.params.b = get_number(j, "b");
  } else if (kind == "pure_singular") {
    cert.kind = CertificateKind::PureSingular;
  } else {
    throw InputError("unknown certificate kind \"" + kind + "\"");
  }
  if (!j.contains("functional")) throw InputError("missing \"functional\"");
  cert.functional = functional_from_json(j["functional"]);
  cert.lambda_closed_form = get_number(j, "lambda_closed_form");
  cert.lambda_solver = get_number(j, "lambda_solver");
  if (!j.contains("gaps") || !j["gaps"].is_object()) {
    throw InputError("missing or malformed \"gaps\"");
  }
  const json& g = j["gaps"];
  if (!g.contains("levels") || !g["levels"].is_array()) {
    throw InputError("missing or non-array field \"levels\"");
  }
  for (const auto& v : g["levels"]) {
    if (!v.is_number_integer()) throw InputError("non-integer gap level");
    cert.gap_evidence.levels.push_back(v.get<long>());
  }
  cert.gap_evidence.gaps = get_array(g, "gaps");
  if (cert.gap_evidence.levels.size() != cert.gap_evidence.gaps.size()) {
    throw InputError("gap levels and gaps differ in length");
  }
  cert.tolerance = get_number(j, "tolerance");
  return cert;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << contents;
}

}  // namespace projconst
