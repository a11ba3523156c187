#pragma once

#include <string>

#include "projconst/designer.hpp"
#include "projconst/functional.hpp"
#include "projconst/projection_norm.hpp"
#include "projconst/solver.hpp"

namespace projconst {

/// 17-significant-digit decimal rendering ('.' decimal point, no locale);
/// round-trips every finite double exactly.
std::string format_double(double x);

// Writers emit fields in the documented order and numbers via format_double,
// so identical values always produce identical bytes.
std::string to_json(const HyperplaneFunctional& f);
std::string to_json(const ExtendedVector& y);
std::string to_json(const NormReport& report);
std::string to_json(const SolverResult& result);
std::string to_json(const GapSequence& gaps);
std::string to_json(const ExampleCertificate& cert);

HyperplaneFunctional parse_functional(const std::string& text);
ExtendedVector parse_vector(const std::string& text);
ExampleCertificate parse_certificate(const std::string& text);

/// Both f and y in one document: {"f": {...}, "y": {...}}.
std::pair<HyperplaneFunctional, ExtendedVector> parse_norm_input(
    const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace projconst
