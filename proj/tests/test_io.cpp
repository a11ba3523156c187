#include <doctest.h>

#include <random>

#include "projconst/designer.hpp"
#include "projconst/io.hpp"
#include "projconst/numeric.hpp"
#include "projconst/solver.hpp"

using namespace projconst;

TEST_CASE("functional JSON uses the documented field order") {
  const HyperplaneFunctional f{{0.25, 0.25}, 0.5, false};
  const std::string text = to_json(f);
  CHECK(text == "{\"h\":[0.25,0.25],\"gamma\":0.5,\"attains\":false}");
  const HyperplaneFunctional back = parse_functional(text);
  CHECK(back.atomic == f.atomic);
  CHECK(back.singular_weight == f.singular_weight);
  CHECK(back.singular_attains == f.singular_attains);
}

TEST_CASE("vector JSON round-trips") {
  ExtendedVector y;
  y.prefix = {1.0, -2.0 / 3.0};
  y.tail_mag = 1.5;
  y.tail_pair = -0.25;
  const std::string text = to_json(y);
  CHECK(text.find("\"y\":") < text.find("\"t\":"));
  CHECK(text.find("\"t\":") < text.find("\"s\":"));
  const ExtendedVector back = parse_vector(text);
  CHECK(back.prefix == y.prefix);
  CHECK(back.tail_mag == y.tail_mag);
  CHECK(back.tail_pair == y.tail_pair);
}

TEST_CASE("17-significant-digit rendering round-trips random doubles") {
  std::mt19937_64 rng(307);
  for (int i = 0; i < 1000; ++i) {
    const double x = (uniform_symmetric(rng)) * std::ldexp(1.0, int(uniform_index(rng, 40)) - 20);
    const double back = std::stod(format_double(x));
    CHECK(back == x);
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.5) == "1.5");
}

TEST_CASE("malformed documents raise InputError") {
  CHECK_THROWS_AS(parse_functional("not json"), InputError);
  CHECK_THROWS_AS(parse_functional("{\"h\":[0.5]}"), InputError);
  CHECK_THROWS_AS(parse_functional("{\"h\":0.5,\"gamma\":0,\"attains\":true}"),
                  InputError);
  CHECK_THROWS_AS(parse_vector("{\"y\":[1],\"t\":\"x\",\"s\":0}"), InputError);
  CHECK_THROWS_AS(parse_certificate("{\"target\":1.5}"), InputError);
  CHECK_THROWS_AS(parse_norm_input("{\"f\":{}}"), InputError);
}

TEST_CASE("solver result JSON lists minimizer or null") {
  const SolverResult attained =
      min_projection_norm({{0.25, 0.25, 0.25, 0.25}, 0.0, true}, 1e-9);
  const std::string with = to_json(attained);
  CHECK(with.find("\"minimizer\":{\"y\":") != std::string::npos);
  CHECK(with.find("\"lambda\":") == 1);

  const SolverResult not_attained = min_projection_norm({{}, 1.0, false}, 1e-9);
  CHECK(to_json(not_attained).find("\"minimizer\":null") != std::string::npos);
}

TEST_CASE("certificates survive the JSON round trip and still verify") {
  const ExampleCertificate c = design_for_target(1.3, 1e-9);
  const ExampleCertificate back = parse_certificate(to_json(c));
  CHECK(back.target == c.target);
  CHECK(back.kind == c.kind);
  CHECK(back.params.n == c.params.n);
  CHECK(back.params.a == c.params.a);
  CHECK(back.params.b == c.params.b);
  CHECK(back.functional.atomic == c.functional.atomic);
  CHECK(back.lambda_closed_form == c.lambda_closed_form);
  CHECK(back.lambda_solver == c.lambda_solver);
  CHECK(back.gap_evidence.gaps == c.gap_evidence.gaps);
  CHECK(back.tolerance == c.tolerance);
  CHECK(verify_certificate(back));

  const ExampleCertificate pure = parse_certificate(
      to_json(design_for_target(2.0, 1e-9)));
  CHECK(pure.kind == CertificateKind::PureSingular);
  CHECK(verify_certificate(pure));
}

TEST_CASE("gap sequence JSON keeps levels and gaps aligned") {
  GapSequence g;
  g.levels = {10, 100};
  g.gaps = {0.25, 0.125};
  CHECK(to_json(g) == "{\"levels\":[10,100],\"gaps\":[0.25,0.125]}");
}
