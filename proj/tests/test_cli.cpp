// test_cli.cpp — job parsing, certificate emission, and independent
// verification.  Fixtures cover all five job kinds; each emitted certificate
// is re-verified fresh and then attacked with single-field mutations that
// must all be caught.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "sbkit/cli.hpp"
#include "sbkit/serialize.hpp"

using namespace sbkit;
using namespace sbkit::cli;
using sbkit::serialize::json;

namespace {

json load_fixture(const std::string& name) {
  const std::string path = std::string(SBKIT_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return serialize::parse_text(buffer.str(), name);
}

json job_doc(const std::string& kind, const std::string& left_fixture,
             const std::string& right_fixture, json parameters = json::object()) {
  return json{{"kind", kind},
              {"left", load_fixture(left_fixture)},
              {"right", load_fixture(right_fixture)},
              {"parameters", std::move(parameters)}};
}

json operators_doc() {
  return job_doc("operators", "operators_left.json", "operators_right.json",
                 json{{"epsilon", 1e-6}});
}

json descriptions_doc() {
  return job_doc("descriptions", "descriptions_left.json", "descriptions_right.json");
}

json algebras_doc() {
  return job_doc("algebras", "algebras_left.json", "algebras_right.json");
}

json automorphisms_doc() {
  return job_doc("automorphisms", "automorphisms_left.json", "automorphisms_right.json",
                 json{{"schedule", load_fixture("schedule.json")}});
}

json randomizations_doc() {
  return job_doc("randomizations", "randomizations_left.json",
                 "randomizations_right.json");
}

}  // namespace

TEST_CASE("jobs round-trip through their canonical serialization") {
  for (const json& doc : {operators_doc(), descriptions_doc(), algebras_doc(),
                          automorphisms_doc(), randomizations_doc()}) {
    const Job job = parse_job(doc);
    const json canonical = serialize_job(job);
    const Job reparsed = parse_job(canonical);
    CHECK(serialize_job(reparsed) == canonical);  // canonical form is a fixed point
    CHECK(canonical.at("kind") == doc.at("kind"));
  }
}

TEST_CASE("fixture payloads round-trip through parse and emit") {
  const json op = load_fixture("operators_right.json");
  CHECK(serialize::json_of(serialize::parse_operator(op, "x")) == op);

  const json desc = load_fixture("descriptions_left.json");
  CHECK(serialize::json_of(serialize::parse_description(desc, "x")) == desc);

  const json inv = load_fixture("algebras_left.json");
  CHECK(serialize::json_of(serialize::parse_invariant(inv, "x")) == inv);

  const json sys = load_fixture("automorphisms_right.json");
  CHECK(serialize::json_of(serialize::parse_system(sys, "x")) == sys);

  const json sched = load_fixture("schedule.json");
  CHECK(serialize::json_of_schedule(serialize::parse_schedule(sched, "x")) == sched);

  // Profiles are canonicalized: every id appears in the emitted rho.
  const json prof = load_fixture("randomizations_left.json");
  const auto parsed = serialize::parse_profile(prof, "x");
  const json emitted = serialize::json_of(parsed);
  CHECK(serialize::parse_profile(emitted, "x") == parsed);
  CHECK(emitted.at("rho").size() == parsed.catalog.ids.size());
}

TEST_CASE("parse diagnostics name the offending path") {
  json doc = operators_doc();
  doc.erase("kind");
  CHECK_THROWS_AS(parse_job(doc), ParseError);

  json bad_kind = operators_doc();
  bad_kind["kind"] = "spectra";
  try {
    parse_job(bad_kind);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.path() == "kind");
  }

  json bad_row = operators_doc();
  bad_row["left"]["rows"][1] = json::array({1.0});
  try {
    parse_job(bad_row);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.path().find("left") != std::string::npos);
    CHECK(e.path().find("rows") != std::string::npos);
  }

  json no_eps = operators_doc();
  no_eps["parameters"].erase("epsilon");
  CHECK_THROWS_AS(parse_job(no_eps), ValidationError);

  json both_params = automorphisms_doc();
  both_params["parameters"]["tower_height"] = 4;
  CHECK_THROWS_AS(parse_job(both_params), ValidationError);

  json neither_params = automorphisms_doc();
  neither_params["parameters"].erase("schedule");
  CHECK_THROWS_AS(parse_job(neither_params), ValidationError);
}

TEST_CASE("asymmetric matrices and off-unit profiles are rejected by name") {
  json doc = operators_doc();
  doc["left"]["rows"][0][1] = 0.5;  // now visibly asymmetric
  try {
    parse_job(doc);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.invariant() == "symmetry");
  }

  json prof = randomizations_doc();
  prof["left"]["rho"]["M1"] = "1/4";  // total 3/4
  try {
    parse_job(prof);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.invariant() == "unit mass");
  }
}

TEST_CASE("operators jobs emit a verified unitary certificate") {
  const Job job = parse_job(operators_doc());
  const Certificate cert = run(job);
  CHECK(cert.verdict() == "ApproximatelyUnitarilyEquivalent");
  CHECK(exit_code_for(cert) == 0);
  CHECK(verify_certificate(cert, job));
  CHECK(verify_certificate(cert));  // embedded job agrees

  // The claimed residual is a genuine bound below epsilon.
  double claimed = -1.0;
  for (const json& bound : cert.doc.at("bounds")) {
    if (bound.at("claim") == "residual_operator_norm") claimed = bound.at("value");
  }
  CHECK(claimed >= 0.0);
  CHECK(claimed < 1e-6);
}

TEST_CASE("descriptions jobs report equivalence flags") {
  const Job job = parse_job(descriptions_doc());
  const Certificate cert = run(job);
  CHECK(cert.verdict() == "SpectrallyEquivalent");
  CHECK(exit_code_for(cert) == 0);
  CHECK(cert.doc.at("witness").at("spectrally_equivalent") == true);
  CHECK(verify_certificate(cert));
}

TEST_CASE("algebras jobs carry transport plans for the feasible direction") {
  const Job job = parse_job(algebras_doc());
  const Certificate cert = run(job);
  CHECK(cert.verdict() == "EmbedsOnlyForward");
  CHECK(exit_code_for(cert) == 1);
  CHECK(cert.doc.at("witness").at("forward_plan").is_object());
  CHECK(cert.doc.at("witness").at("backward_plan").is_null());
  CHECK(verify_certificate(cert));
}

TEST_CASE("automorphisms jobs emit one conjugacy step per schedule entry") {
  const Job job = parse_job(automorphisms_doc());
  const Certificate cert = run(job);
  CHECK(cert.verdict() == "ApproximatelyConjugate");
  CHECK(exit_code_for(cert) == 0);
  REQUIRE(cert.doc.at("witness").at("steps").size() == 3);
  CHECK(verify_certificate(cert));

  // Single-step form via tower_height.
  const Job single = parse_job(job_doc("automorphisms", "automorphisms_left.json",
                                       "automorphisms_right.json",
                                       json{{"tower_height", 4}, {"epsilon", "1/8"}}));
  const Certificate single_cert = run(single);
  REQUIRE(single_cert.doc.at("witness").at("steps").size() == 1);
  CHECK(verify_certificate(single_cert));
}

TEST_CASE("randomizations jobs report dominance flags and plans") {
  const Job job = parse_job(randomizations_doc());
  const Certificate cert = run(job);
  CHECK(cert.verdict() == "EmbedsOnlyForward");
  CHECK(exit_code_for(cert) == 1);
  CHECK(cert.doc.at("witness").at("is_partial_order") == true);
  CHECK(cert.doc.at("witness").at("forward_dominates") == true);
  CHECK(cert.doc.at("witness").at("backward_dominates") == false);
  CHECK(verify_certificate(cert));
}

TEST_CASE("tampered certificates fail verification") {
  const Job op_job = parse_job(operators_doc());
  const Certificate op_cert = run(op_job);

  SUBCASE("perturbing the unitary breaks the residual claim") {
    Certificate bad = op_cert;
    bad.doc["witness"]["unitary"]["rows"][0][0] =
        bad.doc["witness"]["unitary"]["rows"][0][0].get<double>() + 1e-3;
    CHECK_FALSE(verify_certificate(bad, op_job));
  }
  SUBCASE("lowering the residual claim below the measurement") {
    // Spectra {0, 1} vs {0, 1.00025}: the best unitary leaves a residual of
    // about 2.5e-4, far above verification slack.
    const json near_doc{
        {"kind", "operators"},
        {"left", json{{"dim", 2}, {"rows", json{{0.0, 0.0}, {0.0, 1.0}}}}},
        {"right", json{{"dim", 2}, {"rows", json{{0.0, 0.0}, {0.0, 1.00025}}}}},
        {"parameters", json{{"epsilon", 1e-3}}}};
    const Job near_job = parse_job(near_doc);
    const Certificate near_cert = run(near_job);
    CHECK(verify_certificate(near_cert, near_job));
    Certificate bad = near_cert;
    for (json& bound : bad.doc["bounds"]) {
      if (bound["claim"] == "residual_operator_norm") bound["value"] = 1e-4;
    }
    CHECK_FALSE(verify_certificate(bad, near_job));
  }
  SUBCASE("swapping the verdict") {
    Certificate bad = op_cert;
    bad.doc["verdict"] = "Incomparable";
    CHECK_FALSE(verify_certificate(bad, op_job));
  }
  SUBCASE("editing the embedded job") {
    Certificate bad = op_cert;
    bad.doc["job"]["parameters"]["epsilon"] = 1e-2;
    CHECK_FALSE(verify_certificate(bad, op_job));
  }

  const Job desc_job = parse_job(descriptions_doc());
  const Certificate desc_cert = run(desc_job);
  SUBCASE("flipping an equivalence flag") {
    Certificate bad = desc_cert;
    bad.doc["witness"]["spectrally_equivalent"] = false;
    CHECK_FALSE(verify_certificate(bad, desc_job));
  }

  const Job alg_job = parse_job(algebras_doc());
  const Certificate alg_cert = run(alg_job);
  SUBCASE("tampering with a transport amount") {
    Certificate bad = alg_cert;
    bad.doc["witness"]["forward_plan"]["entries"][0]["amount"] = "1/3";
    CHECK_FALSE(verify_certificate(bad, alg_job));
  }
  SUBCASE("dropping a transport entry") {
    Certificate bad = alg_cert;
    bad.doc["witness"]["forward_plan"]["entries"].erase(0);
    CHECK_FALSE(verify_certificate(bad, alg_job));
  }

  const Job aut_job = parse_job(automorphisms_doc());
  const Certificate aut_cert = run(aut_job);
  SUBCASE("swapping two conjugation entries breaks the re-measurement") {
    Certificate bad = aut_cert;
    json& phi = bad.doc["witness"]["steps"][0]["phi"];
    std::swap(phi[0], phi[1]);
    CHECK_FALSE(verify_certificate(bad, aut_job));
  }
  SUBCASE("lowering a step bound below the formula") {
    Certificate bad = aut_cert;
    bad.doc["witness"]["steps"][2]["bound"] = "1/100";
    CHECK_FALSE(verify_certificate(bad, aut_job));
  }

  const Job rand_job = parse_job(randomizations_doc());
  const Certificate rand_cert = run(rand_job);
  SUBCASE("flipping the dominance flag") {
    Certificate bad = rand_cert;
    bad.doc["witness"]["backward_dominates"] = true;
    CHECK_FALSE(verify_certificate(bad, rand_job));
  }
  SUBCASE("format version must match") {
    Certificate bad = rand_cert;
    bad.doc["format"] = "v2";
    CHECK_FALSE(verify_certificate(bad, rand_job));
  }
}

TEST_CASE("verification never throws on garbage") {
  Certificate garbage;
  garbage.doc = json::array({1, 2, 3});
  CHECK_FALSE(verify_certificate(garbage));
  garbage.doc = json{{"format", "v1"}};
  CHECK_FALSE(verify_certificate(garbage));
  CHECK_FALSE(verify_certificate(garbage, parse_job(operators_doc())));
}
