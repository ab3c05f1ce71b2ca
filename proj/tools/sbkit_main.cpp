// sbkit_main.cpp — sb-kit command line: compare two structures, emit a
// certificate, or re-verify an existing one.  Exit codes: 0 positive verdict
// or valid certificate, 1 negative verdict or invalid certificate, 2 any
// diagnostic (bad arguments, unreadable files, module errors).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sbkit/cli.hpp"
#include "sbkit/errors.hpp"
#include "sbkit/serialize.hpp"

namespace {

using sbkit::serialize::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sbkit::ParseError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sbkit::ParseError(path, "cannot open file for writing");
  out << text;
  out.flush();
  if (!out) throw sbkit::ParseError(path, "write failed");
}

json load_json(const std::string& path) {
  return sbkit::serialize::parse_text(read_file(path), path);
}

std::string render_value(const json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

int execute(const std::string& kind, const std::string& left_path,
            const std::string& right_path, json parameters, const std::string& out_path) {
  json job_doc{{"kind", kind},
               {"left", load_json(left_path)},
               {"right", load_json(right_path)},
               {"parameters", std::move(parameters)}};
  const sbkit::cli::Job job = sbkit::cli::parse_job(job_doc);
  const sbkit::cli::Certificate cert = sbkit::cli::run(job);
  write_file(out_path, cert.doc.dump(2) + "\n");
  std::cout << "verdict: " << cert.verdict() << "\n";
  for (const json& bound : cert.doc.at("bounds")) {
    std::cout << "  " << bound.at("claim").get<std::string>() << " = "
              << render_value(bound.at("value")) << "\n";
  }
  std::cout << "certificate: " << out_path << "\n";
  return sbkit::cli::exit_code_for(cert);
}

int execute_verify(const std::string& cert_path) {
  sbkit::cli::Certificate cert;
  cert.doc = load_json(cert_path);
  if (sbkit::cli::verify_certificate(cert)) {
    std::cout << "certificate valid: every claim re-verified\n";
    return 0;
  }
  std::cout << "certificate INVALID: at least one claim failed re-verification\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sb-kit: decides embeddability and isomorphism questions for "
               "finite-dimensional spectral, measure-algebra, permutation, and "
               "catalog structures, emitting machine-checkable certificates"};
  app.require_subcommand(1);

  std::string left, right, out, schedule_path, eps_rational, cert_path;
  double eps_real = 0.0;
  std::size_t tower_height = 0;
  int exit_code = 2;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--left", left, "left structure file")->required();
    sub->add_option("--right", right, "right structure file")->required();
    sub->add_option("--out", out, "certificate output file")->required();
  };

  CLI::App* operators = app.add_subcommand(
      "operators", "approximate unitary equivalence of symmetric matrices");
  add_common(operators);
  operators->add_option("--epsilon", eps_real, "target residual bound")->required();
  operators->callback([&] {
    exit_code = execute("operators", left, right, json{{"epsilon", eps_real}}, out);
  });

  CLI::App* descriptions = app.add_subcommand(
      "descriptions", "equivalence and embeddability of spectral descriptions");
  add_common(descriptions);
  descriptions->callback([&] {
    exit_code = execute("descriptions", left, right, json::object(), out);
  });

  CLI::App* algebras = app.add_subcommand(
      "algebras", "isomorphism and embeddability of measure-algebra invariants");
  add_common(algebras);
  algebras->callback([&] {
    exit_code = execute("algebras", left, right, json::object(), out);
  });

  CLI::App* automorphisms = app.add_subcommand(
      "automorphisms", "approximate conjugacy of blocked permutation systems");
  add_common(automorphisms);
  CLI::Option* height_opt = automorphisms->add_option(
      "--tower-height", tower_height, "single-step tower height");
  CLI::Option* step_eps_opt = automorphisms->add_option(
      "--epsilon", eps_rational, "single-step coverage slack, a rational p/q");
  CLI::Option* schedule_opt = automorphisms->add_option(
      "--schedule", schedule_path, "schedule file: [[height, \"eps\"], ...]");
  automorphisms->callback([&] {
    json parameters = json::object();
    if (schedule_opt->count() > 0) parameters["schedule"] = load_json(schedule_path);
    if (height_opt->count() > 0) parameters["tower_height"] = tower_height;
    if (step_eps_opt->count() > 0) parameters["epsilon"] = eps_rational;
    exit_code = execute("automorphisms", left, right, std::move(parameters), out);
  });

  CLI::App* randomizations = app.add_subcommand(
      "randomizations", "isomorphism and embeddability of density profiles");
  add_common(randomizations);
  randomizations->callback([&] {
    exit_code = execute("randomizations", left, right, json::object(), out);
  });

  CLI::App* verify = app.add_subcommand(
      "verify", "re-check every claim of an emitted certificate from scratch");
  verify->add_option("--certificate", cert_path, "certificate file")->required();
  verify->callback([&] { exit_code = execute_verify(cert_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e);
      return 0;
    }
    std::cerr << "sb-kit: " << e.what() << "\n";
    return 2;
  } catch (const sbkit::Error& e) {
    std::cerr << "sb-kit: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "sb-kit: unexpected error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
