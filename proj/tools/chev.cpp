// chev: construction dumps, verification suites, random specs and
// decomposition of automorphisms of elementary adjoint Chevalley groups.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chev/decomposer.hpp"
#include "chev/json_io.hpp"
#include "chev/suites.hpp"

using nlohmann::json;

namespace {

int emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 1;
    }
    f << text;
  }
  return 0;
}

json error_json(const std::string& stage, const std::string& message) {
  return json{{"status", "error"}, {"stage", stage}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact adjoint Chevalley groups over finite rings"};
  app.require_subcommand(1);

  std::string system = "A2", ring_desc = "Z", out, format = "json", spec_path, suite;
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));
    cmd->add_option("--out", out, "Write output to FILE instead of stdout");
  };

  auto* roots = app.add_subcommand("roots", "Dump a root system");
  roots->add_option("--system", system, "Root system, e.g. A2, G2, D4")->required();
  add_common(roots);

  auto* adjoint = app.add_subcommand("adjoint", "Dump the adjoint matrices X_alpha");
  adjoint->add_option("--system", system, "Root system")->required();
  add_common(adjoint);

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", suite, "laws | eq1 | weyl | jacobi | commutator | recover")
      ->required()
      ->check(CLI::IsMember(chev::suite_names()));
  verify->add_option("--system", system, "Root system")->required();
  verify->add_option("--ring", ring_desc, "Ring descriptor, e.g. Z, Z/6, F4, Z/3xZ/3");
  verify->add_option("--seed", seed, "Seed for sampled checks");
  bool timing = false;
  verify->add_flag("--timing", timing, "Include wall-clock seconds in the report");
  add_common(verify);

  auto* forge = app.add_subcommand("forge-random", "Emit a random standard automorphism spec");
  forge->add_option("--system", system, "Root system")->required();
  forge->add_option("--ring", ring_desc, "Finite ring descriptor")->required();
  forge->add_option("--seed", seed, "Seed");
  add_common(forge);

  auto* decompose = app.add_subcommand("decompose", "Certify an automorphism spec as standard");
  decompose->add_option("--spec", spec_path, "Spec JSON file (- for stdin)")->required();
  add_common(decompose);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*roots) return emit(chev::root_system_to_json(chev::parse_system(system)), out);
    if (*adjoint) return emit(chev::adjoint_to_json(chev::build_algebra(chev::parse_system(system))), out);
    if (*verify) {
      auto alg = chev::build_algebra(chev::parse_system(system));
      chev::Ring ring = chev::Ring::parse(ring_desc);
      chev::SuiteReport report;
      try {
        report = chev::run_suite(suite, alg, ring, chev::default_threads(), seed);
      } catch (const chev::UnsupportedCombination& e) {
        emit(error_json("verify", e.what()), out);
        return 3;
      }
      json j = report.to_json();
      if (timing) j["seconds"] = report.seconds;
      int rc = emit(j, out);
      return rc ? rc : (report.passed() ? 0 : 1);
    }
    if (*forge) {
      auto alg = chev::build_algebra(chev::parse_system(system));
      chev::Ring ring = chev::Ring::parse(ring_desc);
      auto forged = chev::forge_random(alg, ring, seed);
      json j = chev::spec_to_json(alg, forged.spec);
      j["source"] = chev::automorphism_to_json(alg, forged.automorphism);
      j["seed"] = seed;
      return emit(j, out);
    }
    if (*decompose) {
      json input;
      try {
        if (spec_path == "-") {
          input = json::parse(std::cin);
        } else {
          std::ifstream f(spec_path);
          if (!f) throw std::runtime_error("cannot read " + spec_path);
          input = json::parse(f);
        }
      } catch (const std::exception& e) {
        emit(error_json("input", e.what()), out);
        return 2;
      }
      try {
        chev::AutomorphismSpec spec = chev::spec_from_json(input);
        auto alg = chev::build_algebra(chev::parse_system(spec.system));
        auto cert = chev::certify(alg, spec);
        return emit(chev::certificate_to_json(alg, cert), out);
      } catch (const chev::DecompositionError& e) {
        emit(e.to_json(), out);
        return 2;
      }
    }
  } catch (const std::exception& e) {
    emit(error_json("arguments", e.what()), out);
    return 2;
  }
  return 0;
}
