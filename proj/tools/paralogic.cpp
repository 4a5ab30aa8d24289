// Copyright 2026 The Paralogic Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// paralogic: command-line front end.
//
//   paralogic entail <kb> <query>           decide conflict-minimal entailment
//   paralogic oracle <kb> <query>           brute-force model enumeration
//   paralogic export tableau|af <kb> <query>  write DOT and JSON artifacts
//
// Exit status: 0 entailed, 1 not entailed, 2 input or I/O error,
// 3 resource cap or diagnostic.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "paralogic/errors.hpp"
#include "paralogic/export.hpp"
#include "paralogic/oracle.hpp"

namespace {

using namespace paralogic;
namespace fs = std::filesystem;

constexpr int kEntailed = 0;
constexpr int kNotEntailed = 1;
constexpr int kInputError = 2;
constexpr int kDiagnostic = 3;

/// Thrown for unreadable files and malformed input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string kb_path;
  std::string query;
  std::string mode = "material";
  std::string output = "text";
  std::size_t max_nodes = ReasonerLimits{}.max_nodes;
  std::size_t max_args = ReasonerLimits{}.max_arguments;
  std::string dot_dir = ".";
  std::string what;

  ReasonerLimits limits() const { return {max_nodes, max_args}; }
};

KnowledgeBase load_kb(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_kb(text.str());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

Proposition load_query(const std::string& text) {
  try {
    return parse_proposition(text);
  } catch (const ParseError& e) {
    throw InputError(std::string("query:") + e.what());
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
  if (!out) throw InputError("cannot write " + path.string());
  std::cerr << "wrote " << path.string() << "\n";
}

int cmd_entail(const Config& c) {
  const KnowledgeBase kb = load_kb(c.kb_path);
  const Proposition query = load_query(c.query);
  const Report report =
      explain(kb, query, parse_subsumption_mode(c.mode), c.limits());
  if (c.output == "json")
    std::cout << report.json.dump(2) << "\n";
  else
    std::cout << report.text;
  return report.json["entailed"].get<bool>() ? kEntailed : kNotEntailed;
}

int cmd_oracle(const Config& c) {
  const KnowledgeBase kb = load_kb(c.kb_path);
  const Proposition query = load_query(c.query);
  const SubsumptionMode mode = parse_subsumption_mode(c.mode);
  const OracleReport r = run_oracle(kb, query, mode);
  if (c.output == "json") {
    const nlohmann::ordered_json j{{"query", serialize(query)},
                           {"mode", to_string(mode)},
                           {"lp", r.lp},
                           {"lpm", r.lpm},
                           {"models", r.models},
                           {"minimal_models", r.minimal_models}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "query: " << serialize(query) << "\nmode: " << to_string(mode)
              << "\nlp: " << (r.lp ? "true" : "false")
              << "\nlpm: " << (r.lpm ? "true" : "false")
              << "\nmodels: " << r.models
              << "\nconflict-minimal models: " << r.minimal_models.size() << "\n";
    for (const std::string& m : r.minimal_models) std::cout << "  " << m << "\n";
  }
  return r.lpm ? kEntailed : kNotEntailed;
}

int cmd_export(const Config& c) {
  const KnowledgeBase kb = load_kb(c.kb_path);
  const Proposition query = load_query(c.query);
  const Verdict v = decide_lpm(kb, query, parse_subsumption_mode(c.mode), c.limits());
  const fs::path dir(c.dot_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());

  if (c.what == "tableau") {
    write_file(dir / "tableau.dot", tableau_dot(v.proof.tableau));
    write_file(dir / "tableau.json", tableau_json(v.proof.tableau).dump(2) + "\n");
  } else {
    if (!v.af) {
      std::cerr << "paralogic: " << serialize(query)
                << " is entailed without assumptions; there is no "
                   "argumentation framework to export\n";
      return kInputError;
    }
    write_file(dir / "af.dot", af_dot(*v.af));
    nlohmann::ordered_json j = af_json(*v.af);
    j["stable_extensions"] = extensions_json(v.stable_extensions);
    j["preferred_extensions"] = extensions_json(preferred_extensions(*v.af));
    j["grounded_extension"] = grounded_extension(*v.af);
    write_file(dir / "af.json", j.dump(2) + "\n");
  }
  return v.entailed() ? kEntailed : kNotEntailed;
}

void add_common(CLI::App& cmd, Config& c) {
  cmd.add_option("kb", c.kb_path, "Knowledge base file")->required();
  cmd.add_option("query", c.query, "Query proposition, e.g. \"a : D\"")->required();
  cmd.add_option("--mode", c.mode, "Subsumption semantics")
      ->envname("PARALOGIC_MODE")
      ->check(CLI::IsMember({"internal", "material"}))
      ->capture_default_str();
  cmd.add_option("--max-nodes", c.max_nodes, "Tableau node budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--max-args", c.max_args, "Argument budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paraconsistent ALC reasoner", "paralogic"};
  app.require_subcommand(1);
  Config config;

  CLI::App* entail = app.add_subcommand("entail", "Decide conflict-minimal entailment");
  add_common(*entail, config);
  entail->add_option("--output", config.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* oracle = app.add_subcommand("oracle", "Enumerate models of a quantifier-free KB");
  add_common(*oracle, config);
  oracle->add_option("--output", config.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* exporter = app.add_subcommand("export", "Write DOT and JSON artifacts");
  exporter->add_option("what", config.what, "tableau or af")
      ->required()
      ->check(CLI::IsMember({"tableau", "af"}));
  add_common(*exporter, config);
  exporter->add_option("--dot-dir", config.dot_dir, "Output directory")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*entail) return cmd_entail(config);
    if (*oracle) return cmd_oracle(config);
    return cmd_export(config);
  } catch (const InputError& e) {
    std::cerr << "paralogic: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceCapError& e) {
    std::cerr << "paralogic: resource cap: " << e.what() << "\n";
    return kDiagnostic;
  } catch (const NoStableExtensionError& e) {
    std::cerr << "paralogic: " << e.what() << "\n";
    return kDiagnostic;
  } catch (const OracleInapplicableError& e) {
    std::cerr << "paralogic: " << e.what() << "\n";
    return kDiagnostic;
  }
}
