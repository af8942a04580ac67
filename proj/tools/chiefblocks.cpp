#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chief/cli/dot.hpp"
#include "chief/cli/report.hpp"

using namespace chief;
using namespace chief::cli;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Inline JSON when it looks like JSON, otherwise a file name.
std::string inline_or_file(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  return read_file(arg);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

GroupSpec load_spec(const std::string& spec_file, const std::string& group_name) {
  if (!spec_file.empty() && !group_name.empty()) raise(ErrorKind::InvalidArgument, "give either --spec or --group");
  if (!group_name.empty()) return named_spec(group_name);
  if (spec_file.empty()) raise(ErrorKind::InvalidArgument, "--spec FILE or --group NAME is required");
  try {
    return parse_spec(read_file(spec_file));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError) throw;
    raise(ErrorKind::ParseError, spec_file + ": " + e.message());
  }
}

int fail(ErrorKind kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = {{"kind", std::string(to_string(kind))}, {"message", message}};
  std::cerr << j.dump() << "\n";
  return exit_code(kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chief factors, chief blocks and components of finite groups"};
  app.require_subcommand(1);

  std::string spec_file, group_name, factorization_file, extend_normal, dot_which, dot_file;
  AnalysisOptions options;
  std::uint64_t seed = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a group and print a JSON report");
  analyze_cmd->add_option("--spec", spec_file, "Group spec file (JSON)");
  analyze_cmd->add_option("--group", group_name, "Named group, e.g. A5, S4, V4, A5wrC2");
  analyze_cmd->add_flag("--blocks", options.blocks, "Include chief blocks and their order");
  analyze_cmd->add_flag("--components", options.components, "Include components and semisimple type");
  analyze_cmd->add_option("--factorization", factorization_file, "Candidate factorization (JSON file)");
  analyze_cmd->add_option("--extend-normal", extend_normal,
                          "Normal subgroup H whose blocks are extended: inline JSON or file");
  analyze_cmd->add_option("--dot", dot_which, "association-graph, block-poset or normal-lattice")
      ->check(CLI::IsMember({"association-graph", "block-poset", "normal-lattice"}));
  analyze_cmd->add_option("-o,--output", dot_file, "DOT output file (default: stdout, replacing the report)");
  analyze_cmd->add_option("--element-cap", options.element_cap, "Maximum group order");
  analyze_cmd->add_option("--node-cap", options.node_cap, "Maximum number of normal subgroups");
  auto* seed_opt = analyze_cmd->add_option("--seed", seed, "Seed for a sampled axiom check");

  auto* render_cmd = app.add_subcommand("render", "Print a spec in canonical form");
  render_cmd->add_option("--spec", spec_file, "Group spec file (JSON)");
  render_cmd->add_option("--group", group_name, "Named group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto spec = load_spec(spec_file, group_name);
    if (render_cmd->parsed()) {
      std::cout << render(spec);
      return 0;
    }
    if (!factorization_file.empty()) options.factorization = parse_factorization(read_file(factorization_file));
    if (!extend_normal.empty()) {
      options.extend_normal = parse_subgroup_ref(inline_or_file(extend_normal));
      options.blocks = true;
    }
    if (*seed_opt) options.seed = seed;

    auto report = analyze(spec, options);
    if (dot_which.empty()) {
      std::cout << report.dump(2) << "\n";
    } else {
      auto dot = emit_dot(report, dot_which);
      if (dot_file.empty()) {
        std::cout << dot;
      } else {
        write_text(dot_file, dot);
        std::cout << report.dump(2) << "\n";
      }
    }
    return 0;
  } catch (const Error& e) {
    return fail(e.kind(), e.message());
  } catch (const std::exception& e) {
    return fail(ErrorKind::PostconditionFailed, e.what());
  }
}
