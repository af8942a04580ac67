#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "chief/cli/spec.hpp"
#include "chief/errors.hpp"
#include "chief/lattice.hpp"

namespace chief::cli {

inline constexpr int kReportSchemaVersion = 1;

// A normal subgroup named either by a lattice node id or by generators.
struct SubgroupRef {
  std::optional<std::size_t> node;
  std::vector<Elem> generators;
  bool operator==(const SubgroupRef&) const = default;
};

// Accepts {"node": k}, {"generators": [...]} or a bare generator array.
SubgroupRef parse_subgroup_ref(const std::string& text);
// Accepts {"parts": [ref, ...]} or a bare array of refs.
std::vector<SubgroupRef> parse_factorization(const std::string& text);

struct AnalysisOptions {
  bool blocks = false;
  bool components = false;
  std::optional<std::vector<SubgroupRef>> factorization;
  std::optional<SubgroupRef> extend_normal;
  std::size_t element_cap = kDefaultElementCap;
  std::size_t node_cap = kDefaultNodeCap;
  std::optional<std::uint64_t> seed;  // sampled axiom check
};

using Report = nlohmann::ordered_json;

Report analyze(const GroupSpec& spec, const AnalysisOptions& options);
Report analyze(const GroupPtr& g, const std::string& label, const AnalysisOptions& options);

// Process exit code for an error kind: 2 input, 3 caps, 4 internal.
int exit_code(ErrorKind kind);

}  // namespace chief::cli
