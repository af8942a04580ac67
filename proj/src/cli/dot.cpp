#include "chief/cli/dot.hpp"

#include <sstream>

namespace chief::cli {

namespace {

const Report& section(const Report& report, const char* key) {
  if (!report.contains(key)) raise(ErrorKind::SectionMissing, std::string("report has no '") + key + "' section");
  return report.at(key);
}

std::string size_of(const Report& subgroup) { return std::to_string(subgroup.at("order").get<std::size_t>()); }

std::string association_graph(const Report& report) {
  const auto& factors = section(report, "chief_factors");
  const auto& graph = section(report, "association_graph");
  const auto& nodes = section(report, "normal_lattice").at("nodes");
  std::ostringstream out;
  out << "graph association {\n  node [shape=box];\n";
  for (const auto& f : factors) {
    auto id = f.at("id").get<std::size_t>();
    out << "  f" << id << " [label=\"F" << id << ": |K|=" << size_of(nodes.at(f.at("upper").get<std::size_t>()))
        << " |L|=" << size_of(nodes.at(f.at("lower").get<std::size_t>()));
    if (f.contains("block") && !f.at("block").is_null()) out << "\\nblock " << f.at("block").get<std::size_t>();
    out << "\"";
    if (f.at("abelian").get<bool>()) out << " style=dashed";
    out << "];\n";
  }
  for (const auto& e : graph.at("edges")) out << "  f" << e.at(0) << " -- f" << e.at(1) << ";\n";
  out << "}\n";
  return out.str();
}

std::string block_poset(const Report& report) {
  const auto& blocks = section(report, "blocks");
  std::ostringstream out;
  out << "digraph blocks {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (const auto& b : blocks.at("blocks")) {
    auto id = b.at("id").get<std::size_t>();
    out << "  b" << id << " [label=\"block " << id << "\\n|C|=" << size_of(b.at("centralizer"))
        << " |G_a|=" << size_of(b.at("minimal_cover")) << "\"];\n";
  }
  for (const auto& e : blocks.at("hasse")) out << "  b" << e.at(0) << " -> b" << e.at(1) << ";\n";
  out << "}\n";
  return out.str();
}

std::string normal_lattice(const Report& report) {
  const auto& lattice = section(report, "normal_lattice");
  std::ostringstream out;
  out << "digraph normal_lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (const auto& n : lattice.at("nodes")) {
    auto id = n.at("id").get<std::size_t>();
    out << "  n" << id << " [label=\"N" << id << "\\n" << size_of(n) << "\"];\n";
  }
  for (const auto& e : lattice.at("hasse")) out << "  n" << e.at(0) << " -> n" << e.at(1) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string emit_dot(const Report& report, const std::string& which) {
  if (which == "association-graph") return association_graph(report);
  if (which == "block-poset") return block_poset(report);
  if (which == "normal-lattice") return normal_lattice(report);
  raise(ErrorKind::InvalidArgument, "unknown graph '" + which + "'");
}

}  // namespace chief::cli
