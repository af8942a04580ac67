#pragma once

#include <string>

#include "chief/cli/report.hpp"

namespace chief::cli {

// which: "association-graph" (undirected), "block-poset" or "normal-lattice"
// (Hasse diagrams, drawn upward).  Throws SectionMissing when the report
// lacks the section and InvalidArgument for an unknown name.
std::string emit_dot(const Report& report, const std::string& which);

}  // namespace chief::cli
