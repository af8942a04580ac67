#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chief/construct.hpp"

namespace chief::cli {

enum class SpecKind { Perm, Direct, Semidirect, Quotient, CentralProduct, Named };
std::string_view to_string(SpecKind k);

// Tree-structured group description.  Only the fields of the active kind are
// used; operands hold left/right, base/top or the quotiented group.
struct GroupSpec {
  SpecKind kind = SpecKind::Named;
  std::string name;                                              // named
  std::size_t points = 0;                                        // perm
  std::vector<std::vector<std::vector<std::uint32_t>>> generators;  // perm: cycles per generator
  std::vector<GroupSpec> operands;
  std::vector<std::vector<Elem>> action;                         // semidirect: table per top generator
  std::vector<Elem> kernel;                                      // quotient: generators of the kernel
  std::vector<std::pair<Elem, Elem>> identify;                   // central_product

  bool operator==(const GroupSpec&) const = default;
};

GroupSpec named_spec(const std::string& name);

// JSON text to spec.  Syntax errors carry line and column; schema errors
// carry the JSON pointer of the offending value.  Throws ParseError,
// UnknownName or BadAction.
GroupSpec parse_spec(const std::string& text);
// Canonical JSON text; parse_spec(render(s)) == s.
std::string render(const GroupSpec& spec);

// Short human-readable label, e.g. "(A5 x A5) : C2".
std::string describe(const GroupSpec& spec);

GroupPtr build_group(const GroupSpec& spec, std::size_t element_cap = kDefaultElementCap);

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset);

}  // namespace chief::cli
