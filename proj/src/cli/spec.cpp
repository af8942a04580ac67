#include "chief/cli/spec.hpp"

#include <json.hpp>
#include <regex>

#include "chief/errors.hpp"
#include "chief/subgroup_ops.hpp"

namespace chief::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::pair<SpecKind, const char*> kKindNames[] = {
    {SpecKind::Perm, "perm"},
    {SpecKind::Direct, "direct"},
    {SpecKind::Semidirect, "semidirect"},
    {SpecKind::Quotient, "quotient"},
    {SpecKind::CentralProduct, "central_product"},
    {SpecKind::Named, "named"},
};

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  raise(ErrorKind::ParseError, "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

bool is_catalogue_name(const std::string& name) {
  static const std::regex pattern("Q8|V4|SL23|SL25|ES32|A5wrC2|[CSAD][1-9][0-9]{0,5}");
  return std::regex_match(name, pattern);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing field '") + key + "'");
  return *it;
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) schema_error(path, "unexpected field '" + k + "'");
  }
}

std::uint32_t as_index(const json& v, const std::string& path, ErrorKind kind = ErrorKind::ParseError) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    if (kind == ErrorKind::ParseError) schema_error(path, "expected a non-negative integer");
    raise(kind, "at " + path + ": expected a non-negative integer");
  }
  auto x = v.get<std::uint64_t>();
  if (x > UINT32_MAX) schema_error(path, "integer out of range");
  return static_cast<std::uint32_t>(x);
}

const json& as_array(const json& v, const std::string& path, ErrorKind kind = ErrorKind::ParseError) {
  if (!v.is_array()) {
    if (kind == ErrorKind::ParseError) schema_error(path, "expected an array");
    raise(kind, "at " + path + ": expected an array");
  }
  return v;
}

std::vector<Elem> id_list(const json& v, const std::string& path) {
  std::vector<Elem> out;
  const auto& arr = as_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_index(arr[i], path + "/" + std::to_string(i)));
  return out;
}

GroupSpec spec_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  const auto& kind_value = field(j, path, "kind");
  if (!kind_value.is_string()) schema_error(path + "/kind", "expected a string");
  const auto kind_name = kind_value.get<std::string>();

  GroupSpec s;
  bool found = false;
  for (auto [k, n] : kKindNames)
    if (kind_name == n) s.kind = k, found = true;
  if (!found) schema_error(path + "/kind", "unknown kind '" + kind_name + "'");

  switch (s.kind) {
    case SpecKind::Named: {
      only_keys(j, path, {"kind", "name"});
      const auto& n = field(j, path, "name");
      if (!n.is_string()) schema_error(path + "/name", "expected a string");
      s.name = n.get<std::string>();
      if (!is_catalogue_name(s.name)) raise(ErrorKind::UnknownName, "unknown group name '" + s.name + "'");
      break;
    }
    case SpecKind::Perm: {
      only_keys(j, path, {"kind", "points", "generators"});
      s.points = as_index(field(j, path, "points"), path + "/points");
      const auto gpath = path + "/generators";
      const auto& gens = as_array(field(j, path, "generators"), gpath);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const auto cpath = gpath + "/" + std::to_string(g);
        auto& cycles = s.generators.emplace_back();
        const auto& arr = as_array(gens[g], cpath);
        for (std::size_t c = 0; c < arr.size(); ++c)
          cycles.push_back(id_list(arr[c], cpath + "/" + std::to_string(c)));
      }
      break;
    }
    case SpecKind::Direct:
    case SpecKind::CentralProduct: {
      const bool central = s.kind == SpecKind::CentralProduct;
      if (central)
        only_keys(j, path, {"kind", "left", "right", "identify"});
      else
        only_keys(j, path, {"kind", "left", "right"});
      s.operands.push_back(spec_from_json(field(j, path, "left"), path + "/left"));
      s.operands.push_back(spec_from_json(field(j, path, "right"), path + "/right"));
      if (central) {
        const auto ipath = path + "/identify";
        const auto& pairs = as_array(field(j, path, "identify"), ipath);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          auto ids = id_list(pairs[i], ipath + "/" + std::to_string(i));
          if (ids.size() != 2) schema_error(ipath + "/" + std::to_string(i), "expected a pair");
          s.identify.emplace_back(ids[0], ids[1]);
        }
      }
      break;
    }
    case SpecKind::Semidirect: {
      only_keys(j, path, {"kind", "base", "top", "action"});
      s.operands.push_back(spec_from_json(field(j, path, "base"), path + "/base"));
      s.operands.push_back(spec_from_json(field(j, path, "top"), path + "/top"));
      const auto apath = path + "/action";
      const auto& tables = as_array(field(j, path, "action"), apath, ErrorKind::BadAction);
      for (std::size_t t = 0; t < tables.size(); ++t) {
        const auto tpath = apath + "/" + std::to_string(t);
        const auto& arr = as_array(tables[t], tpath, ErrorKind::BadAction);
        auto& table = s.action.emplace_back();
        for (std::size_t i = 0; i < arr.size(); ++i)
          table.push_back(as_index(arr[i], tpath + "/" + std::to_string(i), ErrorKind::BadAction));
      }
      break;
    }
    case SpecKind::Quotient: {
      only_keys(j, path, {"kind", "group", "kernel"});
      s.operands.push_back(spec_from_json(field(j, path, "group"), path + "/group"));
      s.kernel = id_list(field(j, path, "kernel"), path + "/kernel");
      break;
    }
  }
  return s;
}

ordered_json spec_to_json(const GroupSpec& s) {
  ordered_json j;
  j["kind"] = std::string(to_string(s.kind));
  switch (s.kind) {
    case SpecKind::Named:
      j["name"] = s.name;
      break;
    case SpecKind::Perm:
      j["points"] = s.points;
      j["generators"] = s.generators;
      break;
    case SpecKind::Direct:
      j["left"] = spec_to_json(s.operands.at(0));
      j["right"] = spec_to_json(s.operands.at(1));
      break;
    case SpecKind::CentralProduct: {
      j["left"] = spec_to_json(s.operands.at(0));
      j["right"] = spec_to_json(s.operands.at(1));
      ordered_json pairs = ordered_json::array();
      for (auto [a, b] : s.identify) pairs.push_back({a, b});
      j["identify"] = pairs;
      break;
    }
    case SpecKind::Semidirect:
      j["base"] = spec_to_json(s.operands.at(0));
      j["top"] = spec_to_json(s.operands.at(1));
      j["action"] = s.action;
      break;
    case SpecKind::Quotient:
      j["group"] = spec_to_json(s.operands.at(0));
      j["kernel"] = s.kernel;
      break;
  }
  return j;
}

std::string wrap(const GroupSpec& s) {
  auto d = describe(s);
  return s.kind == SpecKind::Named || s.kind == SpecKind::Perm ? d : "(" + d + ")";
}

}  // namespace

std::string_view to_string(SpecKind k) {
  for (auto [kind, n] : kKindNames)
    if (kind == k) return n;
  return "?";
}

GroupSpec named_spec(const std::string& name) {
  if (!is_catalogue_name(name)) raise(ErrorKind::UnknownName, "unknown group name '" + name + "'");
  GroupSpec s;
  s.kind = SpecKind::Named;
  s.name = name;
  return s;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

GroupSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte counts characters read, so the offending one sits at e.byte - 1
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    raise(ErrorKind::ParseError,
          "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }
  return spec_from_json(j, "");
}

std::string render(const GroupSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

std::string describe(const GroupSpec& s) {
  switch (s.kind) {
    case SpecKind::Named: return s.name;
    case SpecKind::Perm: return "perm group on " + std::to_string(s.points) + " points";
    case SpecKind::Direct: return wrap(s.operands.at(0)) + " x " + wrap(s.operands.at(1));
    case SpecKind::CentralProduct: return wrap(s.operands.at(0)) + " o " + wrap(s.operands.at(1));
    case SpecKind::Semidirect: return wrap(s.operands.at(0)) + " : " + wrap(s.operands.at(1));
    case SpecKind::Quotient: return wrap(s.operands.at(0)) + " / K";
  }
  return {};
}

GroupPtr build_group(const GroupSpec& s, std::size_t cap) {
  switch (s.kind) {
    case SpecKind::Named:
      return named_group(s.name, cap);
    case SpecKind::Perm: {
      std::vector<Permutation> gens;
      for (const auto& cycles : s.generators) {
        for (const auto& c : cycles)
          for (auto x : c)
            if (x >= s.points)
              raise(ErrorKind::InvalidPermutation, "point " + std::to_string(x) + " out of range");
        gens.push_back(Permutation::from_cycles(s.points, cycles));
      }
      return group_from_permutations(gens, s.points, cap, describe(s));
    }
    case SpecKind::Direct:
      return direct_product(build_group(s.operands.at(0), cap), build_group(s.operands.at(1), cap), cap);
    case SpecKind::CentralProduct:
      return central_product(build_group(s.operands.at(0), cap), build_group(s.operands.at(1), cap), s.identify);
    case SpecKind::Semidirect: {
      auto base = build_group(s.operands.at(0), cap);
      auto top = build_group(s.operands.at(1), cap);
      for (const auto& t : s.action)
        if (t.size() != base->order())
          raise(ErrorKind::BadAction, "action table of length " + std::to_string(t.size()) +
                                          " for a base of order " + std::to_string(base->order()));
      return semidirect_product_from_generators(base, top, s.action, cap);
    }
    case SpecKind::Quotient: {
      auto g = build_group(s.operands.at(0), cap);
      for (auto x : s.kernel)
        if (x >= g->order()) raise(ErrorKind::InvalidArgument, "kernel generator " + std::to_string(x) + " out of range");
      auto k = subgroup_generated(g, std::span<const Elem>(s.kernel));
      return quotient(k).group;
    }
  }
  raise(ErrorKind::InvalidArgument, "unhandled spec kind");
}

}  // namespace chief::cli
