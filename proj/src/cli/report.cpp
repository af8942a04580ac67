#include "chief/cli/report.hpp"

#include <algorithm>
#include <cstdio>

#include "chief/blocks.hpp"
#include "chief/extensions.hpp"
#include "chief/products.hpp"
#include "chief/semisimple.hpp"
#include "chief/subgroup_ops.hpp"

namespace chief::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string hex(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::vector<Elem> generator_list(const Subgroup& s) { return {s.generators().begin(), s.generators().end()}; }

ordered_json subgroup_json(const NormalLattice& lattice, const Subgroup& s) {
  ordered_json j;
  j["order"] = s.order();
  if (auto i = lattice.index_of(s))
    j["node"] = *i;
  else
    j["node"] = nullptr;
  return j;
}

ordered_json factor_json(const NormalLattice& lattice, const NormalFactor& f) {
  ordered_json j;
  j["upper"] = lattice.require_index(f.upper());
  j["lower"] = lattice.require_index(f.lower());
  j["order"] = f.order();
  return j;
}

SubgroupRef ref_from_json(const json& j) {
  SubgroupRef r;
  if (j.is_array()) {
    r.generators = j.get<std::vector<Elem>>();
  } else if (j.is_object() && j.size() == 1 && j.contains("node")) {
    r.node = j.at("node").get<std::size_t>();
  } else if (j.is_object() && j.size() == 1 && j.contains("generators")) {
    r.generators = j.at("generators").get<std::vector<Elem>>();
  } else {
    raise(ErrorKind::ParseError, "expected {\"node\": k}, {\"generators\": [...]} or a generator array");
  }
  return r;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    raise(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": invalid JSON");
  }
}

template <class F>
auto with_json_errors(F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

Subgroup resolve(const NormalLattice& lattice, const SubgroupRef& r) {
  if (r.node) {
    if (*r.node >= lattice.size())
      raise(ErrorKind::InvalidArgument, "lattice node " + std::to_string(*r.node) + " does not exist");
    return lattice.node(*r.node);
  }
  const auto& g = lattice.group();
  for (auto x : r.generators)
    if (x >= g->order()) raise(ErrorKind::InvalidArgument, "element " + std::to_string(x) + " out of range");
  auto s = subgroup_generated(g, std::span<const Elem>(r.generators));
  if (!s.is_normal()) raise(ErrorKind::NotNormal, "subgroup is not normal");
  return s;
}

// Number of maximal chains, saturating at UINT64_MAX.
std::uint64_t count_chief_series(const NormalLattice& lattice) {
  std::vector<std::uint64_t> paths(lattice.size(), 0);
  paths[lattice.top()] = 1;
  for (std::size_t i = lattice.size(); i-- > 0;)
    for (auto j : lattice.upper_covers(i)) {
      auto sum = paths[i] + paths[j];
      paths[i] = sum < paths[i] ? UINT64_MAX : sum;
    }
  return paths[lattice.bottom()];
}

std::optional<std::size_t> factor_id(const std::vector<FactorIndex>& factors, const NormalLattice& lattice,
                                     const NormalFactor& f) {
  FactorIndex key{lattice.require_index(f.upper()), lattice.require_index(f.lower())};
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i] == key) return i;
  return std::nullopt;
}

// Only direct powers of one simple group can be characteristically simple;
// the socle and the atom orders rule out everything else cheaply.
bool may_be_charsimple(const NormalLattice& lattice) {
  if (lattice.size() < 2 || !socle(lattice).is_whole()) return false;
  auto atoms = lattice.atoms();
  for (auto a : atoms)
    if (lattice.node(a).order() != lattice.node(atoms.front()).order()) return false;
  return true;
}

ordered_json blocks_section(const NormalLattice& lattice, const BlockPoset& poset,
                            const std::vector<FactorIndex>& factors) {
  ordered_json out;
  out["count"] = poset.size();
  ordered_json list = ordered_json::array();
  for (const auto& b : poset.blocks()) {
    ordered_json j;
    j["id"] = b.id;
    j["centralizer"] = {{"node", lattice.require_index(b.centralizer)},
                        {"order", b.centralizer.order()},
                        {"fingerprint", hex(b.centralizer.fingerprint())}};
    j["representative_count"] = b.representatives.size();
    ordered_json reps = ordered_json::array();
    for (const auto& f : b.representatives)
      if (auto id = factor_id(factors, lattice, f)) reps.push_back(*id);
    j["representatives"] = reps;
    j["minimal_cover"] = subgroup_json(lattice, poset.minimal_cover(b.id));
    j["uppermost"] = factor_json(lattice, uppermost_representative(lattice, b));
    j["lowermost"] = factor_json(lattice, lowermost_representative(lattice, b));
    list.push_back(j);
  }
  out["blocks"] = list;

  ordered_json order = ordered_json::array(), hasse = ordered_json::array();
  for (std::size_t a = 0; a < poset.size(); ++a)
    for (std::size_t b = 0; b < poset.size(); ++b) {
      if (a == b || !block_le(poset, a, b)) continue;
      order.push_back({a, b});
      bool cover = true;
      for (std::size_t c = 0; c < poset.size() && cover; ++c)
        if (c != a && c != b && poset.leq(a, c) && poset.leq(c, b)) cover = false;
      if (cover) hasse.push_back({a, b});
    }
  out["order"] = order;
  out["hasse"] = hasse;
  out["antichain"] = poset.is_antichain();
  return out;
}

ordered_json components_section(const NormalLattice& lattice) {
  const auto& g = lattice.group();
  auto report = component_report(lattice);
  ordered_json out;
  ordered_json list = ordered_json::array();
  for (const auto& m : report.components) {
    ordered_json j;
    j["order"] = m.order();
    j["generators"] = generator_list(m);
    j["normal"] = m.is_normal();
    j["normal_closure"] = subgroup_json(lattice, normal_closure(m));
    list.push_back(j);
  }
  out["count"] = report.components.size();
  out["components"] = list;
  out["layer"] = subgroup_json(lattice, report.layer);
  out["center_order"] = center(g).order();
  out["semisimple_type"] = std::string(to_string(report.type));
  if (may_be_charsimple(lattice)) {
    try {
      out["charsimple_type"] = std::string(to_string(charsimple_type(g)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotCharacteristicallySimple) throw;
      out["charsimple_type"] = nullptr;
    }
  } else {
    out["charsimple_type"] = nullptr;
  }
  return out;
}

std::string_view kind_name(FactorizationKind k) {
  switch (k) {
    case FactorizationKind::GeneralizedCentral: return "generalized-central";
    case FactorizationKind::QuasiDirect: return "quasi-direct";
    case FactorizationKind::Neither: return "neither";
  }
  return "?";
}

ordered_json factorization_section(const NormalLattice& lattice, const std::vector<SubgroupRef>& refs,
                                   std::size_t cap) {
  const auto& g = lattice.group();
  std::vector<Subgroup> parts;
  for (const auto& r : refs) parts.push_back(resolve(lattice, r));
  auto f = classify_factorization(g, parts);
  ordered_json out;
  ordered_json plist = ordered_json::array();
  for (const auto& p : parts) plist.push_back(subgroup_json(lattice, p));
  out["parts"] = plist;
  out["kind"] = std::string(kind_name(f.kind));
  out["generalized_central"] = f.kind != FactorizationKind::Neither;
  out["quasi_direct"] = f.kind == FactorizationKind::QuasiDirect;
  out["complement_intersection"] = subgroup_json(lattice, complement_intersection(g, parts));
  if (f.kind != FactorizationKind::Neither && parts.size() <= 4)
    out["independence"] = has_independence_property(g, parts);
  if (f.kind != FactorizationKind::Neither && parts.size() >= 2) {
    auto d = diagonal_map(g, parts, cap);
    out["diagonal_map"] = {{"kernel", subgroup_json(lattice, d.kernel)},
                           {"kernel_central", d.kernel.is_subset_of(center(g))},
                           {"injective", d.injective}};
  }
  return out;
}

ordered_json extension_section(const NormalLattice& lattice, const SubgroupRef& ref) {
  auto h = resolve(lattice, ref);
  auto p = normal_pair(lattice, h);
  ordered_json out;
  out["h"] = subgroup_json(lattice, h);
  out["h_blocks"] = p.blocks_h.size();
  ordered_json ext = ordered_json::array();
  for (std::size_t a = 0; a < p.blocks_h.size(); ++a) {
    auto e = extend_block(p, a);
    auto ao = antichain_orbit_analysis(p, a);
    ordered_json j;
    j["h_block"] = a;
    j["g_block"] = e.block;
    j["m"] = subgroup_json(lattice, e.m);
    j["n"] = subgroup_json(lattice, e.n);
    j["antichain_orbit"] = ao.antichain_orbit;
    j["minimal_over_n"] = ao.minimal.size();
    ext.push_back(j);
  }
  out["extensions"] = ext;
  auto st = stacking_structure(p);
  auto induced = extension_poset_check(p);
  ordered_json classes = ordered_json::array();
  for (std::size_t c = 0; c < st.classes.size(); ++c)
    classes.push_back({{"members", st.classes[c]},
                       {"kind", std::string(to_string(st.kinds[c]))},
                       {"g_block", induced.class_image[c]}});
  out["stacking_classes"] = classes;
  out["poset_isomorphism"] = true;  // extension_poset_check throws otherwise
  return out;
}

}  // namespace

SubgroupRef parse_subgroup_ref(const std::string& text) {
  auto j = parse_json(text);
  return with_json_errors([&] { return ref_from_json(j); });
}

std::vector<SubgroupRef> parse_factorization(const std::string& text) {
  auto j = parse_json(text);
  return with_json_errors([&] {
    const json& parts = j.is_object() ? j.at("parts") : j;
    if (!parts.is_array()) raise(ErrorKind::ParseError, "expected an array of parts");
    std::vector<SubgroupRef> out;
    for (const auto& p : parts) out.push_back(ref_from_json(p));
    return out;
  });
}

Report analyze(const GroupSpec& spec, const AnalysisOptions& options) {
  return analyze(build_group(spec, options.element_cap), describe(spec), options);
}

Report analyze(const GroupPtr& g, const std::string& label, const AnalysisOptions& options) {
  Report r;
  r["schema_version"] = kReportSchemaVersion;

  if (options.seed) g->verify_axioms(0, *options.seed);

  ordered_json group;
  group["label"] = label;
  group["order"] = g->order();
  group["center_order"] = center(g).order();
  group["abelian"] = g->is_abelian();
  group["perfect"] = derived_subgroup(g).is_whole();
  ordered_json gens = ordered_json::array();
  for (auto x : g->generators()) gens.push_back({{"id", x}, {"element", g->describe(x)}});
  group["generators"] = gens;
  r["group"] = group;
  if (options.seed) r["axiom_check"] = {{"seed", *options.seed}, {"passed", true}};

  auto lattice = normal_subgroups(g, options.node_cap);
  ordered_json lat;
  lat["node_count"] = lattice.size();
  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& n = lattice.node(i);
    nodes.push_back({{"id", i}, {"order", n.order()}, {"generators", generator_list(n)},
                     {"fingerprint", hex(n.fingerprint())}});
  }
  lat["nodes"] = nodes;
  ordered_json hasse = ordered_json::array();
  for (auto [lo, hi] : lattice.covers()) hasse.push_back({lo, hi});
  lat["hasse"] = hasse;
  lat["chief_series_count"] = count_chief_series(lattice);
  r["normal_lattice"] = lat;

  auto factors = chief_factor_indices(lattice);
  std::optional<BlockPoset> poset;
  if (options.blocks) poset = chief_blocks(lattice);
  ordered_json cf = ordered_json::array();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto f = make_factor(lattice, factors[i]);
    ordered_json j;
    j["id"] = i;
    j["upper"] = factors[i].upper;
    j["lower"] = factors[i].lower;
    j["order"] = f.order();
    j["abelian"] = is_abelian_factor(f);
    if (poset) {
      if (auto b = poset->block_of(f))
        j["block"] = *b;
      else
        j["block"] = nullptr;
    }
    cf.push_back(j);
  }
  r["chief_factors"] = cf;

  auto graph = association_graph(lattice);
  ordered_json edges = ordered_json::array();
  for (auto [a, b] : graph.edges) {
    auto ia = factor_id(factors, lattice, graph.vertices[a]);
    auto ib = factor_id(factors, lattice, graph.vertices[b]);
    ensure(ia && ib, "association graph vertex is not a chief factor");
    edges.push_back({std::min(*ia, *ib), std::max(*ia, *ib)});
  }
  std::sort(edges.begin(), edges.end());
  r["association_graph"] = {{"vertex_count", factors.size()}, {"edges", edges}};

  if (poset) r["blocks"] = blocks_section(lattice, *poset, factors);
  if (options.components) r["components"] = components_section(lattice);
  if (options.factorization) r["factorization"] = factorization_section(lattice, *options.factorization, options.element_cap);
  if (options.extend_normal) r["extension"] = extension_section(lattice, *options.extend_normal);
  return r;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded:
    case ErrorKind::SearchCapExceeded:
    case ErrorKind::NodeCapExceeded:
    case ErrorKind::OracleBoundExceeded:
      return 3;
    case ErrorKind::ParseError:
    case ErrorKind::UnknownName:
    case ErrorKind::BadAction:
    case ErrorKind::InvalidPermutation:
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotNormal:
    case ErrorKind::ActionNotHomomorphism:
    case ErrorKind::ActionNotAutomorphism:
    case ErrorKind::SectionMissing:
      return 2;
    default:
      return 4;
  }
}

}  // namespace chief::cli
