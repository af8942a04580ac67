#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chief/subgroup.hpp"

namespace chief {

inline constexpr std::size_t kDefaultNodeCap = 10000;

// All normal subgroups of a group, sorted canonically (by order, then by
// member list).  Node 0 is the trivial subgroup, the last node the group.
class NormalLattice {
 public:
  NormalLattice(GroupPtr group, std::vector<Subgroup> nodes);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return nodes_.size(); }
  const Subgroup& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Subgroup>& nodes() const { return nodes_; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return nodes_.size() - 1; }

  std::optional<std::size_t> index_of(const Subgroup& sub) const;
  std::optional<std::size_t> index_of(const ElementSet& members) const;
  // Throws NotNormal when sub is not a node.
  std::size_t require_index(const Subgroup& sub) const;

  bool leq(std::size_t i, std::size_t j) const { return leq_[i * nodes_.size() + j] != 0; }
  bool lt(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  // Covering pairs (lower, upper).
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_[i]; }
  bool is_cover(std::size_t lower, std::size_t upper) const;

  std::size_t join(std::size_t i, std::size_t j) const;
  std::size_t meet(std::size_t i, std::size_t j) const;
  // Minimal non-trivial nodes.
  std::vector<std::size_t> atoms() const;

 private:
  GroupPtr group_;
  std::vector<Subgroup> nodes_;
  std::vector<char> leq_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::unordered_multimap<std::uint64_t, std::size_t> by_fingerprint_;
};

// Join-closure of the normal closures of conjugacy class representatives.
NormalLattice normal_subgroups(const GroupPtr& g, std::size_t node_cap = kDefaultNodeCap);

bool is_chief_factor(const NormalLattice& lattice, const Subgroup& k, const Subgroup& l);

struct FactorIndex {
  std::size_t upper;  // K
  std::size_t lower;  // L
  bool operator==(const FactorIndex&) const = default;
};

// Covering pairs, ordered by (upper, lower).
std::vector<FactorIndex> chief_factor_indices(const NormalLattice& lattice);

// Enumerates maximal chains bottom to top in lexicographic order of node ids.
class ChiefSeriesEnumerator {
 public:
  explicit ChiefSeriesEnumerator(const NormalLattice& lattice, std::size_t max_series = SIZE_MAX);
  std::optional<std::vector<std::size_t>> next();

 private:
  const NormalLattice* lattice_;
  std::size_t remaining_;
  std::vector<std::size_t> chain_;
  std::vector<std::size_t> branch_;
  bool started_ = false;
};

std::vector<std::vector<std::size_t>> chief_series(const NormalLattice& lattice, std::size_t max_series = SIZE_MAX);

inline constexpr std::size_t kOracleBound = 24;

// Every subgroup, by adding one element at a time to known subgroups.
std::vector<Subgroup> oracle_all_subgroups(const GroupPtr& g);

}  // namespace chief
