#pragma once

#include <vector>

#include "chief/factors.hpp"

namespace chief {

// An association class of non-abelian chief factors, keyed by C_G(a).
struct ChiefBlock {
  std::size_t id = 0;
  Subgroup centralizer;
  std::vector<NormalFactor> representatives;
};

class BlockPoset {
 public:
  BlockPoset(NormalLattice lattice, std::vector<ChiefBlock> blocks);

  const GroupPtr& group() const { return lattice_.group(); }
  const NormalLattice& lattice() const { return lattice_; }
  std::size_t size() const { return blocks_.size(); }
  const ChiefBlock& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<ChiefBlock>& blocks() const { return blocks_; }

  // C_G(a) contained in C_G(b)
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * blocks_.size() + b] != 0; }
  // G_a; every block of a finite group is minimally covered.
  const Subgroup& minimal_cover(std::size_t a) const { return minimal_covers_[a]; }
  // Block with the given centralizer, if any.
  std::optional<std::size_t> find_by_centralizer(const Subgroup& c) const;
  // Block containing a non-abelian chief factor, if any.
  std::optional<std::size_t> block_of(const NormalFactor& f) const;
  bool is_antichain() const;

 private:
  NormalLattice lattice_;
  std::vector<ChiefBlock> blocks_;
  std::vector<char> leq_;
  std::vector<Subgroup> minimal_covers_;
};

// Partition of the non-abelian chief factors by centralizer; ids follow the
// canonical order of the centralizers.
BlockPoset chief_blocks(const NormalLattice& lattice);

enum class CoverStatus { Covers, Below, Above };

CoverStatus cover_status(const NormalFactor& f, const ChiefBlock& a);
// N read as N/1
CoverStatus cover_status(const Subgroup& n, const ChiefBlock& a);
bool covers(const NormalFactor& f, const ChiefBlock& a);
bool covers(const Subgroup& n, const ChiefBlock& a);

// Lattice indices of the normal subgroups covering a.
std::vector<std::size_t> covering_filter(const NormalLattice& lattice, const ChiefBlock& a);
// Intersection of the covering filter; asserted to cover a.
Subgroup minimal_cover(const NormalLattice& lattice, const ChiefBlock& a);

Subgroup socle(const NormalLattice& lattice);
bool is_monolithic(const NormalLattice& lattice);

// G^a / C_G(a), with G^a / C_G(a) the socle of the monolithic G / C_G(a).
NormalFactor uppermost_representative(const NormalLattice& lattice, const ChiefBlock& a);
// G_a / C_{G_a}(a)
NormalFactor lowermost_representative(const NormalLattice& lattice, const ChiefBlock& a);

// Centralizer containment, cross-checked against the covering
// characterizations of the order.
bool block_le(const BlockPoset& poset, std::size_t a, std::size_t b);

struct Refinement {
  std::size_t index = 0;  // i with G_i <= B < D <= G_{i+1}
  Subgroup centralizer_part;  // B = C_{G_{i+1}}(K/L)
  Subgroup inner_part;        // R
  Subgroup a_part;            // A = [R,K] B
  Subgroup refined;           // D = [A,A] B
};

// Locates the unique interval of the chain that contains a factor associated
// to the non-abelian chief factor f, and constructs it.
Refinement refine_series(const NormalLattice& lattice, const std::vector<Subgroup>& series, const NormalFactor& f);

// Indices i such that G_{i+1}/G_i covers a.
std::vector<std::size_t> covering_intervals(const std::vector<Subgroup>& series, const ChiefBlock& a);

}  // namespace chief
