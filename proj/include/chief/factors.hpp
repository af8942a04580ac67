#pragma once

#include <utility>
#include <vector>

#include "chief/construct.hpp"
#include "chief/lattice.hpp"

namespace chief {

// K/L for normal subgroups L < K of a common group.
class NormalFactor {
 public:
  // Throws NotNormal, NotStrictlyNested or DifferentParents.
  NormalFactor(Subgroup upper, Subgroup lower);

  const Subgroup& upper() const { return upper_; }
  const Subgroup& lower() const { return lower_; }
  const GroupPtr& group() const { return upper_.parent(); }
  std::size_t order() const { return upper_.order() / lower_.order(); }

  bool operator==(const NormalFactor& other) const { return upper_ == other.upper_ && lower_ == other.lower_; }

 private:
  Subgroup upper_;
  Subgroup lower_;
};

NormalFactor make_factor(const Subgroup& k, const Subgroup& l);
NormalFactor make_factor(const NormalLattice& lattice, FactorIndex f);

struct FactorGroup {
  GroupPtr group;           // K/L
  SubgroupGroup upper;      // K as a group, with its inclusion into G
  Homomorphism projection;  // K -> K/L, on the local ids of upper.group
};
FactorGroup factor_group(const NormalFactor& f);

enum class CentralizerMode {
  Generators,   // test [g,k] in L for generators k of K
  AllElements,  // test every k in K (oracle)
};

// C_G(K/L) = {g : [g,k] in L for all k in K}
Subgroup factor_centralizer(const NormalFactor& f, CentralizerMode mode = CentralizerMode::Generators);

bool is_abelian_factor(const NormalFactor& f);

// K1 L2 = K2 L1, K1 meet L1 L2 = L1, K2 meet L1 L2 = L2.
bool are_associated(const NormalFactor& f1, const NormalFactor& f2);
// f1 -> f2: K2 = K1 L2 and L1 = K1 meet L2.
bool is_internal_compression(const NormalFactor& f1, const NormalFactor& f2);
// (K1 K2)/(L1 L2); throws NotAssociated.
NormalFactor common_compression(const NormalFactor& f1, const NormalFactor& f2);

std::vector<NormalFactor> chief_factors(const NormalLattice& lattice);

struct AssociationGraph {
  std::vector<NormalFactor> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
};
AssociationGraph association_graph(const NormalLattice& lattice);

}  // namespace chief
