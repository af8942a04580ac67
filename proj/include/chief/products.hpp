#pragma once

#include <optional>
#include <vector>

#include "chief/construct.hpp"

namespace chief {

enum class FactorizationKind { GeneralizedCentral, QuasiDirect, Neither };

struct Factorization {
  GroupPtr group;
  std::vector<Subgroup> parts;
  FactorizationKind kind = FactorizationKind::Neither;
  std::vector<Subgroup> complements;  // G_{S \ {N}} per part
};

// G_J: join of the parts (trivial for none).
Subgroup join_of(const GroupPtr& g, const std::vector<Subgroup>& parts);
// G_{S \ {N}} for part index i.
Subgroup complement(const GroupPtr& g, const std::vector<Subgroup>& parts, std::size_t i);

// Join is G and distinct parts commute.  Throws NotNormal.
bool is_generalized_central_factorization(const GroupPtr& g, const std::vector<Subgroup>& parts);
// Generalized central plus the intersection of complements being trivial
// (for a single part: the join is G).
bool is_quasi_direct_factorization(const GroupPtr& g, const std::vector<Subgroup>& parts);
// The independence property over every X in P(S) with empty intersection;
// exponential, for |S| <= 4.
bool has_independence_property(const GroupPtr& g, const std::vector<Subgroup>& parts);
// Intersection of the complements G_{S \ {N}}.
Subgroup complement_intersection(const GroupPtr& g, const std::vector<Subgroup>& parts);

Factorization classify_factorization(const GroupPtr& g, const std::vector<Subgroup>& parts);

struct DiagonalMap {
  Subgroup kernel;
  bool injective = false;
  std::vector<GroupPtr> coordinates;         // G / G_{S \ {N}}
  std::optional<Homomorphism> map;           // into the product, when within the cap
  std::optional<GroupPtr> codomain;
};
// Throws NotGeneralizedCentral.
DiagonalMap diagonal_map(const GroupPtr& g, const std::vector<Subgroup>& parts, std::size_t cap = kDefaultElementCap);

// delta: G -> P where P is a direct product; factors are the coordinate
// subgroups of P.  Returns the quasi-direct factorization of <S> with
// S = {delta^-1(K)}, over the subgroup <S> materialized as a group.
struct SubdirectResult {
  std::vector<Subgroup> preimages;  // in G
  Subgroup generated;               // <S> in G
  SubgroupGroup generated_group;
  Factorization factorization;      // over generated_group.group
};
SubdirectResult subdirect_quasi_factorization(const Homomorphism& delta, const std::vector<Subgroup>& factors);

struct CentralQuotientResult {
  Subgroup m;
  std::optional<QuotientResult> quotient;
  std::optional<Factorization> factorization;  // of G/M, when M is proper
};
CentralQuotientResult central_quotient_factorization(const GroupPtr& g, const std::vector<Subgroup>& parts,
                                                     const Subgroup& n);

struct CompressionSemidirect {
  GroupPtr product;           // G x| O
  Homomorphism pi;            // (g, o) -> psi(g) o
  Homomorphism iota;          // g -> (g, 1)
  Subgroup kernel;            // ker pi
  bool normal_compression;    // psi(G) = H
  bool proper_compression;    // always false between finite groups
  bool generates;             // iota(G) ker(pi) = P
};
// o defaults to the whole of H.  Throws NotInjective, ImageNotNormal.
CompressionSemidirect compression_semidirect(const Homomorphism& psi, std::optional<Subgroup> o = std::nullopt);

}  // namespace chief
