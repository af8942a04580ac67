#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chief/element_set.hpp"
#include "chief/permutation.hpp"

namespace chief {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr std::size_t kDefaultElementCap = 30000;
inline constexpr std::size_t kCayleyTableLimit = 1024;

enum class Construction { Permutations, DirectProduct, SemidirectProduct, Quotient, Subgroup, Named };

// How a group was built.  For products, maps[i] embeds operand i; for a
// quotient, maps[0] is the projection from operand 0; for a subgroup-as-group,
// maps[0] lists the parent ids of the local elements.
struct Provenance {
  Construction kind = Construction::Permutations;
  std::string label;
  std::string name;  // set for groups built from the named catalogue
  std::vector<GroupPtr> operands;
  std::vector<std::vector<Elem>> maps;
};

class MulBackend {
 public:
  virtual ~MulBackend() = default;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual std::string describe(Elem a) const { return "e" + std::to_string(a); }
};

// Explicitly enumerated finite group.  Element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t order, std::unique_ptr<const MulBackend> backend,
              std::vector<Elem> generators, Provenance provenance,
              std::vector<Permutation> permutations = {});

  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }

  Elem mul(Elem a, Elem b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    return backend_->mul(a, b);
  }
  Elem inv(Elem a) const { return inv_[a]; }
  // g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv_[g]); }
  // [a,b] = a b a^-1 b^-1
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv_[a], inv_[b])); }
  Elem pow(Elem a, long long k) const;
  std::size_t element_order(Elem a) const { return orders_[a]; }

  std::span<const Elem> generators() const { return generators_; }
  const Provenance& provenance() const { return provenance_; }
  const std::string& label() const { return provenance_.label; }
  std::string describe(Elem a) const;

  bool has_permutations() const { return !permutations_.empty(); }
  const Permutation& permutation(Elem a) const { return permutations_.at(a); }
  std::optional<Elem> find_permutation(const Permutation& p) const;

  bool is_abelian() const;

  // Only meaningful before the group is shared.
  void set_catalogue_name(std::string name) {
    provenance_.name = name;
    provenance_.label = std::move(name);
  }

  // Identity, inverse and associativity check.  Associativity uses Light's
  // reduction (x(sy) = (xs)y for generators s) up to exhaustive_limit, random
  // triples above it.  Throws PostconditionFailed on violation.
  void verify_axioms(std::size_t exhaustive_limit = 10000, std::uint64_t seed = 1) const;

 private:
  std::size_t order_;
  std::unique_ptr<const MulBackend> backend_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::uint32_t> orders_;
  std::vector<Elem> generators_;
  Provenance provenance_;
  std::vector<Permutation> permutations_;
};

}  // namespace chief
