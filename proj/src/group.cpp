#include "chief/group.hpp"

#include <numeric>
#include <random>

#include "chief/errors.hpp"

namespace chief {

FiniteGroup::FiniteGroup(std::size_t order, std::unique_ptr<const MulBackend> backend,
                         std::vector<Elem> generators, Provenance provenance,
                         std::vector<Permutation> permutations)
    : order_(order),
      backend_(std::move(backend)),
      generators_(std::move(generators)),
      provenance_(std::move(provenance)),
      permutations_(std::move(permutations)) {
  if (order_ == 0) raise(ErrorKind::InvalidArgument, "group of order zero");
  if (order_ <= kCayleyTableLimit) {
    table_.resize(order_ * order_);
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b)
        table_[a * order_ + b] = backend_->mul(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  // Walk the cyclic subgroup of each unvisited element; this fills inverses and
  // orders for all its powers at once.
  inv_.assign(order_, 0);
  orders_.assign(order_, 0);
  orders_[0] = 1;
  std::vector<Elem> powers;
  for (Elem a = 1; a < order_; ++a) {
    if (orders_[a] != 0) continue;
    powers.assign(1, 0);
    Elem x = a;
    while (x != 0) {
      powers.push_back(x);
      x = mul(x, a);
      if (powers.size() > order_) raise(ErrorKind::PostconditionFailed, "element of infinite order");
    }
    const std::size_t k = powers.size();
    for (std::size_t i = 1; i < k; ++i) {
      Elem p = powers[i];
      if (orders_[p] != 0) continue;
      orders_[p] = static_cast<std::uint32_t>(k / std::gcd(i, k));
      inv_[p] = powers[k - i];
    }
  }
  for (auto g : generators_)
    if (g >= order_) raise(ErrorKind::InvalidArgument, "generator id out of range");
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  if (k < 0) {
    a = inv_[a];
    k = -k;
  }
  k %= static_cast<long long>(orders_[a]);
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::string FiniteGroup::describe(Elem a) const {
  if (has_permutations()) return permutations_[a].to_string();
  return backend_->describe(a);
}

std::optional<Elem> FiniteGroup::find_permutation(const Permutation& p) const {
  for (std::size_t i = 0; i < permutations_.size(); ++i)
    if (permutations_[i] == p) return static_cast<Elem>(i);
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (auto a : generators_)
    for (auto b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void FiniteGroup::verify_axioms(std::size_t exhaustive_limit, std::uint64_t seed) const {
  for (Elem a = 0; a < order_; ++a) {
    ensure(mul(0, a) == a && mul(a, 0) == a, "identity is not two-sided");
    ensure(mul(a, inv_[a]) == 0 && mul(inv_[a], a) == 0, "inverse is not two-sided");
  }
  if (order_ <= exhaustive_limit) {
    // Light's test: the elements s with x(sy) = (xs)y for all x, y form a
    // submagma, so checking generators is exhaustive.
    std::vector<Elem> gens(generators_.begin(), generators_.end());
    if (gens.empty() && order_ > 1) {
      gens.resize(order_);
      std::iota(gens.begin(), gens.end(), 0);
    }
    std::vector<Elem> sy(order_);
    for (auto s : gens) {
      for (Elem y = 0; y < order_; ++y) sy[y] = mul(s, y);
      for (Elem x = 0; x < order_; ++x) {
        Elem xs = mul(x, s);
        for (Elem y = 0; y < order_; ++y)
          if (mul(x, sy[y]) != mul(xs, y)) raise(ErrorKind::PostconditionFailed, "multiplication is not associative");
      }
    }
    // The generators must generate the whole group for the reduction to apply.
    std::vector<bool> seen(order_, false);
    std::vector<Elem> queue{0};
    seen[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto s : gens) {
        Elem y = mul(queue[i], s);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    ensure(queue.size() == order_, "recorded generators do not generate the group");
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(order_ - 1));
    for (int t = 0; t < 200000; ++t) {
      Elem x = pick(rng), y = pick(rng), z = pick(rng);
      if (mul(mul(x, y), z) != mul(x, mul(y, z))) raise(ErrorKind::PostconditionFailed, "multiplication is not associative");
    }
  }
}

}  // namespace chief
