#include "chief/element_set.hpp"

namespace chief {

std::vector<Elem> to_elements(const ElementSet& set) {
  std::vector<Elem> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i))
    out.push_back(static_cast<Elem>(i));
  return out;
}

ElementSet from_elements(std::size_t universe, const std::vector<Elem>& elems) {
  ElementSet out(universe);
  for (auto e : elems) out.set(e);
  return out;
}

std::uint64_t fingerprint(const ElementSet& set) {
  // FNV-1a over the block words
  std::uint64_t h = 1469598103934665603ULL;
  std::vector<std::uint64_t> blocks(set.num_blocks());
  boost::to_block_range(set, blocks.begin());
  for (auto w : blocks) {
    for (int s = 0; s < 64; s += 8) {
      h ^= (w >> s) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != ElementSet::npos && j != ElementSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

}  // namespace chief
