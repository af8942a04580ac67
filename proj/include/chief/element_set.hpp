#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <vector>

namespace chief {

using Elem = std::uint32_t;
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

std::vector<Elem> to_elements(const ElementSet& set);
ElementSet from_elements(std::size_t universe, const std::vector<Elem>& elems);

// Stable 64-bit fingerprint of the member set.
std::uint64_t fingerprint(const ElementSet& set);

// Orders by size, then lexicographically by the sorted member list.
bool canonical_less(const ElementSet& a, const ElementSet& b);

}  // namespace chief
