#include "corpus.hpp"

#include <stdexcept>

namespace chief::testing {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    auto a5 = alternating_group(5);
    return std::vector<CorpusEntry>{
        {"V4", klein_four_group()},
        {"S4", symmetric_group(4)},
        {"S5", symmetric_group(5)},
        {"A5", a5},
        {"SL(2,3)", special_linear_group_2(3)},
        {"SL(2,5)", special_linear_group_2(5)},
        {"Q8", quaternion_group()},
        {"D8", dihedral_group(8)},
        {"Q8oQ8", extraspecial_32()},
        {"A5xA5", direct_product(a5, a5)},
        {"A5wrC2", wreath_with_c2(5, true)},
        {"S5wrC2", wreath_with_c2(5, false)},
    };
  }();
  return entries;
}

GroupPtr corpus_group(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e.group;
  throw std::out_of_range("no corpus group " + name);
}

}  // namespace chief::testing
