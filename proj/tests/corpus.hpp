#pragma once

#include <string>
#include <vector>

#include "chief/construct.hpp"

namespace chief::testing {

struct CorpusEntry {
  std::string name;
  GroupPtr group;
};

// V4, S4, S5, A5, SL(2,3), SL(2,5), Q8, D8, Q8oQ8, A5xA5, A5wrC2, S5wrC2.
// Built once and shared.
const std::vector<CorpusEntry>& corpus();
GroupPtr corpus_group(const std::string& name);

}  // namespace chief::testing
