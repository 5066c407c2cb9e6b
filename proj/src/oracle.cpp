// Copyright 2026 The dnacam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dnacam/oracle.hpp"

#include <algorithm>

namespace dnacam {

std::uint64_t oracle_max_tandem(const DnaSequence& text, const Pattern& pattern) {
  const std::size_t t = text.size();
  const std::size_t p = pattern.size();
  if (p == 0 || p > t) return 0;

  const auto occurs_at = [&](std::size_t q) {
    if (q + p > t) return false;
    for (std::size_t j = 0; j < p; ++j) {
      if (text[q + j] != pattern[j]) return false;
    }
    return true;
  };

  std::uint64_t best = 0;
  for (std::size_t q = 0; q + p <= t; ++q) {
    std::uint64_t k = 0;
    while (occurs_at(q + k * p)) ++k;
    best = std::max(best, k);
  }
  return best;
}

}  // namespace dnacam
