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

#ifndef DNACAM_ORACLE_HPP
#define DNACAM_ORACLE_HPP

#include <cstdint>

#include "dnacam/seqio.hpp"

namespace dnacam {

// Reference answer computed by a plain string scan, independent of every
// hardware model: the largest k such that the pattern occurs at q, q+p,
// ..., q+(k-1)p for some start q.
std::uint64_t oracle_max_tandem(const DnaSequence& text, const Pattern& pattern);

}  // namespace dnacam

#endif  // DNACAM_ORACLE_HPP
