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

#ifndef DNACAM_TESTS_SUPPORT_HPP
#define DNACAM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dnacam/acam.hpp"
#include "dnacam/seqio.hpp"

namespace testsupport {

// Longest chain of back-to-back pattern copies, found by walking each
// residue class of start positions with a running counter.
inline std::uint64_t chain_oracle(const std::string& text, const std::string& pattern) {
  const std::size_t p = pattern.size();
  if (p == 0 || text.size() < p) return 0;
  std::uint64_t best = 0;
  for (std::size_t phase = 0; phase < p; ++phase) {
    std::uint64_t run = 0;
    for (std::size_t q = phase; q + p <= text.size(); q += p) {
      run = text.compare(q, p, pattern) == 0 ? run + 1 : 0;
      best = std::max(best, run);
    }
  }
  return best;
}

// Longest run of 1s among bits whose index shares a residue mod p.
inline std::uint32_t phase_run_oracle(const std::vector<std::uint8_t>& bits, std::uint32_t p) {
  std::uint32_t best = 0;
  for (std::uint32_t phase = 0; phase < p; ++phase) {
    std::uint32_t run = 0;
    for (std::size_t k = phase; k < bits.size(); k += p) {
      run = bits[k] ? run + 1 : 0;
      best = std::max(best, run);
    }
  }
  return std::min<std::uint32_t>(best, 255);
}

// Whether the p characters of `text` starting at `pos` spell `pattern`.
inline bool occurs_at(const std::string& text, std::size_t pos, const std::string& pattern) {
  return pos + pattern.size() <= text.size() && text.compare(pos, pattern.size(), pattern) == 0;
}

inline std::string random_dna(std::mt19937& rng, std::size_t n, std::uint32_t alphabet = 4) {
  std::string s(n, 'A');
  std::uniform_int_distribution<std::uint32_t> pick(0, alphabet - 1);
  for (auto& c : s) c = "ACGT"[pick(rng)];
  return s;
}

inline std::string repeat(const std::string& unit, std::size_t times) {
  std::string s;
  s.reserve(unit.size() * times);
  for (std::size_t i = 0; i < times; ++i) s += unit;
  return s;
}

inline dnacam::DnaSequence dna(const std::string& s) {
  return dnacam::parse_text(s, dnacam::InputFormat::Raw);
}

inline dnacam::Pattern pat(const std::string& s) { return dnacam::parse_pattern(s); }

inline std::vector<std::uint8_t> bits_of(const std::string& s) {
  std::vector<std::uint8_t> out;
  for (char c : s) out.push_back(c == '1' ? 1 : 0);
  return out;
}

}  // namespace testsupport

#endif  // DNACAM_TESTS_SUPPORT_HPP
