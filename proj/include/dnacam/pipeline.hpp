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

#ifndef DNACAM_PIPELINE_HPP
#define DNACAM_PIPELINE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnacam/acam.hpp"
#include "dnacam/costmodel.hpp"
#include "dnacam/detector.hpp"
#include "dnacam/seqio.hpp"

namespace dnacam {

enum class DetectorMode { Functional, CycleAccurate };

// Shared: one match-index memory serves every block in turn.
// PerBlock: each block gets a private memory and blocks run concurrently.
enum class MemoryPolicy { Shared, PerBlock };

// Gene -> activated blocks (0-based). Blocks are disjoint across genes.
class BlockMap {
 public:
  BlockMap() = default;

  // Throws OverlappingAssignment when two genes claim a block and
  // BlockOutOfRange for indices >= block_count.
  static BlockMap build(const std::map<std::string, std::vector<std::uint32_t>>& layout,
                        std::uint32_t block_count);

  // Throws GeneNotMapped.
  const std::vector<std::uint32_t>& blocks_for_gene(std::string_view gene) const;
  const std::vector<std::uint32_t>& blocks_for(const DiseaseEntry& entry) const {
    return blocks_for_gene(entry.gene);
  }

  bool empty() const noexcept { return genes_.empty(); }

 private:
  std::map<std::string, std::vector<std::uint32_t>, std::less<>> genes_;
};

// Layout text: one "GENE=1,2,3" entry per line (block numbers 1-based),
// '#' comments allowed. Returned indices are 0-based.
std::map<std::string, std::vector<std::uint32_t>> parse_layout(std::string_view text);

struct ScanRequest {
  DnaSequence text;
  Pattern pattern;
  ArrayGeometry geometry;
  // 0-based block indices; empty selects the blocks the text occupies.
  std::vector<std::uint32_t> active_blocks;
  double clock_ns = 1.0;
  double write_time_ns = 1.0;
  EnergyParams energy;
  DetectorMode mode = DetectorMode::Functional;
  MemoryPolicy memory = MemoryPolicy::Shared;
  std::optional<DiseaseEntry> disease;
  std::ostream* memory_trace = nullptr;
};

struct BlockResult {
  std::uint32_t block = 0;
  std::uint32_t max = 0;  // detection over this block's stream alone
};

struct DetectionRun {
  std::uint32_t first_block = 0;
  std::uint32_t last_block = 0;
  std::uint32_t max = 0;
  std::optional<CycleRun> cycle;  // populated in cycle-accurate mode
};

struct ScanResult {
  std::uint32_t global_max = 0;
  std::vector<BlockResult> per_block;
  // Maximal runs of consecutive activated blocks; each is detected over
  // the concatenation of its block streams.
  std::vector<DetectionRun> runs;
  std::optional<Classification> classification;
  CostReport cost;
};

// Loads the text, then for every activated block in ascending order runs
// W search cycles with column writes, reads the memory into the detector
// and resets it. Metered cycles are cross-checked against the closed-form
// model; a disagreement throws InternalInvariant.
ScanResult scan(const ScanRequest& request);

}  // namespace dnacam

#endif  // DNACAM_PIPELINE_HPP
