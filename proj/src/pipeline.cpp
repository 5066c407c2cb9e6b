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

#include "dnacam/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>

#include "dnacam/error.hpp"
#include "dnacam/matchmem.hpp"

namespace dnacam {

namespace {

// Functional scans count runs exactly; only the cycle-level FSM keeps 8-bit registers.
constexpr std::uint32_t kWideRegister = std::numeric_limits<std::uint32_t>::max();

struct BlockOutput {
  std::vector<std::uint8_t> bits;
  CycleMeter meter;
  std::string memory_trace;
};

// Search with column-sequential writes, full read, reset.
BlockOutput process_block(const AcamArray& array, std::uint32_t block, const Pattern& pattern,
                          MatchIndexMemory& memory) {
  const auto before = memory.meter();
  BlockOutput out;
  out.meter.blocks = 1;

  memory.set_mode(MemoryMode::Write);
  for (std::uint32_t i = 0; i < array.geometry().width; ++i) {
    const TagVector tags = array.search_cycle(block, i, pattern);
    ++out.meter.search_cycles;
    memory.write_column(i, tags);
  }
  memory.set_mode(MemoryMode::Read);
  out.bits = memory.read_all().bits;
  memory.set_mode(MemoryMode::Reset);
  memory.reset_all();
  memory.set_mode(MemoryMode::Idle);

  const auto& after = memory.meter();
  out.meter.write_columns = after.columns_written - before.columns_written;
  out.meter.set_events = after.set_events - before.set_events;
  out.meter.cells_read = after.cells_read - before.cells_read;
  out.meter.read_groups = after.read_groups - before.read_groups;
  out.meter.reset_cycles = after.reset_cycles - before.reset_cycles;
  // Every block owns a detection window of its stream plus the flush slots.
  out.meter.detector_ticks = out.bits.size() + kFlushCycles;
  return out;
}

std::vector<std::uint32_t> normalize_blocks(std::vector<std::uint32_t> blocks,
                                            const ArrayGeometry& g, std::size_t text_len) {
  if (blocks.empty()) {
    const std::uint64_t per_block = std::uint64_t(g.rows_per_block()) * g.width;
    const auto used = static_cast<std::uint32_t>((text_len + per_block - 1) / per_block);
    for (std::uint32_t b = 0; b < used; ++b) blocks.push_back(b);
    return blocks;
  }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  if (blocks.back() >= g.blocks) {
    throw Error(ErrorCode::BlockOutOfRange,
                "block " + std::to_string(blocks.back() + 1) + " outside 1.." +
                    std::to_string(g.blocks));
  }
  return blocks;
}

}  // namespace

BlockMap BlockMap::build(const std::map<std::string, std::vector<std::uint32_t>>& layout,
                         std::uint32_t block_count) {
  BlockMap map;
  std::map<std::uint32_t, std::string> owner;
  for (const auto& [gene, blocks] : layout) {
    std::vector<std::uint32_t> sorted = blocks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto b : sorted) {
      if (b >= block_count) {
        throw Error(ErrorCode::BlockOutOfRange,
                    "gene " + gene + " mapped to block " + std::to_string(b + 1) +
                        " outside 1.." + std::to_string(block_count));
      }
      auto [it, inserted] = owner.emplace(b, gene);
      if (!inserted) {
        throw Error(ErrorCode::OverlappingAssignment,
                    "block " + std::to_string(b + 1) + " assigned to both " + it->second +
                        " and " + gene);
      }
    }
    if (sorted.empty()) {
      throw Error(ErrorCode::CatalogFormat, "gene " + gene + " mapped to no blocks");
    }
    map.genes_.emplace(gene, std::move(sorted));
  }
  return map;
}

const std::vector<std::uint32_t>& BlockMap::blocks_for_gene(std::string_view gene) const {
  auto it = genes_.find(gene);
  if (it == genes_.end()) {
    throw Error(ErrorCode::GeneNotMapped,
                "gene " + std::string(gene) + " has no block assignment");
  }
  return it->second;
}

std::map<std::string, std::vector<std::uint32_t>> parse_layout(std::string_view text) {
  std::map<std::string, std::vector<std::uint32_t>> out;
  std::size_t line_no = 0;
  const auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  while (!text.empty()) {
    auto eol = text.find_first_of("\n;");
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::CatalogFormat,
                  "layout entry " + std::to_string(line_no) + ": expected GENE=blocks");
    }
    std::string gene(trim(line.substr(0, eq)));
    std::string_view list = line.substr(eq + 1);
    auto& blocks = out[gene];
    while (!list.empty()) {
      auto comma = list.find(',');
      std::string_view item = trim(list.substr(0, comma));
      list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
      std::uint32_t b = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), b);
      if (ec != std::errc{} || ptr != item.data() + item.size() || b == 0) {
        throw Error(ErrorCode::CatalogFormat,
                    "layout entry " + std::to_string(line_no) + ": bad block number '" +
                        std::string(item) + "'");
      }
      blocks.push_back(b - 1);
    }
  }
  return out;
}

ScanResult scan(const ScanRequest& req) {
  const ArrayGeometry& g = req.geometry;
  g.validate();
  if (req.pattern.size() != g.pattern_len) {
    throw Error(ErrorCode::PatternMismatch,
                "pattern length " + std::to_string(req.pattern.size()) +
                    " differs from configured pattern length " + std::to_string(g.pattern_len));
  }
  if (req.mode == DetectorMode::CycleAccurate && g.pattern_len != kFsmPointers) {
    throw Error(ErrorCode::UnsupportedMode,
                "cycle-accurate detector is built for 3-character patterns only");
  }

  const AcamArray array = AcamArray::load(req.text, g);
  const std::vector<std::uint32_t> blocks = normalize_blocks(req.active_blocks, g, req.text.size());
  const std::uint32_t m = g.rows_per_block();
  const std::uint32_t n = g.width;

  std::vector<BlockOutput> outputs(blocks.size());
  if (req.memory == MemoryPolicy::Shared) {
    MatchIndexMemory memory(m, n);
    memory.set_trace(req.memory_trace);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      outputs[i] = process_block(array, blocks[i], req.pattern, memory);
    }
  } else {
    std::vector<std::future<BlockOutput>> jobs;
    jobs.reserve(blocks.size());
    const bool tracing = req.memory_trace != nullptr;
    for (auto b : blocks) {
      jobs.push_back(std::async(std::launch::async, [&array, &req, b, m, n, tracing] {
        MatchIndexMemory memory(m, n);
        std::ostringstream trace;
        if (tracing) memory.set_trace(&trace);
        BlockOutput out = process_block(array, b, req.pattern, memory);
        out.memory_trace = trace.str();
        return out;
      }));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      outputs[i] = jobs[i].get();
      if (tracing) *req.memory_trace << outputs[i].memory_trace;
    }
  }

  ScanResult result;
  CycleMeter meter;
  meter.load_row_programs = 8ull * g.rows;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    meter += outputs[i].meter;
    result.per_block.push_back({blocks[i], detect_functional(outputs[i].bits, g.pattern_len, kWideRegister)});
  }

  for (std::size_t i = 0; i < blocks.size();) {
    std::size_t j = i;
    while (j + 1 < blocks.size() && blocks[j + 1] == blocks[j] + 1) ++j;
    std::vector<std::uint8_t> stream;
    stream.reserve((j - i + 1) * std::size_t(m) * n);
    for (std::size_t k = i; k <= j; ++k) {
      stream.insert(stream.end(), outputs[k].bits.begin(), outputs[k].bits.end());
    }
    DetectionRun run{blocks[i], blocks[j], 0, std::nullopt};
    if (req.mode == DetectorMode::CycleAccurate) {
      run.cycle = run_cycle_accurate(stream);
      run.max = run.cycle->global_max;
    } else {
      run.max = detect_functional(stream, g.pattern_len, kWideRegister);
    }
    result.global_max = std::max(result.global_max, run.max);
    result.runs.push_back(std::move(run));
    i = j + 1;
  }

  const TimingParams timing =
      TimingParams::from_geometry(g, blocks.size(), req.clock_ns, req.write_time_ns);
  CycleMeter predicted = predicted_cycles(timing);
  predicted.set_events = meter.set_events;  // data-dependent, not predicted
  if (!(predicted == meter)) {
    throw Error(ErrorCode::InternalInvariant,
                "metered cycle counts disagree with the closed-form timing model");
  }
  result.cost.cycles = meter;
  result.cost.latency = latency(timing);
  const LatencyReport metered = latency_from_meter(timing, meter);
  const auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
  };
  const auto& closed = result.cost.latency;
  if (!close(metered.dt12_ns, closed.dt12_ns) || !close(metered.dt23_ns, closed.dt23_ns) ||
      !close(metered.dt34_ns, closed.dt34_ns) || !close(metered.t_load_ns, closed.t_load_ns)) {
    throw Error(ErrorCode::InternalInvariant, "metered latency disagrees with closed form");
  }
  result.cost.energy = energy(req.energy, meter, std::uint64_t(blocks.size()) * m * n);

  if (req.disease) result.classification = classify(result.global_max, *req.disease);
  return result;
}

}  // namespace dnacam
