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

#include "dnacam/costmodel.hpp"

#include "dnacam/error.hpp"
#include "dnacam/matchmem.hpp"

namespace dnacam {

namespace {

// Four characters times two memristors per cell, programmed row by row.
constexpr std::uint64_t kProgramStepsPerRow = 8;
constexpr double kDetectorClockRatio = 0.125;

}  // namespace

TimingParams TimingParams::from_geometry(const ArrayGeometry& g, std::uint64_t searched_blocks,
                                         double clock_ns, double write_time_ns) {
  TimingParams t;
  t.clock_ns = clock_ns;
  t.write_time_ns = write_time_ns;
  t.rows = g.rows;
  t.width = g.width;
  t.pattern_len = g.pattern_len;
  t.blocks = g.blocks;
  t.mem_rows = g.rows_per_block();
  t.mem_cols = g.width;
  t.searched_blocks = searched_blocks;
  return t;
}

void TimingParams::validate() const {
  if (!(clock_ns > 0) || !(write_time_ns > 0)) {
    throw Error(ErrorCode::InvalidGeometry, "clock period and write time must be positive");
  }
  if (rows == 0 || width == 0 || pattern_len == 0 || blocks == 0 || mem_rows == 0 ||
      mem_cols == 0) {
    throw Error(ErrorCode::InvalidGeometry, "timing geometry must be positive");
  }
}

CycleMeter& CycleMeter::operator+=(const CycleMeter& o) noexcept {
  load_row_programs += o.load_row_programs;
  blocks += o.blocks;
  search_cycles += o.search_cycles;
  write_columns += o.write_columns;
  set_events += o.set_events;
  cells_read += o.cells_read;
  read_groups += o.read_groups;
  detector_ticks += o.detector_ticks;
  reset_cycles += o.reset_cycles;
  return *this;
}

CycleMeter predicted_cycles(const TimingParams& p) {
  p.validate();
  const std::uint64_t k = p.searched_blocks;
  const std::uint64_t cells = std::uint64_t(p.mem_rows) * p.mem_cols;
  const std::uint64_t groups_per_row =
      (p.mem_cols + MatchIndexMemory::kPisoWidth - 1) / MatchIndexMemory::kPisoWidth;
  CycleMeter m;
  m.load_row_programs = kProgramStepsPerRow * p.rows;
  m.blocks = k;
  m.search_cycles = k * p.width;
  m.write_columns = k * p.width;
  m.cells_read = k * cells;
  m.read_groups = k * p.mem_rows * groups_per_row;
  m.detector_ticks = k * (cells + 5);
  m.reset_cycles = k;
  return m;
}

LatencyReport latency(const TimingParams& p) {
  p.validate();
  const double T = p.clock_ns;
  LatencyReport r;
  r.t_load_ns = double(kProgramStepsPerRow) * p.rows * p.write_time_ns;
  r.dt12_ns = (double(p.width) + 0.5) * T;
  r.dt23_ns = kDetectorClockRatio * (double(p.mem_rows) * p.mem_cols + 5.0) * T;
  r.dt34_ns = T;
  r.per_block_ns = r.dt12_ns + r.dt23_ns + r.dt34_ns;
  r.search_ns = double(p.searched_blocks) * r.per_block_ns;
  r.total_ns = r.t_load_ns + r.search_ns;
  return r;
}

LatencyReport latency_from_meter(const TimingParams& p, const CycleMeter& m) {
  p.validate();
  if (m.blocks == 0) {
    throw Error(ErrorCode::InternalInvariant, "meter recorded no searched blocks");
  }
  if (m.write_columns != m.search_cycles) {
    throw Error(ErrorCode::InternalInvariant,
                "memory writes do not pair one-to-one with search cycles");
  }
  const double T = p.clock_ns;
  const double k = double(m.blocks);
  LatencyReport r;
  r.t_load_ns = double(m.load_row_programs) * p.write_time_ns;
  // The last column write trails its search cycle by half a clock.
  r.dt12_ns = (double(m.search_cycles) + 0.5 * k) * T / k;
  r.dt23_ns = kDetectorClockRatio * double(m.detector_ticks) * T / k;
  r.dt34_ns = double(m.reset_cycles) * T / k;
  r.per_block_ns = r.dt12_ns + r.dt23_ns + r.dt34_ns;
  r.search_ns = (double(m.search_cycles) + 0.5 * k) * T +
                kDetectorClockRatio * double(m.detector_ticks) * T +
                double(m.reset_cycles) * T;
  r.total_ns = r.t_load_ns + r.search_ns;
  return r;
}

void EnergyParams::validate() const {
  if (write_nj < 0 || reset_nj < 0 || read_nj < 0 || search_nj < 0 || detect_nj < 0 ||
      set_pj < 0) {
    throw Error(ErrorCode::InvalidGeometry, "energy constants must be non-negative");
  }
  if (ref_write_columns == 0 || ref_reset_cycles == 0 || ref_cells_read == 0 ||
      ref_search_cycles == 0 || ref_detector_ticks == 0) {
    throw Error(ErrorCode::InvalidGeometry, "reference cycle counts must be positive");
  }
}

EnergyReport energy(const EnergyParams& e, const CycleMeter& m, std::uint64_t chars_searched) {
  e.validate();
  const auto scaled = [](double per_block, std::uint64_t ref, std::uint64_t metered) {
    return per_block / double(ref) * double(metered);
  };
  EnergyReport r;
  r.write_nj = scaled(e.write_nj, e.ref_write_columns, m.write_columns);
  r.reset_nj = scaled(e.reset_nj, e.ref_reset_cycles, m.reset_cycles);
  r.read_nj = scaled(e.read_nj, e.ref_cells_read, m.cells_read);
  r.search_nj = scaled(e.search_nj, e.ref_search_cycles, m.search_cycles);
  r.detect_nj = scaled(e.detect_nj, e.ref_detector_ticks, m.detector_ticks);
  r.total_nj = r.write_nj + r.reset_nj + r.read_nj + r.search_nj + r.detect_nj;
  r.chars_searched = chars_searched;
  r.per_char_pj = chars_searched ? r.total_nj * 1000.0 / double(chars_searched) : 0.0;
  r.set_nj = double(m.set_events) * e.set_pj / 1000.0;
  return r;
}

Breakdown breakdown(const CostReport& report) noexcept {
  Breakdown b;
  const auto& l = report.latency;
  if (l.per_block_ns > 0) {
    b.latency_write_search = l.dt12_ns / l.per_block_ns;
    b.latency_read_detect = l.dt23_ns / l.per_block_ns;
    b.latency_reset = l.dt34_ns / l.per_block_ns;
  }
  const auto& e = report.energy;
  if (e.total_nj > 0) {
    b.energy_write = e.write_nj / e.total_nj;
    b.energy_search = e.search_nj / e.total_nj;
    b.energy_read = e.read_nj / e.total_nj;
    b.energy_detect = e.detect_nj / e.total_nj;
    b.energy_reset = e.reset_nj / e.total_nj;
  }
  return b;
}

std::uint64_t blocks_for_text(std::uint64_t text_len, const ArrayGeometry& g) {
  const std::uint64_t cap = g.capacity();
  if (cap == 0) throw Error(ErrorCode::InvalidGeometry, "array capacity is zero");
  return std::uint64_t(g.blocks) * ((text_len + cap - 1) / cap);
}

}  // namespace dnacam
