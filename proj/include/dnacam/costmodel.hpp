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

#ifndef DNACAM_COSTMODEL_HPP
#define DNACAM_COSTMODEL_HPP

#include <cstdint>

#include "dnacam/acam.hpp"

namespace dnacam {

// Clocking and geometry for latency estimation. Times are in nanoseconds.
struct TimingParams {
  double clock_ns = 1.0;       // T
  double write_time_ns = 1.0;  // T_w, memristor programming time
  std::uint32_t rows = 512;    // M
  std::uint32_t width = 128;   // W = N - (p - 1)
  std::uint32_t pattern_len = 3;
  std::uint32_t blocks = 8;    // B
  std::uint32_t mem_rows = 64;   // m = M / B
  std::uint32_t mem_cols = 128;  // n = W
  std::uint64_t searched_blocks = 1;  // K

  static TimingParams from_geometry(const ArrayGeometry& g, std::uint64_t searched_blocks,
                                    double clock_ns = 1.0, double write_time_ns = 1.0);

  std::uint32_t total_cols() const noexcept { return width + pattern_len - 1; }
  void validate() const;
};

// Operation counts gathered while simulating. Per-block phases accumulate
// over all searched blocks.
struct CycleMeter {
  std::uint64_t load_row_programs = 0;  // 8 programming steps per row
  std::uint64_t blocks = 0;
  std::uint64_t search_cycles = 0;
  std::uint64_t write_columns = 0;
  std::uint64_t set_events = 0;
  std::uint64_t cells_read = 0;
  std::uint64_t read_groups = 0;
  std::uint64_t detector_ticks = 0;  // at T/8; includes 5 flush slots per block
  std::uint64_t reset_cycles = 0;

  CycleMeter& operator+=(const CycleMeter& o) noexcept;
  friend bool operator==(const CycleMeter&, const CycleMeter&) = default;
};

// Closed-form counts for `params.searched_blocks` blocks.
CycleMeter predicted_cycles(const TimingParams& params);

struct LatencyReport {
  double t_load_ns = 0;
  double dt12_ns = 0;  // memory write overlapped with pattern search
  double dt23_ns = 0;  // memory read overlapped with detection
  double dt34_ns = 0;  // memory reset
  double per_block_ns = 0;
  double search_ns = 0;  // K * per_block, load excluded
  double total_ns = 0;   // t_load + search
};

//   t_load = 8 M T_w
//   dt12   = (W + 0.5) T
//   dt23   = 0.125 (m n + 5) T
//   dt34   = T
//   total  = t_load + K (dt12 + dt23 + dt34)
LatencyReport latency(const TimingParams& params);

// Same quantities derived from metered counts instead of the closed form.
LatencyReport latency_from_meter(const TimingParams& params, const CycleMeter& meter);

// Per-block phase energies (nJ) at the reference operating point, together
// with the cycle counts they were characterized at. Energy of a run is the
// per-unit energy times the metered units of that phase.
struct EnergyParams {
  double write_nj = 1.228;
  double reset_nj = 1.228;
  double read_nj = 0.82;
  double search_nj = 1.1769;
  double detect_nj = 0.7709;
  double set_pj = 1.0;  // assumed energy of one memristor SET

  std::uint64_t ref_write_columns = 128;
  std::uint64_t ref_reset_cycles = 1;
  std::uint64_t ref_cells_read = 64 * 128;
  std::uint64_t ref_search_cycles = 128;
  std::uint64_t ref_detector_ticks = 64 * 128 + 5;

  void validate() const;
};

struct EnergyReport {
  double write_nj = 0;
  double reset_nj = 0;
  double read_nj = 0;
  double search_nj = 0;
  double detect_nj = 0;
  double total_nj = 0;
  std::uint64_t chars_searched = 0;  // m * n per searched block
  double per_char_pj = 0;            // total / chars_searched
  double set_nj = 0;  // data-dependent SET energy, informational only
};

EnergyReport energy(const EnergyParams& params, const CycleMeter& meter,
                    std::uint64_t chars_searched);

struct CostReport {
  LatencyReport latency;
  EnergyReport energy;
  CycleMeter cycles;
};

struct Breakdown {
  // Latency: write||search, read||detect, reset.
  double latency_write_search = 0;
  double latency_read_detect = 0;
  double latency_reset = 0;
  double energy_write = 0;
  double energy_search = 0;
  double energy_read = 0;
  double energy_detect = 0;
  double energy_reset = 0;
};

Breakdown breakdown(const CostReport& report) noexcept;

// Blocks needed to hold `text_len` characters when whole arrays are
// searched: B * ceil(t / (M W)).
std::uint64_t blocks_for_text(std::uint64_t text_len, const ArrayGeometry& g);

}  // namespace dnacam

#endif  // DNACAM_COSTMODEL_HPP
