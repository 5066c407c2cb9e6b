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

#ifndef DNACAM_MATCHMEM_HPP
#define DNACAM_MATCHMEM_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dnacam {

enum class MemoryMode : std::uint8_t { Idle, Write, Read, Reset };

std::string_view to_string(MemoryMode mode) noexcept;

// Serialized memory contents: bit k is cell (k / n, k % n); 1 = LRS.
struct ReadStream {
  std::vector<std::uint8_t> bits;
  std::uint64_t groups = 0;  // PISO latch operations used to produce `bits`
};

// Operation counters used by the cost model.
struct MemoryMeter {
  std::uint64_t columns_written = 0;
  std::uint64_t set_events = 0;
  std::uint64_t cells_read = 0;
  std::uint64_t read_groups = 0;
  std::uint64_t reset_cycles = 0;
};

// Behavioral 1T1R match-index memory. Rows are written in parallel one
// column at a time (counter + decoder column selector), read row by row
// through an 8-wide parallel-in serial-out stage, and cleared in a single
// reset cycle. Every access is checked against the current mode.
class MatchIndexMemory {
 public:
  static constexpr std::uint32_t kPisoWidth = 8;

  MatchIndexMemory(std::uint32_t rows, std::uint32_t cols);

  std::uint32_t rows() const noexcept { return rows_; }
  std::uint32_t cols() const noexcept { return cols_; }
  MemoryMode mode() const noexcept { return mode_; }
  bool lrs(std::uint32_t row, std::uint32_t col) const;
  const MemoryMeter& meter() const noexcept { return meter_; }

  // Idle -> Write -> Read -> Reset -> Idle; anything else throws
  // IllegalTransition.
  void set_mode(MemoryMode next);

  void write_column(std::uint32_t col, std::span<const std::uint8_t> tag);
  ReadStream read_all();
  void reset_all();

  // Optional trace sink: one line per mode transition and per column write.
  void set_trace(std::ostream* out) noexcept { trace_ = out; }

 private:
  std::uint32_t rows_;
  std::uint32_t cols_;
  std::vector<std::uint8_t> cells_;
  MemoryMode mode_ = MemoryMode::Idle;
  std::optional<std::uint32_t> last_written_;
  MemoryMeter meter_;
  std::ostream* trace_ = nullptr;
};

}  // namespace dnacam

#endif  // DNACAM_MATCHMEM_HPP
