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

#ifndef DNACAM_ACAM_HPP
#define DNACAM_ACAM_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "dnacam/seqio.hpp"

namespace dnacam {

// Voltage in hundredths of a volt. Every cell bound and search-line level
// is specified to two decimals, so comparisons are exact integer compares.
struct Centivolts {
  std::int32_t value = 0;

  constexpr double volts() const noexcept { return value / 100.0; }
  friend constexpr auto operator<=>(Centivolts, Centivolts) = default;
};

inline constexpr Centivolts kVdd{80};

// Stored match window [lower, upper]. Only the MM padding interval is
// inverted (lower > upper), which makes it reject every real search level.
struct MatchInterval {
  Centivolts lower;
  Centivolts upper;
  friend constexpr bool operator==(MatchInterval, MatchInterval) = default;
};

enum class CellKind : std::uint8_t { Char, Mismatch };

struct CellContent {
  CellKind kind = CellKind::Mismatch;
  Nucleotide symbol = Nucleotide::A;  // meaningful only for CellKind::Char
  MatchInterval interval;
  std::uint32_t r_lb_ohms = 0;
  std::uint32_t r_ub_ohms = 0;

  friend bool operator==(const CellContent&, const CellContent&) = default;
};

CellContent encode_char(Nucleotide c) noexcept;
CellContent mismatch_cell() noexcept;

enum class DriveKind : std::uint8_t { DontCare, Search };

struct SearchDrive {
  DriveKind kind = DriveKind::DontCare;
  Nucleotide symbol = Nucleotide::A;
  Centivolts v_ldl = kVdd;
  Centivolts v_udl{0};
};

SearchDrive drive_for(Nucleotide c) noexcept;
SearchDrive dont_care_drive() noexcept;

// Lower subcircuit discharges the match line when V_LDL < LB, the upper one
// when V_UDL > UB. Endpoints are inclusive.
constexpr bool cell_matches(const CellContent& cell, const SearchDrive& drive) noexcept {
  return drive.v_ldl >= cell.interval.lower && drive.v_udl <= cell.interval.upper;
}

struct ArrayGeometry {
  std::uint32_t rows = 512;        // M
  std::uint32_t width = 128;       // W, data columns per row
  std::uint32_t pattern_len = 3;   // p
  std::uint32_t blocks = 8;        // B

  std::uint32_t total_cols() const noexcept { return width + pattern_len - 1; }
  std::uint32_t rows_per_block() const noexcept { return rows / blocks; }
  std::uint64_t capacity() const noexcept {
    return static_cast<std::uint64_t>(rows) * width;
  }

  // Throws InvalidGeometry / PatternTooLong.
  void validate() const;
};

// One tag bit per row of the selected block.
using TagVector = std::vector<std::uint8_t>;

// Row-major bit matrix: rows_per_block x width.
struct BitMatrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<std::uint8_t> bits;

  std::uint8_t at(std::uint32_t r, std::uint32_t c) const { return bits[std::size_t(r) * cols + c]; }
};

class AcamArray {
 public:
  // Loads `text` row-major into the data columns, fills the replication
  // columns of each row from the first p-1 cells of the row below and pads
  // every remaining cell (tail of the text, last row's replicas) with MM.
  static AcamArray load(const DnaSequence& text, const ArrayGeometry& geometry);

  const ArrayGeometry& geometry() const noexcept { return geometry_; }
  CellContent cell(std::uint32_t row, std::uint32_t col) const;

  // Copy with one cell replaced; the loaded array itself never mutates.
  AcamArray with_cell(std::uint32_t row, std::uint32_t col, const CellContent& content) const;

  // One search cycle on `block` with the window starting at data column
  // `window` (0-based, < width). Columns outside the window are driven
  // don't-care; each tag is the AND of every cell in its row.
  TagVector search_cycle(std::uint32_t block, std::uint32_t window,
                         const Pattern& pattern) const;

  // Issues exactly `width` search cycles; entry (row, i) is the tag of
  // window i. `cycles`, when given, is incremented per issued cycle.
  BitMatrix run_block_search(std::uint32_t block, const Pattern& pattern,
                             std::uint64_t* cycles = nullptr) const;

 private:
  AcamArray(ArrayGeometry geometry, std::vector<std::uint8_t> codes)
      : geometry_(geometry), codes_(std::move(codes)) {}

  ArrayGeometry geometry_;
  // Cell codes 0..3 = A,C,G,T and 4 = MM, row-major over total_cols.
  std::vector<std::uint8_t> codes_;
};

}  // namespace dnacam

#endif  // DNACAM_ACAM_HPP
