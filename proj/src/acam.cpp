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

#include "dnacam/acam.hpp"

#include <array>
#include <string>

#include "dnacam/error.hpp"

namespace dnacam {

namespace {

constexpr std::uint8_t kMismatchCode = 4;

// Resistances in ohms and the resulting match window per stored character.
constexpr std::array<CellContent, 4> kCharCells = {{
    {CellKind::Char, Nucleotide::A, {{19}, {31}}, 2'500'000, 186'320},
    {CellKind::Char, Nucleotide::C, {{32}, {44}}, 163'300, 27'600},
    {CellKind::Char, Nucleotide::G, {{46}, {59}}, 24'900, 9'690},
    {CellKind::Char, Nucleotide::T, {{63}, {79}}, 8'900, 5'060},
}};

// MM takes R_LB from the last interval's R_UB and R_UB from the first
// interval's R_LB, giving the inverted window (0.79 V, 0.19 V).
constexpr CellContent kMismatchCell = {CellKind::Mismatch, Nucleotide::A,
                                       {{79}, {19}}, 5'060, 2'500'000};

// Search level is the midpoint of the character's window.
constexpr std::array<Centivolts, 4> kSearchLevels = {{{25}, {38}, {53}, {71}}};

const CellContent& decode(std::uint8_t code) {
  return code == kMismatchCode ? kMismatchCell : kCharCells[code];
}

}  // namespace

CellContent encode_char(Nucleotide c) noexcept {
  return kCharCells[static_cast<std::size_t>(c)];
}

CellContent mismatch_cell() noexcept { return kMismatchCell; }

SearchDrive drive_for(Nucleotide c) noexcept {
  const auto level = kSearchLevels[static_cast<std::size_t>(c)];
  return SearchDrive{DriveKind::Search, c, level, level};
}

SearchDrive dont_care_drive() noexcept { return SearchDrive{}; }

void ArrayGeometry::validate() const {
  if (rows == 0 || width == 0 || blocks == 0 || pattern_len == 0) {
    throw Error(ErrorCode::InvalidGeometry,
                "array rows, width, blocks and pattern length must be positive");
  }
  if (rows % blocks != 0) {
    throw Error(ErrorCode::InvalidGeometry,
                "rows (" + std::to_string(rows) + ") not divisible by blocks (" +
                    std::to_string(blocks) + ")");
  }
  if (pattern_len > width) {
    throw Error(ErrorCode::PatternTooLong,
                "pattern length " + std::to_string(pattern_len) +
                    " exceeds row width " + std::to_string(width));
  }
}

AcamArray AcamArray::load(const DnaSequence& text, const ArrayGeometry& geometry) {
  geometry.validate();
  if (text.size() > geometry.capacity()) {
    throw Error(ErrorCode::TextTooLong,
                "text of " + std::to_string(text.size()) +
                    " characters exceeds array capacity " +
                    std::to_string(geometry.capacity()));
  }
  const std::uint32_t cols = geometry.total_cols();
  const std::uint32_t width = geometry.width;
  const std::uint32_t replicas = geometry.pattern_len - 1;
  std::vector<std::uint8_t> codes(std::size_t(geometry.rows) * cols, kMismatchCode);

  for (std::size_t k = 0; k < text.size(); ++k) {
    const std::size_t row = k / width;
    const std::size_t col = k % width;
    codes[row * cols + col] = static_cast<std::uint8_t>(text[k]);
  }
  for (std::size_t row = 0; row + 1 < geometry.rows; ++row) {
    for (std::uint32_t j = 0; j < replicas; ++j) {
      codes[row * cols + width + j] = codes[(row + 1) * cols + j];
    }
  }
  return AcamArray(geometry, std::move(codes));
}

CellContent AcamArray::cell(std::uint32_t row, std::uint32_t col) const {
  if (row >= geometry_.rows || col >= geometry_.total_cols()) {
    throw Error(ErrorCode::InvalidGeometry, "cell index out of range");
  }
  return decode(codes_[std::size_t(row) * geometry_.total_cols() + col]);
}

AcamArray AcamArray::with_cell(std::uint32_t row, std::uint32_t col,
                               const CellContent& content) const {
  if (row >= geometry_.rows || col >= geometry_.total_cols()) {
    throw Error(ErrorCode::InvalidGeometry, "cell index out of range");
  }
  AcamArray copy = *this;
  copy.codes_[std::size_t(row) * geometry_.total_cols() + col] =
      content.kind == CellKind::Mismatch ? kMismatchCode
                                         : static_cast<std::uint8_t>(content.symbol);
  return copy;
}

TagVector AcamArray::search_cycle(std::uint32_t block, std::uint32_t window,
                                  const Pattern& pattern) const {
  if (block >= geometry_.blocks) {
    throw Error(ErrorCode::BlockOutOfRange,
                "block " + std::to_string(block) + " out of range");
  }
  if (window >= geometry_.width) {
    throw Error(ErrorCode::WindowOutOfRange,
                "window " + std::to_string(window) + " out of range");
  }
  if (pattern.size() != geometry_.pattern_len) {
    throw Error(ErrorCode::PatternMismatch,
                "pattern length " + std::to_string(pattern.size()) +
                    " does not match the loaded replication width " +
                    std::to_string(geometry_.pattern_len));
  }

  const std::uint32_t cols = geometry_.total_cols();
  std::vector<SearchDrive> drives(cols, dont_care_drive());
  for (std::uint32_t k = 0; k < pattern.size(); ++k) {
    drives[window + k] = drive_for(pattern[k]);
  }

  const std::uint32_t per_block = geometry_.rows_per_block();
  TagVector tags(per_block, 0);
  for (std::uint32_t r = 0; r < per_block; ++r) {
    const std::size_t base = std::size_t(block * per_block + r) * cols;
    bool ml = true;
    for (std::uint32_t c = 0; c < cols && ml; ++c) {
      ml = cell_matches(decode(codes_[base + c]), drives[c]);
    }
    tags[r] = ml ? 1 : 0;
  }
  return tags;
}

BitMatrix AcamArray::run_block_search(std::uint32_t block, const Pattern& pattern,
                                      std::uint64_t* cycles) const {
  BitMatrix out{geometry_.rows_per_block(), geometry_.width, {}};
  out.bits.assign(std::size_t(out.rows) * out.cols, 0);
  for (std::uint32_t i = 0; i < geometry_.width; ++i) {
    const TagVector tags = search_cycle(block, i, pattern);
    if (cycles) ++*cycles;
    for (std::uint32_t r = 0; r < out.rows; ++r) {
      out.bits[std::size_t(r) * out.cols + i] = tags[r];
    }
  }
  return out;
}

}  // namespace dnacam
