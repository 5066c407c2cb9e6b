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

#include "dnacam/matchmem.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "dnacam/error.hpp"

namespace dnacam {

namespace {

void require_mode(MemoryMode actual, MemoryMode wanted, const char* op) {
  if (actual != wanted) {
    throw Error(ErrorCode::ModeViolation,
                std::string(op) + " requires mode " + std::string(to_string(wanted)) +
                    ", memory is in " + std::string(to_string(actual)));
  }
}

}  // namespace

std::string_view to_string(MemoryMode mode) noexcept {
  switch (mode) {
    case MemoryMode::Idle: return "Idle";
    case MemoryMode::Write: return "Write";
    case MemoryMode::Read: return "Read";
    case MemoryMode::Reset: return "Reset";
  }
  return "?";
}

MatchIndexMemory::MatchIndexMemory(std::uint32_t rows, std::uint32_t cols)
    : rows_(rows), cols_(cols), cells_(std::size_t(rows) * cols, 0) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::InvalidGeometry, "memory dimensions must be positive");
  }
}

bool MatchIndexMemory::lrs(std::uint32_t row, std::uint32_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw Error(ErrorCode::InvalidGeometry, "memory cell index out of range");
  }
  return cells_[std::size_t(row) * cols_ + col] != 0;
}

void MatchIndexMemory::set_mode(MemoryMode next) {
  const auto successor = [](MemoryMode m) {
    switch (m) {
      case MemoryMode::Idle: return MemoryMode::Write;
      case MemoryMode::Write: return MemoryMode::Read;
      case MemoryMode::Read: return MemoryMode::Reset;
      case MemoryMode::Reset: return MemoryMode::Idle;
    }
    return MemoryMode::Idle;
  };
  if (next != successor(mode_)) {
    throw Error(ErrorCode::IllegalTransition,
                "illegal memory mode transition " + std::string(to_string(mode_)) +
                    " -> " + std::string(to_string(next)));
  }
  if (trace_) *trace_ << "mode " << to_string(mode_) << "->" << to_string(next) << '\n';
  if (next == MemoryMode::Write) last_written_.reset();
  mode_ = next;
}

void MatchIndexMemory::write_column(std::uint32_t col, std::span<const std::uint8_t> tag) {
  require_mode(mode_, MemoryMode::Write, "write_column");
  if (col >= cols_) {
    throw Error(ErrorCode::OutOfOrderColumn,
                "column " + std::to_string(col) + " outside memory");
  }
  const std::uint32_t expected = last_written_ ? *last_written_ + 1 : 0;
  if (col != expected) {
    throw Error(ErrorCode::OutOfOrderColumn,
                "column " + std::to_string(col) + " written, column selector expects " +
                    std::to_string(expected));
  }
  if (tag.size() != rows_) {
    throw Error(ErrorCode::InvalidGeometry,
                "tag length " + std::to_string(tag.size()) + " != memory rows " +
                    std::to_string(rows_));
  }
  for (std::uint32_t r = 0; r < rows_; ++r) {
    if (cells_[std::size_t(r) * cols_ + col] != 0) {
      throw Error(ErrorCode::DirtyColumn,
                  "column " + std::to_string(col) + " holds LRS cells before write");
    }
  }
  std::uint64_t sets = 0;
  for (std::uint32_t r = 0; r < rows_; ++r) {
    if (tag[r]) {
      cells_[std::size_t(r) * cols_ + col] = 1;
      ++sets;
    }
  }
  last_written_ = col;
  ++meter_.columns_written;
  meter_.set_events += sets;
  if (trace_) *trace_ << "write col=" << col << " set=" << sets << '\n';
}

ReadStream MatchIndexMemory::read_all() {
  require_mode(mode_, MemoryMode::Read, "read_all");
  ReadStream out;
  out.bits.reserve(cells_.size());
  std::uint8_t piso[kPisoWidth];
  // Row selector advances only after the group counter wraps.
  for (std::uint32_t r = 0; r < rows_; ++r) {
    for (std::uint32_t group_start = 0; group_start < cols_; group_start += kPisoWidth) {
      const std::uint32_t lanes = std::min(kPisoWidth, cols_ - group_start);
      for (std::uint32_t lane = 0; lane < lanes; ++lane) {
        piso[lane] = cells_[std::size_t(r) * cols_ + group_start + lane];
      }
      ++out.groups;
      for (std::uint32_t lane = 0; lane < lanes; ++lane) out.bits.push_back(piso[lane]);
    }
  }
  meter_.cells_read += out.bits.size();
  meter_.read_groups += out.groups;
  return out;
}

void MatchIndexMemory::reset_all() {
  require_mode(mode_, MemoryMode::Reset, "reset_all");
  std::fill(cells_.begin(), cells_.end(), std::uint8_t{0});
  ++meter_.reset_cycles;
  if (trace_) *trace_ << "reset\n";
}

}  // namespace dnacam
