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

#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "dnacam/error.hpp"
#include "dnacam/matchmem.hpp"

using namespace dnacam;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected dnacam::Error");
  return ErrorCode::InternalInvariant;
}

using Bits = std::vector<std::uint8_t>;

// Writes a row-major matrix column by column and returns the read stream.
ReadStream round_trip(MatchIndexMemory& mem, const Bits& matrix) {
  mem.set_mode(MemoryMode::Write);
  for (std::uint32_t c = 0; c < mem.cols(); ++c) {
    Bits tag(mem.rows());
    for (std::uint32_t r = 0; r < mem.rows(); ++r) tag[r] = matrix[r * mem.cols() + c];
    mem.write_column(c, tag);
  }
  mem.set_mode(MemoryMode::Read);
  return mem.read_all();
}

}  // namespace

TEST_CASE("column write maps tags onto one column") {
  MatchIndexMemory mem(3, 4);
  mem.set_mode(MemoryMode::Write);
  mem.write_column(0, Bits{1, 0, 1});
  CHECK(mem.lrs(0, 0));
  CHECK_FALSE(mem.lrs(1, 0));
  CHECK(mem.lrs(2, 0));
  for (std::uint32_t r = 0; r < 3; ++r) {
    for (std::uint32_t c = 1; c < 4; ++c) CHECK_FALSE(mem.lrs(r, c));
  }
  CHECK(mem.meter().set_events == 2);
}

TEST_CASE("columns must be written in ascending order") {
  MatchIndexMemory mem(3, 4);
  mem.set_mode(MemoryMode::Write);
  mem.write_column(0, Bits{0, 0, 0});
  CHECK(code_of([&] { mem.write_column(2, Bits{0, 0, 0}); }) == ErrorCode::OutOfOrderColumn);
  CHECK(code_of([&] { mem.write_column(0, Bits{0, 0, 0}); }) == ErrorCode::OutOfOrderColumn);
  mem.write_column(1, Bits{0, 0, 0});
}

TEST_CASE("all-zero tag leaves the column clean") {
  MatchIndexMemory mem(3, 2);
  mem.set_mode(MemoryMode::Write);
  mem.write_column(0, Bits{0, 0, 0});
  for (std::uint32_t r = 0; r < 3; ++r) CHECK_FALSE(mem.lrs(r, 0));
  CHECK(mem.meter().set_events == 0);
  CHECK(mem.meter().columns_written == 1);
}

TEST_CASE("read is row-major") {
  MatchIndexMemory mem(2, 8);
  Bits m(16, 0);
  m[0] = 1;
  m[15] = 1;
  const ReadStream s = round_trip(mem, m);
  CHECK(s.bits == Bits{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(s.groups == 2);
}

TEST_CASE("default memory reads in 1024 groups") {
  MatchIndexMemory mem(64, 128);
  mem.set_mode(MemoryMode::Write);
  mem.set_mode(MemoryMode::Read);
  const ReadStream s = mem.read_all();
  CHECK(s.bits.size() == 8192);
  CHECK(s.groups == 1024);
  for (auto b : s.bits) CHECK(b == 0);
}

TEST_CASE("partial final group when width is not a multiple of eight") {
  MatchIndexMemory mem(3, 10);
  Bits m(30);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = (i * 7 % 3) == 0;
  const ReadStream s = round_trip(mem, m);
  CHECK(s.bits == m);
  CHECK(s.groups == 6);
}

TEST_CASE("reset clears everything and costs one cycle") {
  MatchIndexMemory mem(4, 4);
  Bits m(16, 0);
  for (int i : {0, 3, 5, 9, 14}) m[i] = 1;
  round_trip(mem, m);
  mem.set_mode(MemoryMode::Reset);
  mem.reset_all();
  CHECK(mem.meter().reset_cycles == 1);
  for (std::uint32_t r = 0; r < 4; ++r) {
    for (std::uint32_t c = 0; c < 4; ++c) CHECK_FALSE(mem.lrs(r, c));
  }
  mem.set_mode(MemoryMode::Idle);

  // Clean memory: reset still charged.
  mem.set_mode(MemoryMode::Write);
  mem.set_mode(MemoryMode::Read);
  const ReadStream s = mem.read_all();
  for (auto b : s.bits) CHECK(b == 0);
  mem.set_mode(MemoryMode::Reset);
  mem.reset_all();
  CHECK(mem.meter().reset_cycles == 2);
}

TEST_CASE("mode machine") {
  MatchIndexMemory mem(2, 2);
  CHECK(code_of([&] { mem.set_mode(MemoryMode::Read); }) == ErrorCode::IllegalTransition);
  mem.set_mode(MemoryMode::Write);
  CHECK(code_of([&] { mem.set_mode(MemoryMode::Reset); }) == ErrorCode::IllegalTransition);
  CHECK(code_of([&] { mem.read_all(); }) == ErrorCode::ModeViolation);
  CHECK(code_of([&] { mem.reset_all(); }) == ErrorCode::ModeViolation);
  mem.set_mode(MemoryMode::Read);
  CHECK(code_of([&] { mem.write_column(0, Bits{1, 1}); }) == ErrorCode::ModeViolation);
  mem.set_mode(MemoryMode::Reset);
  mem.set_mode(MemoryMode::Idle);
  CHECK(code_of([&] { mem.write_column(0, Bits{1, 1}); }) == ErrorCode::ModeViolation);
}

TEST_CASE("writing over a set column is rejected") {
  MatchIndexMemory mem(2, 2);
  mem.set_mode(MemoryMode::Write);
  mem.write_column(0, Bits{1, 0});
  mem.set_mode(MemoryMode::Read);
  mem.set_mode(MemoryMode::Reset);
  mem.set_mode(MemoryMode::Idle);
  mem.set_mode(MemoryMode::Write);
  CHECK(code_of([&] { mem.write_column(0, Bits{0, 1}); }) == ErrorCode::DirtyColumn);
}

TEST_CASE("trace lines") {
  std::ostringstream out;
  MatchIndexMemory mem(2, 2);
  mem.set_trace(&out);
  round_trip(mem, Bits{1, 0, 1, 1});
  mem.set_mode(MemoryMode::Reset);
  mem.reset_all();
  CHECK(out.str() ==
        "mode Idle->Write\nwrite col=0 set=2\nwrite col=1 set=1\nmode Write->Read\n"
        "mode Read->Reset\nreset\n");
}

TEST_CASE("property: round trip on random matrices") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const std::uint32_t m = 1 + rng() % 64;
    const std::uint32_t n = 1 + rng() % 64;
    Bits matrix(std::size_t(m) * n);
    for (auto& b : matrix) b = rng() % 2;
    MatchIndexMemory mem(m, n);
    const ReadStream s = round_trip(mem, matrix);
    CHECK(s.bits == matrix);
    CHECK(s.groups == std::uint64_t(m) * ((n + 7) / 8));
  }
}
