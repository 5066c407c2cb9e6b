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
#include <string>

#include "dnacam/acam.hpp"
#include "dnacam/error.hpp"
#include "support.hpp"

using namespace dnacam;
using testsupport::dna;
using testsupport::pat;

namespace {

constexpr Nucleotide kAll[] = {Nucleotide::A, Nucleotide::C, Nucleotide::G, Nucleotide::T};

std::string row_string(const AcamArray& a, std::uint32_t row) {
  std::string s;
  for (std::uint32_t c = 0; c < a.geometry().total_cols(); ++c) {
    const CellContent cell = a.cell(row, c);
    s += cell.kind == CellKind::Mismatch ? '-' : to_char(cell.symbol);
  }
  return s;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected dnacam::Error");
  return ErrorCode::InternalInvariant;
}

}  // namespace

TEST_CASE("stored intervals and resistances") {
  const CellContent a = encode_char(Nucleotide::A);
  CHECK(a.r_lb_ohms == 2'500'000);
  CHECK(a.r_ub_ohms == 186'320);
  CHECK(a.interval.lower.value == 19);
  CHECK(a.interval.upper.value == 31);

  const CellContent t = encode_char(Nucleotide::T);
  CHECK(t.r_lb_ohms == 8'900);
  CHECK(t.r_ub_ohms == 5'060);
  CHECK(t.interval == MatchInterval{{63}, {79}});

  CHECK(encode_char(Nucleotide::G).interval == MatchInterval{{46}, {59}});
  CHECK(encode_char(Nucleotide::C).interval == MatchInterval{{32}, {44}});
  CHECK(encode_char(Nucleotide::G).interval.lower.volts() == doctest::Approx(0.46));

  const CellContent mm = mismatch_cell();
  CHECK(mm.kind == CellKind::Mismatch);
  CHECK(mm.interval.lower.value == 79);
  CHECK(mm.interval.upper.value == 19);
  CHECK(mm.r_lb_ohms == t.r_ub_ohms);
  CHECK(mm.r_ub_ohms == a.r_lb_ohms);
}

TEST_CASE("intervals are disjoint and ordered") {
  for (int i = 0; i + 1 < 4; ++i) {
    CHECK(encode_char(kAll[i]).interval.upper < encode_char(kAll[i + 1]).interval.lower);
  }
}

TEST_CASE("search drives") {
  CHECK(drive_for(Nucleotide::C).v_ldl.value == 38);
  CHECK(drive_for(Nucleotide::C).v_udl.value == 38);
  CHECK(drive_for(Nucleotide::T).v_ldl.value == 71);
  CHECK(drive_for(Nucleotide::A).v_udl.value == 25);
  CHECK(drive_for(Nucleotide::G).v_udl.value == 53);
  const SearchDrive dc = dont_care_drive();
  CHECK(dc.kind == DriveKind::DontCare);
  CHECK(dc.v_ldl == kVdd);
  CHECK(dc.v_udl.value == 0);
}

TEST_CASE("cell match semantics") {
  CHECK(cell_matches(encode_char(Nucleotide::C), drive_for(Nucleotide::C)));
  CHECK_FALSE(cell_matches(encode_char(Nucleotide::A), drive_for(Nucleotide::G)));
  CHECK_FALSE(cell_matches(mismatch_cell(), drive_for(Nucleotide::A)));
  CHECK(cell_matches(mismatch_cell(), dont_care_drive()));
  for (Nucleotide c : kAll) CHECK(cell_matches(encode_char(c), dont_care_drive()));
}

TEST_CASE("interval endpoints are inclusive") {
  CellContent c = encode_char(Nucleotide::C);
  SearchDrive at_lb{DriveKind::Search, Nucleotide::C, {32}, {32}};
  SearchDrive at_ub{DriveKind::Search, Nucleotide::C, {44}, {44}};
  SearchDrive below{DriveKind::Search, Nucleotide::C, {31}, {31}};
  SearchDrive above{DriveKind::Search, Nucleotide::C, {45}, {45}};
  CHECK(cell_matches(c, at_lb));
  CHECK(cell_matches(c, at_ub));
  CHECK_FALSE(cell_matches(c, below));
  CHECK_FALSE(cell_matches(c, above));
}

TEST_CASE("geometry validation") {
  CHECK(code_of([] { ArrayGeometry{0, 8, 3, 1}.validate(); }) == ErrorCode::InvalidGeometry);
  CHECK(code_of([] { ArrayGeometry{10, 8, 3, 4}.validate(); }) == ErrorCode::InvalidGeometry);
  CHECK(code_of([] { ArrayGeometry{8, 4, 5, 2}.validate(); }) == ErrorCode::PatternTooLong);
  ArrayGeometry g;
  CHECK(g.total_cols() == 130);
  CHECK(g.rows_per_block() == 64);
  CHECK(g.capacity() == 512u * 128u);
}

TEST_CASE("load places data, replicas and MM padding") {
  const AcamArray a = AcamArray::load(dna("CAGCA"), ArrayGeometry{2, 4, 3, 1});
  CHECK(row_string(a, 0) == "CAGCA-");
  CHECK(row_string(a, 1) == "A-----");
}

TEST_CASE("full text leaves no MM in data columns") {
  const AcamArray a = AcamArray::load(dna("ACGTTGCA"), ArrayGeometry{2, 4, 2, 1});
  CHECK(row_string(a, 0) == "ACGTT");
  CHECK(row_string(a, 1) == "TGCA-");
}

TEST_CASE("load errors") {
  CHECK(code_of([] { AcamArray::load(dna("ACGTACGTA"), ArrayGeometry{2, 4, 3, 1}); }) ==
        ErrorCode::TextTooLong);
  CHECK(code_of([] { AcamArray::load(dna("ACG"), ArrayGeometry{2, 2, 3, 1}); }) ==
        ErrorCode::PatternTooLong);
}

TEST_CASE("search cycle tags and window range") {
  // Row 0: C A G | C A T... with p=3.
  const AcamArray a = AcamArray::load(dna("CAGCCATA"), ArrayGeometry{2, 4, 3, 1});
  CHECK(a.search_cycle(0, 0, pat("CAG")) == TagVector{1, 0});
  CHECK(a.search_cycle(0, 0, pat("CAT")) == TagVector{0, 1});  // row 1 is CATA
  CHECK(a.search_cycle(0, 3, pat("CCA")) == TagVector{1, 0});  // via replicas
  CHECK(code_of([&] { a.search_cycle(0, 4, pat("CAG")); }) == ErrorCode::WindowOutOfRange);
  CHECK(code_of([&] { a.search_cycle(1, 0, pat("CAG")); }) == ErrorCode::BlockOutOfRange);
  CHECK(code_of([&] { a.search_cycle(0, 0, pat("CA")); }) == ErrorCode::PatternMismatch);
}

TEST_CASE("window over MM data never matches") {
  const AcamArray a = AcamArray::load(dna("AAAAA"), ArrayGeometry{2, 4, 3, 1});
  for (std::uint32_t i = 0; i < 4; ++i) CHECK(a.search_cycle(0, i, pat("AAA"))[1] == 0);
}

TEST_CASE("single-character pattern") {
  const AcamArray a = AcamArray::load(dna("AC"), ArrayGeometry{1, 4, 1, 1});
  CHECK(a.search_cycle(0, 0, pat("A")) == TagVector{1});
  CHECK(a.search_cycle(0, 1, pat("A")) == TagVector{0});
}

TEST_CASE("block search rows and straddling") {
  const AcamArray a = AcamArray::load(dna("CAGCAGTTCA" "GTTTTTTT"), ArrayGeometry{2, 10, 3, 1});
  std::uint64_t cycles = 0;
  const BitMatrix m = a.run_block_search(0, pat("CAG"), &cycles);
  CHECK(cycles == 10);
  REQUIRE(m.rows == 2);
  REQUIRE(m.cols == 10);
  const std::uint8_t row0[] = {1, 0, 0, 1, 0, 0, 0, 0, 1, 0};
  for (std::uint32_t i = 0; i < 10; ++i) CHECK(m.at(0, i) == row0[i]);
  for (std::uint32_t i = 0; i < 10; ++i) CHECK(m.at(1, i) == 0);
}

TEST_CASE("empty trailing block is all zero") {
  const AcamArray a = AcamArray::load(dna("CAGCAG"), ArrayGeometry{4, 4, 3, 2});
  const BitMatrix m = a.run_block_search(1, pat("CAG"));
  for (auto b : m.bits) CHECK(b == 0);
}

TEST_CASE("property: window equivalence against substring comparison") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    const std::uint32_t p = 1 + rng() % 4;
    const std::uint32_t blocks = 1 + rng() % 4;
    const std::uint32_t rows = blocks * (1 + rng() % 6);
    const std::uint32_t width = std::max<std::uint32_t>(p, 2 + rng() % 12);
    const ArrayGeometry g{rows, width, p, blocks};
    const std::size_t len = 1 + rng() % g.capacity();
    const std::string text = testsupport::random_dna(rng, len, 1 + rng() % 4);
    const std::string pattern = testsupport::random_dna(rng, p, 2);
    const AcamArray a = AcamArray::load(dna(text), g);
    for (std::uint32_t b = 0; b < blocks; ++b) {
      const BitMatrix m = a.run_block_search(b, pat(pattern));
      for (std::uint32_t r = 0; r < m.rows; ++r) {
        for (std::uint32_t i = 0; i < width; ++i) {
          const std::size_t pos = std::size_t(b * g.rows_per_block() + r) * width + i;
          CHECK(m.at(r, i) == testsupport::occurs_at(text, pos, pattern));
        }
      }
    }
  }
}

TEST_CASE("property: cells under don't-care never affect tags") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    const std::uint32_t p = 1 + rng() % 4;
    const ArrayGeometry g{4, 8, p, 2};
    const std::string text = testsupport::random_dna(rng, 1 + rng() % g.capacity());
    const AcamArray a = AcamArray::load(dna(text), g);
    const Pattern pattern = pat(testsupport::random_dna(rng, p));
    const std::uint32_t window = rng() % g.width;
    const std::uint32_t block = rng() % g.blocks;
    const TagVector before = a.search_cycle(block, window, pattern);
    for (std::uint32_t col = 0; col < g.total_cols(); ++col) {
      if (col >= window && col < window + p) continue;
      const std::uint32_t row = block * g.rows_per_block() + rng() % g.rows_per_block();
      const CellContent flip =
          rng() % 5 == 0 ? mismatch_cell() : encode_char(kAll[rng() % 4]);
      CHECK(a.with_cell(row, col, flip).search_cycle(block, window, pattern) == before);
    }
  }
}
