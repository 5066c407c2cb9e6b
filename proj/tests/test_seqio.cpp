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

#include <fstream>
#include <random>
#include <string>

#include "dnacam/error.hpp"
#include "dnacam/seqio.hpp"
#include "support.hpp"

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

}  // namespace

TEST_CASE("fasta header and line breaks are stripped") {
  const DnaSequence s = parse_text(">h\nCAGCAG\n", InputFormat::Fasta);
  CHECK(s.str() == "CAGCAG");
  CHECK(s.size() == 6);
}

TEST_CASE("multi-record fasta concatenates sequence lines") {
  const DnaSequence s = parse_text(">a desc\r\nCAG\r\ncag\n>b\nTT\n", InputFormat::Fasta);
  CHECK(s.str() == "CAGCAGTT");
}

TEST_CASE("lowercase is normalized") {
  CHECK(parse_text("cagTT", InputFormat::Raw).str() == "CAGTT");
}

TEST_CASE("invalid character reports 1-based position") {
  try {
    parse_text("CAXG", InputFormat::Raw);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCharacter);
    REQUIRE(e.position().has_value());
    CHECK(*e.position() == 3);
    CHECK(std::string(e.what()).find('X') != std::string::npos);
  }
}

TEST_CASE("invalid character position counts header bytes in fasta") {
  try {
    parse_text(">hd\nCAN\n", InputFormat::Fasta);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCharacter);
    CHECK(*e.position() == 7);
  }
}

TEST_CASE("ambiguity codes are rejected") {
  for (char c : std::string("NRYKMSWBDHVnx-*0")) {
    CHECK(code_of([&] { parse_text(std::string("CA") + c, InputFormat::Raw); }) ==
          ErrorCode::InvalidCharacter);
  }
}

TEST_CASE("empty input") {
  CHECK(code_of([] { parse_text("", InputFormat::Raw); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { parse_text("  \n\t", InputFormat::Raw); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { parse_text(">only header\n", InputFormat::Fasta); }) ==
        ErrorCode::EmptyInput);
  CHECK(code_of([] { parse_pattern(""); }) == ErrorCode::EmptyInput);
}

TEST_CASE("pattern parsing") {
  CHECK(parse_pattern("cag").str() == "CAG");
  CHECK(code_of([] { parse_pattern("CAGX"); }) == ErrorCode::InvalidCharacter);
}

TEST_CASE("round trip: parse then render equals the uppercased input") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::string s = testsupport::random_dna(rng, 1 + rng() % 300);
    std::string mixed = s;
    for (auto& c : mixed) {
      if (rng() % 2) c = static_cast<char>(c - 'A' + 'a');
    }
    CHECK(parse_text(mixed, InputFormat::Raw).str() == s);
  }
}

TEST_CASE("builtin catalog holds the ten disorders") {
  const auto cat = builtin_catalog();
  REQUIRE(cat.size() == 10);

  const DiseaseEntry* fa = find_disease(cat, "Friedreich's ataxia");
  REQUIRE(fa != nullptr);
  CHECK(fa->gene == "FXN");
  CHECK(fa->pattern.str() == "GAA");
  CHECK(fa->normal == CountRange{5, 33});
  CHECK(fa->disease == CountRange{66, 1300});

  const DiseaseEntry* ax = find_disease(cat, "Ataxia syndrome");
  REQUIRE(ax != nullptr);
  CHECK(ax->gene == "FMR1");
  CHECK(ax->pattern.str() == "CGG");
  CHECK(ax->normal == CountRange{6, 54});
  CHECK(ax->disease == CountRange{55, 200});

  const DiseaseEntry* dm = find_disease(cat, "Myotonic dystrophy 2");
  REQUIRE(dm != nullptr);
  CHECK(dm->pattern.size() == 4);

  CHECK(find_disease(cat, "huntington's disease") == nullptr);
}

TEST_CASE("Huntington thresholds") {
  const auto cat = builtin_catalog();
  const DiseaseEntry& htt = *find_disease(cat, "Huntington's disease");
  CHECK(classify(45, htt) == Classification::Disease);
  CHECK(classify(20, htt) == Classification::Normal);
  CHECK(classify(30, htt) == Classification::Indeterminate);
  CHECK(classify(0, htt) == Classification::Normal);
  CHECK(classify(26, htt) == Classification::Normal);
  CHECK(classify(27, htt) == Classification::Indeterminate);
  CHECK(classify(40, htt) == Classification::Indeterminate);
  CHECK(classify(41, htt) == Classification::Disease);
}

TEST_CASE("below a bounded normal range is indeterminate") {
  const auto cat = builtin_catalog();
  CHECK(classify(3, *find_disease(cat, "Friedreich's ataxia")) ==
        Classification::Indeterminate);
}

TEST_CASE("overlapping ranges resolve towards disease") {
  const auto cat = builtin_catalog();
  const DiseaseEntry& hdl2 = *find_disease(cat, "Huntington's disease-like 2");
  CHECK(hdl2.ranges_overlap());
  CHECK(classify(10, hdl2) == Classification::Disease);
  CHECK(classify(2, hdl2) == Classification::Indeterminate);
  CHECK_FALSE(find_disease(cat, "Huntington's disease")->ranges_overlap());
}

TEST_CASE("classify is total and bounded endpoints classify as expected") {
  for (const auto& e : builtin_catalog()) {
    for (std::uint64_t n = 0; n <= 12000; ++n) {
      const auto c = classify(n, e);
      CHECK((c == Classification::Normal || c == Classification::Disease ||
             c == Classification::Indeterminate));
    }
    if (e.normal.hi && !e.ranges_overlap()) CHECK(classify(*e.normal.hi, e) == Classification::Normal);
    if (e.disease.lo) CHECK(classify(*e.disease.lo, e) == Classification::Disease);
  }
}

TEST_CASE("catalog parsing") {
  const auto cat = parse_catalog(
      "# name,gene,pattern,nlo,nhi,dlo,dhi\n"
      "\n"
      "Test disorder,TST,cag,*,10,20,*\n");
  REQUIRE(cat.size() == 1);
  CHECK(cat[0].pattern.str() == "CAG");
  CHECK(!cat[0].normal.lo);
  CHECK(cat[0].normal.hi == 10u);
  CHECK(cat[0].disease.lo == 20u);
  CHECK(!cat[0].disease.hi);

  CHECK(code_of([] { parse_catalog("a,b,CAG,1,2,3\n"); }) == ErrorCode::CatalogFormat);
  CHECK(code_of([] { parse_catalog("a,b,CAG,x,2,3,4\n"); }) == ErrorCode::CatalogFormat);
  CHECK(code_of([] { parse_catalog("a,b,CA,1,2,3,4\n"); }) == ErrorCode::CatalogFormat);
  CHECK(code_of([] { parse_catalog("a,b,CAGCA,1,2,3,4\n"); }) == ErrorCode::CatalogFormat);
  CHECK(code_of([] { parse_catalog("a,b,CAG,5,2,3,4\n"); }) == ErrorCode::CatalogFormat);
  CHECK(code_of([] { parse_catalog("a,b,CXG,1,2,3,4\n"); }) == ErrorCode::CatalogFormat);
}

TEST_CASE("catalog file round trip and missing file") {
  const std::string path = "seqio_catalog_test.csv";
  {
    std::ofstream out(path);
    out << "X,GENE1,GAA,1,5,9,*\n";
  }
  const auto cat = load_catalog(path);
  REQUIRE(cat.size() == 1);
  CHECK(cat[0].gene == "GENE1");
  std::remove(path.c_str());
  CHECK(code_of([] { load_catalog("/nonexistent/dir/catalog.csv"); }) == ErrorCode::Io);
}
