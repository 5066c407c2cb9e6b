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

#include "dnacam/seqio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "dnacam/error.hpp"

namespace dnacam {

namespace {

// Nucleotide-repeat disorders with their normal and pathogenic repeat
// counts. Open-ended ranges (<=26, >40, ...) are written as inclusive
// integer bounds.
constexpr std::string_view kBuiltinCatalog =
    "Ataxia syndrome,FMR1,CGG,6,54,55,200\n"
    "Friedreich's ataxia,FXN,GAA,5,33,66,1300\n"
    "Huntington's disease,HTT,CAG,*,26,41,*\n"
    "Fragile XE syndrome,AFF2,CCG,6,25,201,*\n"
    "Myotonic dystrophy 2,DMPK,CCTG,11,26,75,11000\n"
    "Spinocerebellar ataxia 1,ATXN1,CAG,6,35,39,*\n"
    "Huntington's disease-like 2,JPH3,CTG,6,28,4,60\n"
    "Spinal and bulbar muscular atrophy,AR,CAG,11,24,40,62\n"
    "Dentatorubral-pallidoluysian atrophy,ATN1,CAG,7,25,49,88\n"
    "Oculopharyngeal muscular dystrophy,PABPN1,GCG,*,10,12,17\n";

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::optional<std::uint32_t> parse_bound(std::string_view field,
                                         std::size_t line_no) {
  field = trim(field);
  if (field == "*") return std::nullopt;
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw Error(ErrorCode::CatalogFormat,
                "catalog line " + std::to_string(line_no) +
                    ": bad range endpoint '" + std::string(field) + "'");
  }
  return value;
}

CountRange parse_range(std::string_view lo, std::string_view hi,
                       std::size_t line_no) {
  CountRange r{parse_bound(lo, line_no), parse_bound(hi, line_no)};
  if (r.lo && r.hi && *r.lo > *r.hi) {
    throw Error(ErrorCode::CatalogFormat,
                "catalog line " + std::to_string(line_no) +
                    ": range lower bound exceeds upper bound");
  }
  return r;
}

}  // namespace

char to_char(Nucleotide n) noexcept {
  static constexpr char kChars[] = {'A', 'C', 'G', 'T'};
  return kChars[static_cast<std::size_t>(n)];
}

std::optional<Nucleotide> nucleotide_from_char(char c) noexcept {
  switch (c) {
    case 'A': case 'a': return Nucleotide::A;
    case 'C': case 'c': return Nucleotide::C;
    case 'G': case 'g': return Nucleotide::G;
    case 'T': case 't': return Nucleotide::T;
    default: return std::nullopt;
  }
}

DnaSequence::DnaSequence(std::vector<Nucleotide> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw Error(ErrorCode::EmptyInput, "sequence is empty");
  }
}

std::string DnaSequence::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (auto n : symbols_) out.push_back(to_char(n));
  return out;
}

DnaSequence parse_text(std::string_view raw, InputFormat format) {
  std::vector<Nucleotide> symbols;
  symbols.reserve(raw.size());
  bool at_line_start = true;
  bool in_header = false;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char c = raw[i];
    if (c == '\n') {
      at_line_start = true;
      in_header = false;
      continue;
    }
    if (in_header) continue;
    if (format == InputFormat::Fasta && at_line_start && c == '>') {
      in_header = true;
      at_line_start = false;
      continue;
    }
    at_line_start = false;
    if (is_space(c)) continue;
    auto n = nucleotide_from_char(c);
    if (!n) {
      std::string shown = (c >= 0x20 && c < 0x7f)
                              ? std::string(1, c)
                              : "\\x" + std::to_string(static_cast<unsigned char>(c));
      throw Error(ErrorCode::InvalidCharacter,
                  "invalid character '" + shown + "' at position " +
                      std::to_string(i + 1),
                  i + 1);
    }
    symbols.push_back(*n);
  }
  if (symbols.empty()) {
    throw Error(ErrorCode::EmptyInput, "no sequence data in input");
  }
  return DnaSequence(std::move(symbols));
}

Pattern parse_pattern(std::string_view raw) {
  return Pattern(parse_text(raw, InputFormat::Raw));
}

bool DiseaseEntry::ranges_overlap() const noexcept {
  // Two inclusive intervals intersect iff each starts before the other ends.
  const bool a = !normal.lo || !disease.hi || *normal.lo <= *disease.hi;
  const bool b = !disease.lo || !normal.hi || *disease.lo <= *normal.hi;
  return a && b;
}

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::Normal: return "Normal";
    case Classification::Indeterminate: return "Indeterminate";
    case Classification::Disease: return "Disease";
  }
  return "?";
}

Classification classify(std::uint64_t count, const DiseaseEntry& entry) noexcept {
  if (entry.disease.contains(count)) return Classification::Disease;
  if (entry.normal.contains(count)) return Classification::Normal;
  return Classification::Indeterminate;
}

std::vector<DiseaseEntry> parse_catalog(std::string_view text) {
  std::vector<DiseaseEntry> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 7) {
      throw Error(ErrorCode::CatalogFormat,
                  "catalog line " + std::to_string(line_no) + ": expected 7 fields, got " +
                      std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorCode::CatalogFormat,
                  "catalog line " + std::to_string(line_no) + ": empty name or gene");
    }
    std::optional<Pattern> pattern;
    try {
      pattern.emplace(parse_pattern(fields[2]));
    } catch (const Error& e) {
      throw Error(ErrorCode::CatalogFormat,
                  "catalog line " + std::to_string(line_no) + ": " + e.what());
    }
    if (pattern->size() < 3 || pattern->size() > 4) {
      throw Error(ErrorCode::CatalogFormat,
                  "catalog line " + std::to_string(line_no) +
                      ": pattern length must be 3 or 4");
    }
    out.push_back(DiseaseEntry{std::string(fields[0]), std::string(fields[1]),
                               std::move(*pattern),
                               parse_range(fields[3], fields[4], line_no),
                               parse_range(fields[5], fields[6], line_no)});
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<DiseaseEntry> load_catalog(const std::string& path) {
  return parse_catalog(read_file(path));
}

std::vector<DiseaseEntry> builtin_catalog() {
  return parse_catalog(kBuiltinCatalog);
}

const DiseaseEntry* find_disease(const std::vector<DiseaseEntry>& catalog,
                                 std::string_view name) noexcept {
  for (const auto& e : catalog) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace dnacam
