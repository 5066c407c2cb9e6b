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

#ifndef DNACAM_SEQIO_HPP
#define DNACAM_SEQIO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dnacam {

enum class Nucleotide : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

inline constexpr std::size_t kNucleotideCount = 4;

char to_char(Nucleotide n) noexcept;
std::optional<Nucleotide> nucleotide_from_char(char c) noexcept;

// Ordered, non-empty run of nucleotides. Used both as search text and
// (wrapped in Pattern) as the searched motif.
class DnaSequence {
 public:
  explicit DnaSequence(std::vector<Nucleotide> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  Nucleotide operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const Nucleotide> symbols() const noexcept { return symbols_; }

  std::string str() const;

  friend bool operator==(const DnaSequence&, const DnaSequence&) = default;

 private:
  std::vector<Nucleotide> symbols_;
};

class Pattern {
 public:
  explicit Pattern(DnaSequence seq) : seq_(std::move(seq)) {}

  std::size_t size() const noexcept { return seq_.size(); }
  Nucleotide operator[](std::size_t i) const noexcept { return seq_[i]; }
  std::span<const Nucleotide> symbols() const noexcept { return seq_.symbols(); }
  const DnaSequence& sequence() const noexcept { return seq_; }
  std::string str() const { return seq_.str(); }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  DnaSequence seq_;
};

enum class InputFormat { Raw, Fasta };

// Validates and normalizes text. FASTA header lines ('>') are dropped and
// line breaks removed; ASCII whitespace is ignored in both formats.
// Lowercase acgt is folded to uppercase. Any other byte raises
// InvalidCharacter with its 1-based offset in `raw`.
DnaSequence parse_text(std::string_view raw, InputFormat format);
Pattern parse_pattern(std::string_view raw);

// Inclusive integer interval; a missing endpoint means unbounded.
struct CountRange {
  std::optional<std::uint32_t> lo;
  std::optional<std::uint32_t> hi;

  bool contains(std::uint64_t count) const noexcept {
    return (!lo || count >= *lo) && (!hi || count <= *hi);
  }
  friend bool operator==(const CountRange&, const CountRange&) = default;
};

struct DiseaseEntry {
  std::string name;
  std::string gene;
  Pattern pattern;
  CountRange normal;
  CountRange disease;

  // Both ranges share at least one count (the catalog keeps such rows
  // verbatim; classify() resolves the overlap towards Disease).
  bool ranges_overlap() const noexcept;
};

enum class Classification { Normal, Indeterminate, Disease };

std::string_view to_string(Classification c) noexcept;

Classification classify(std::uint64_t count, const DiseaseEntry& entry) noexcept;

// Catalog file: one record per line,
//   name,gene,pattern,normal_lo,normal_hi,disease_lo,disease_hi
// with '*' for an unbounded endpoint. Blank lines and lines starting with
// '#' are skipped.
std::vector<DiseaseEntry> parse_catalog(std::string_view text);
std::vector<DiseaseEntry> load_catalog(const std::string& path);
std::vector<DiseaseEntry> builtin_catalog();

// Case-sensitive match on the disease name.
const DiseaseEntry* find_disease(const std::vector<DiseaseEntry>& catalog,
                                 std::string_view name) noexcept;

std::string read_file(const std::string& path);

}  // namespace dnacam

#endif  // DNACAM_SEQIO_HPP
