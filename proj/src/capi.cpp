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

#include "dnacam/dnacam.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dnacam/detector.hpp"
#include "dnacam/error.hpp"
#include "dnacam/pipeline.hpp"
#include "dnacam/report.hpp"
#include "dnacam/seqio.hpp"

struct dnacam_catalog {
  std::vector<dnacam::DiseaseEntry> entries;
  std::vector<std::string> patterns;
};

struct dnacam_result {
  dnacam::ScanRequest request;
  dnacam::ScanResult result;
  std::string memory_trace;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_position = 0;

dnacam_status status_of(dnacam::ErrorCode code) {
  using dnacam::ErrorCode;
  switch (code) {
    case ErrorCode::EmptyInput: return DNACAM_E_EMPTY_INPUT;
    case ErrorCode::InvalidCharacter: return DNACAM_E_INVALID_CHARACTER;
    case ErrorCode::CatalogFormat: return DNACAM_E_CATALOG_FORMAT;
    case ErrorCode::UnknownDisease: return DNACAM_E_UNKNOWN_DISEASE;
    case ErrorCode::TextTooLong: return DNACAM_E_TEXT_TOO_LONG;
    case ErrorCode::PatternTooLong: return DNACAM_E_PATTERN_TOO_LONG;
    case ErrorCode::InvalidGeometry: return DNACAM_E_INVALID_GEOMETRY;
    case ErrorCode::BlockOutOfRange: return DNACAM_E_BLOCK_OUT_OF_RANGE;
    case ErrorCode::PatternMismatch: return DNACAM_E_PATTERN_MISMATCH;
    case ErrorCode::UnsupportedMode: return DNACAM_E_UNSUPPORTED_MODE;
    case ErrorCode::OverlappingAssignment: return DNACAM_E_OVERLAPPING_ASSIGNMENT;
    case ErrorCode::GeneNotMapped: return DNACAM_E_GENE_NOT_MAPPED;
    case ErrorCode::Io: return DNACAM_E_IO;
    // Sequencing faults can only come from a broken pipeline.
    case ErrorCode::WindowOutOfRange:
    case ErrorCode::OutOfOrderColumn:
    case ErrorCode::DirtyColumn:
    case ErrorCode::ModeViolation:
    case ErrorCode::IllegalTransition:
    case ErrorCode::SteppedAfterExit:
    case ErrorCode::InternalInvariant:
      return DNACAM_E_INTERNAL;
  }
  return DNACAM_E_INTERNAL;
}

dnacam_status fail(dnacam_status status, std::string message, std::size_t position = 0) {
  g_last_error = std::move(message);
  g_last_position = position;
  return status;
}

template <typename F>
dnacam_status guarded(F&& body) {
  g_last_error.clear();
  g_last_position = 0;
  try {
    return body();
  } catch (const dnacam::Error& e) {
    return fail(status_of(e.code()), e.what(), e.position().value_or(0));
  } catch (const std::bad_alloc&) {
    return fail(DNACAM_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DNACAM_E_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::uint8_t> parse_bits(const char* s, const char* what) {
  if (!s) throw dnacam::Error(dnacam::ErrorCode::InvalidGeometry, std::string(what) + " is NULL");
  std::vector<std::uint8_t> bits;
  for (std::size_t i = 0; s[i]; ++i) {
    if (s[i] == '0' || s[i] == '1') {
      bits.push_back(s[i] == '1');
    } else if (s[i] != ' ' && s[i] != '\n' && s[i] != '\r' && s[i] != '\t' && s[i] != ',') {
      throw dnacam::Error(dnacam::ErrorCode::InvalidCharacter,
                          std::string(what) + ": expected 0/1 at position " +
                              std::to_string(i + 1),
                          i + 1);
    }
  }
  return bits;
}

dnacam_classification to_c(dnacam::Classification c) {
  switch (c) {
    case dnacam::Classification::Normal: return DNACAM_CLASS_NORMAL;
    case dnacam::Classification::Indeterminate: return DNACAM_CLASS_INDETERMINATE;
    case dnacam::Classification::Disease: return DNACAM_CLASS_DISEASE;
  }
  return DNACAM_CLASS_NONE;
}

dnacam_status emit_trace(const dnacam::CycleRun& run, char** trace_csv, char** actions,
                         uint32_t* global_max) {
  if (trace_csv) *trace_csv = dup_string(dnacam::trace_csv(run));
  if (actions) *actions = dup_string(dnacam::action_table(run));
  if (global_max) *global_max = run.global_max;
  return DNACAM_OK;
}

}  // namespace

extern "C" {

void dnacam_config_init(dnacam_config* config) {
  if (!config) return;
  const dnacam::ArrayGeometry g;
  config->rows = g.rows;
  config->width = g.width;
  config->blocks = g.blocks;
  config->pattern_len = 0;
  config->clock_ns = 1.0;
  config->write_time_ns = 1.0;
  config->mode = DNACAM_MODE_FUNCTIONAL;
  config->per_block_memory = 0;
}

const char* dnacam_last_error(void) { return g_last_error.c_str(); }

size_t dnacam_last_error_position(void) { return g_last_position; }

const char* dnacam_status_name(dnacam_status status) {
  switch (status) {
    case DNACAM_OK: return "OK";
    case DNACAM_E_INVALID_ARGUMENT: return "InvalidArgument";
    case DNACAM_E_EMPTY_INPUT: return "EmptyInput";
    case DNACAM_E_INVALID_CHARACTER: return "InvalidCharacter";
    case DNACAM_E_CATALOG_FORMAT: return "CatalogFormat";
    case DNACAM_E_UNKNOWN_DISEASE: return "UnknownDisease";
    case DNACAM_E_TEXT_TOO_LONG: return "TextTooLong";
    case DNACAM_E_PATTERN_TOO_LONG: return "PatternTooLong";
    case DNACAM_E_INVALID_GEOMETRY: return "InvalidGeometry";
    case DNACAM_E_BLOCK_OUT_OF_RANGE: return "BlockOutOfRange";
    case DNACAM_E_PATTERN_MISMATCH: return "PatternMismatch";
    case DNACAM_E_UNSUPPORTED_MODE: return "UnsupportedMode";
    case DNACAM_E_OVERLAPPING_ASSIGNMENT: return "OverlappingAssignment";
    case DNACAM_E_GENE_NOT_MAPPED: return "GeneNotMapped";
    case DNACAM_E_IO: return "Io";
    case DNACAM_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void dnacam_string_free(char* s) { std::free(s); }

dnacam_status dnacam_catalog_builtin(dnacam_catalog** out) {
  if (!out) return fail(DNACAM_E_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    auto* c = new dnacam_catalog{dnacam::builtin_catalog(), {}};
    for (const auto& e : c->entries) c->patterns.push_back(e.pattern.str());
    *out = c;
    return DNACAM_OK;
  });
}

dnacam_status dnacam_catalog_load(const char* path, dnacam_catalog** out) {
  if (!path || !out) return fail(DNACAM_E_INVALID_ARGUMENT, "path or out is NULL");
  return guarded([&] {
    auto* c = new dnacam_catalog{dnacam::load_catalog(path), {}};
    for (const auto& e : c->entries) c->patterns.push_back(e.pattern.str());
    *out = c;
    return DNACAM_OK;
  });
}

void dnacam_catalog_free(dnacam_catalog* catalog) { delete catalog; }

size_t dnacam_catalog_size(const dnacam_catalog* catalog) {
  return catalog ? catalog->entries.size() : 0;
}

const char* dnacam_catalog_name(const dnacam_catalog* catalog, size_t index) {
  if (!catalog || index >= catalog->entries.size()) return nullptr;
  return catalog->entries[index].name.c_str();
}

const char* dnacam_catalog_gene(const dnacam_catalog* catalog, size_t index) {
  if (!catalog || index >= catalog->entries.size()) return nullptr;
  return catalog->entries[index].gene.c_str();
}

const char* dnacam_catalog_pattern(const dnacam_catalog* catalog, size_t index) {
  if (!catalog || index >= catalog->entries.size()) return nullptr;
  return catalog->patterns[index].c_str();
}

dnacam_status dnacam_classify(const dnacam_catalog* catalog, const char* disease, uint64_t count,
                              dnacam_classification* out) {
  if (!catalog || !disease || !out) return fail(DNACAM_E_INVALID_ARGUMENT, "NULL argument");
  const auto* entry = dnacam::find_disease(catalog->entries, disease);
  if (!entry) return fail(DNACAM_E_UNKNOWN_DISEASE, std::string("unknown disease '") + disease + "'");
  *out = to_c(dnacam::classify(count, *entry));
  return DNACAM_OK;
}

dnacam_status dnacam_scan(const dnacam_config* config, const char* text, size_t len,
                          dnacam_format format, const char* pattern, const char* disease,
                          const dnacam_catalog* catalog, const uint32_t* blocks,
                          size_t n_blocks, const char* layout, dnacam_result** out) {
  if (!config || !text || !out) return fail(DNACAM_E_INVALID_ARGUMENT, "NULL argument");
  if ((pattern == nullptr) == (disease == nullptr)) {
    return fail(DNACAM_E_INVALID_ARGUMENT, "exactly one of pattern or disease is required");
  }
  if (n_blocks > 0 && !blocks) return fail(DNACAM_E_INVALID_ARGUMENT, "blocks is NULL");
  return guarded([&] {
    using namespace dnacam;
    std::vector<DiseaseEntry> builtin;
    const std::vector<DiseaseEntry>* entries = nullptr;
    if (catalog) {
      entries = &catalog->entries;
    } else {
      builtin = builtin_catalog();
      entries = &builtin;
    }

    std::optional<DiseaseEntry> entry;
    if (disease) {
      const auto* found = find_disease(*entries, disease);
      if (!found) {
        return fail(DNACAM_E_UNKNOWN_DISEASE, std::string("unknown disease '") + disease + "'");
      }
      entry = *found;
    }
    Pattern pat = disease ? entry->pattern : parse_pattern(pattern);

    ArrayGeometry g;
    g.rows = config->rows;
    g.width = config->width;
    g.blocks = config->blocks;
    g.pattern_len = config->pattern_len ? config->pattern_len : std::uint32_t(pat.size());

    std::vector<std::uint32_t> active;
    for (std::size_t i = 0; i < n_blocks; ++i) {
      if (blocks[i] == 0) {
        return fail(DNACAM_E_BLOCK_OUT_OF_RANGE, "block numbers are 1-based");
      }
      active.push_back(blocks[i] - 1);
    }
    if (active.empty() && layout && *layout) {
      if (!entry) {
        return fail(DNACAM_E_INVALID_ARGUMENT, "a block layout needs a disease to select a gene");
      }
      const BlockMap map = BlockMap::build(parse_layout(layout), g.blocks);
      active = map.blocks_for(*entry);
    }

    auto* r = new dnacam_result{
        ScanRequest{parse_text(std::string_view(text, len),
                               format == DNACAM_FORMAT_FASTA ? InputFormat::Fasta
                                                             : InputFormat::Raw),
                    std::move(pat), g},
        {},
        {}};
    std::unique_ptr<dnacam_result> holder(r);
    r->request.active_blocks = std::move(active);
    r->request.clock_ns = config->clock_ns;
    r->request.write_time_ns = config->write_time_ns;
    r->request.mode = config->mode == DNACAM_MODE_CYCLE ? DetectorMode::CycleAccurate
                                                        : DetectorMode::Functional;
    r->request.memory = config->per_block_memory ? MemoryPolicy::PerBlock : MemoryPolicy::Shared;
    r->request.disease = entry;
    std::ostringstream memory_trace;
    r->request.memory_trace = &memory_trace;
    r->result = scan(r->request);
    r->request.memory_trace = nullptr;
    r->memory_trace = memory_trace.str();
    *out = holder.release();
    return DNACAM_OK;
  });
}

void dnacam_result_free(dnacam_result* result) { delete result; }

uint32_t dnacam_result_global_max(const dnacam_result* result) {
  return result ? result->result.global_max : 0;
}

dnacam_classification dnacam_result_classification(const dnacam_result* result) {
  if (!result || !result->result.classification) return DNACAM_CLASS_NONE;
  return to_c(*result->result.classification);
}

dnacam_status dnacam_result_report_json(const dnacam_result* result, char** out) {
  if (!result || !out) return fail(DNACAM_E_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    *out = dup_string(dnacam::report_json(result->request, result->result));
    return DNACAM_OK;
  });
}

dnacam_status dnacam_result_trace_csv(const dnacam_result* result, char** out) {
  if (!result || !out) return fail(DNACAM_E_INVALID_ARGUMENT, "NULL argument");
  if (result->request.mode != dnacam::DetectorMode::CycleAccurate) {
    return fail(DNACAM_E_UNSUPPORTED_MODE, "detector trace requires cycle mode");
  }
  return guarded([&] {
    std::string text;
    for (const auto& run : result->result.runs) {
      text += "# blocks " + std::to_string(run.first_block + 1) + "-" +
              std::to_string(run.last_block + 1) + "\n";
      text += dnacam::trace_csv(*run.cycle);
    }
    *out = dup_string(text);
    return DNACAM_OK;
  });
}

dnacam_status dnacam_result_memory_trace(const dnacam_result* result, char** out) {
  if (!result || !out) return fail(DNACAM_E_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    *out = dup_string(result->memory_trace);
    return DNACAM_OK;
  });
}

dnacam_status dnacam_trace_inputs(const char* x, const char* d, char** trace_csv, char** actions,
                                  uint32_t* global_max) {
  return guarded([&] {
    const auto xs = parse_bits(x, "X");
    const auto ds = parse_bits(d, "D");
    return emit_trace(dnacam::run_fsm_inputs(xs, ds), trace_csv, actions, global_max);
  });
}

dnacam_status dnacam_trace_stream(const char* bits, char** trace_csv, char** actions,
                                  uint32_t* global_max) {
  return guarded([&] {
    return emit_trace(dnacam::run_cycle_accurate(parse_bits(bits, "stream")), trace_csv, actions,
                      global_max);
  });
}

dnacam_status dnacam_detect(const char* bits, uint32_t p, uint32_t* global_max) {
  if (!global_max) return fail(DNACAM_E_INVALID_ARGUMENT, "global_max is NULL");
  return guarded([&] {
    *global_max = dnacam::detect_functional(parse_bits(bits, "stream"), p);
    return DNACAM_OK;
  });
}

dnacam_status dnacam_reference_figures(char** out, int* all_pass) {
  if (!out) return fail(DNACAM_E_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    const auto checks = dnacam::reference_checks();
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass();
    *out = dup_string(dnacam::render_reference_checks(checks));
    if (all_pass) *all_pass = pass ? 1 : 0;
    return DNACAM_OK;
  });
}

}  // extern "C"
