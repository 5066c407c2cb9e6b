/*
 * Copyright 2026 The dnacam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the dnacam simulator. All objects are opaque handles owned
 * by the caller and released with the matching *_free function. Functions
 * return a dnacam_status; on failure dnacam_last_error() describes the
 * problem for the calling thread. Strings returned through char** out
 * parameters are heap-allocated and released with dnacam_string_free.
 */
#ifndef DNACAM_H
#define DNACAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DNACAM_BUILDING_LIBRARY)
#    define DNACAM_API __declspec(dllexport)
#  else
#    define DNACAM_API __declspec(dllimport)
#  endif
#else
#  define DNACAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dnacam_status {
  DNACAM_OK = 0,
  DNACAM_E_INVALID_ARGUMENT = 1,
  DNACAM_E_EMPTY_INPUT = 2,
  DNACAM_E_INVALID_CHARACTER = 3,
  DNACAM_E_CATALOG_FORMAT = 4,
  DNACAM_E_UNKNOWN_DISEASE = 5,
  DNACAM_E_TEXT_TOO_LONG = 6,
  DNACAM_E_PATTERN_TOO_LONG = 7,
  DNACAM_E_INVALID_GEOMETRY = 8,
  DNACAM_E_BLOCK_OUT_OF_RANGE = 9,
  DNACAM_E_PATTERN_MISMATCH = 10,
  DNACAM_E_UNSUPPORTED_MODE = 11,
  DNACAM_E_OVERLAPPING_ASSIGNMENT = 12,
  DNACAM_E_GENE_NOT_MAPPED = 13,
  DNACAM_E_IO = 14,
  DNACAM_E_INTERNAL = 100
} dnacam_status;

typedef enum dnacam_format { DNACAM_FORMAT_RAW = 0, DNACAM_FORMAT_FASTA = 1 } dnacam_format;

typedef enum dnacam_mode {
  DNACAM_MODE_FUNCTIONAL = 0,
  DNACAM_MODE_CYCLE = 1
} dnacam_mode;

typedef enum dnacam_classification {
  DNACAM_CLASS_NONE = -1,
  DNACAM_CLASS_NORMAL = 0,
  DNACAM_CLASS_INDETERMINATE = 1,
  DNACAM_CLASS_DISEASE = 2
} dnacam_classification;

typedef struct dnacam_catalog dnacam_catalog;
typedef struct dnacam_result dnacam_result;

/* Scan configuration. Initialize with dnacam_config_init. */
typedef struct dnacam_config {
  uint32_t rows;        /* M */
  uint32_t width;       /* W, data columns per row */
  uint32_t blocks;      /* B */
  uint32_t pattern_len; /* 0 = take from the pattern */
  double clock_ns;      /* T */
  double write_time_ns; /* T_w */
  dnacam_mode mode;
  int per_block_memory; /* nonzero: private memory per block, run in parallel */
} dnacam_config;

DNACAM_API void dnacam_config_init(dnacam_config* config);

DNACAM_API const char* dnacam_last_error(void);
/* 1-based byte offset of the last InvalidCharacter error, or 0. */
DNACAM_API size_t dnacam_last_error_position(void);
DNACAM_API const char* dnacam_status_name(dnacam_status status);

DNACAM_API void dnacam_string_free(char* s);

/* Disease catalog ---------------------------------------------------------*/

DNACAM_API dnacam_status dnacam_catalog_builtin(dnacam_catalog** out);
DNACAM_API dnacam_status dnacam_catalog_load(const char* path, dnacam_catalog** out);
DNACAM_API void dnacam_catalog_free(dnacam_catalog* catalog);
DNACAM_API size_t dnacam_catalog_size(const dnacam_catalog* catalog);
DNACAM_API const char* dnacam_catalog_name(const dnacam_catalog* catalog, size_t index);
DNACAM_API const char* dnacam_catalog_gene(const dnacam_catalog* catalog, size_t index);
DNACAM_API const char* dnacam_catalog_pattern(const dnacam_catalog* catalog, size_t index);
DNACAM_API dnacam_status dnacam_classify(const dnacam_catalog* catalog, const char* disease,
                                         uint64_t count, dnacam_classification* out);

/* Scanning ----------------------------------------------------------------*/

/*
 * Runs one scan over `text` (len bytes in `format`).
 *
 * Exactly one of `pattern` / `disease` must be non-NULL; a disease name is
 * looked up in `catalog` (the built-in catalog when NULL). `blocks` lists
 * 1-based block numbers to activate; when n_blocks is 0 the blocks are
 * taken from `layout` for the disease's gene ("GENE=1,2" entries separated
 * by newlines or ';'), or, without a layout, from the blocks the text
 * occupies.
 */
DNACAM_API dnacam_status dnacam_scan(const dnacam_config* config, const char* text, size_t len,
                                     dnacam_format format, const char* pattern,
                                     const char* disease, const dnacam_catalog* catalog,
                                     const uint32_t* blocks, size_t n_blocks,
                                     const char* layout, dnacam_result** out);
DNACAM_API void dnacam_result_free(dnacam_result* result);
DNACAM_API uint32_t dnacam_result_global_max(const dnacam_result* result);
DNACAM_API dnacam_classification dnacam_result_classification(const dnacam_result* result);
DNACAM_API dnacam_status dnacam_result_report_json(const dnacam_result* result, char** out);
/* Detector trace (CSV) in cycle mode; one section per detection run. */
DNACAM_API dnacam_status dnacam_result_trace_csv(const dnacam_result* result, char** out);
/* Memory trace: mode transitions and column writes. */
DNACAM_API dnacam_status dnacam_result_memory_trace(const dnacam_result* result, char** out);

/* Detector ----------------------------------------------------------------*/

/*
 * Cycle-accurate detector on explicit X/D sequences given as '0'/'1'
 * strings of equal length. Writes the CSV trace and the action table.
 */
DNACAM_API dnacam_status dnacam_trace_inputs(const char* x, const char* d, char** trace_csv,
                                             char** actions, uint32_t* global_max);
/* Cycle-accurate detector on a '0'/'1' stream with the flush cycles added. */
DNACAM_API dnacam_status dnacam_trace_stream(const char* bits, char** trace_csv,
                                             char** actions, uint32_t* global_max);
DNACAM_API dnacam_status dnacam_detect(const char* bits, uint32_t p, uint32_t* global_max);

/* Reference figures -------------------------------------------------------*/

/* Renders the latency/energy reproduction table; *all_pass is set to 1
 * when every row with a reference value is within tolerance. */
DNACAM_API dnacam_status dnacam_reference_figures(char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* DNACAM_H */
