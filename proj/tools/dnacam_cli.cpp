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

// Command-line front end. Talks to the simulator exclusively through the C
// API in dnacam.h.
//
// Exit codes: 0 success, 1 input error, 2 internal invariant violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dnacam/dnacam.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

int exit_code(dnacam_status s) {
  if (s == DNACAM_OK) return kExitOk;
  return s == DNACAM_E_INTERNAL ? kExitInternal : kExitInput;
}

int report_failure(dnacam_status s) {
  std::cerr << "error: " << dnacam_status_name(s) << ": " << dnacam_last_error() << '\n';
  return exit_code(s);
}

// RAII wrapper for strings handed out by the library.
struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { dnacam_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

struct ScanOptions {
  std::string input;
  std::string format = "raw";
  std::optional<std::string> pattern;
  std::optional<std::string> disease;
  std::string catalog;
  std::vector<std::uint32_t> blocks;
  std::string layout;
  std::uint32_t rows = 512;
  std::uint32_t width = 128;
  std::uint32_t block_count = 8;
  std::uint32_t pattern_len = 0;
  double clock_ns = 1.0;
  double write_ns = 1.0;
  std::string mode = "functional";
  bool parallel = false;
  std::string trace;
  std::string memory_trace;
  std::string report;
  bool emit_report = true;
};

int run_scan(const ScanOptions& o) {
  std::string text;
  if (!read_input(o.input, text)) {
    std::cerr << "error: Io: cannot read input '" << o.input << "'\n";
    return kExitInput;
  }
  std::string layout;
  if (!o.layout.empty() && !read_input(o.layout, layout)) {
    std::cerr << "error: Io: cannot read layout '" << o.layout << "'\n";
    return kExitInput;
  }

  dnacam_catalog* catalog = nullptr;
  if (!o.catalog.empty()) {
    if (auto s = dnacam_catalog_load(o.catalog.c_str(), &catalog); s != DNACAM_OK) {
      return report_failure(s);
    }
  }

  dnacam_config config;
  dnacam_config_init(&config);
  config.rows = o.rows;
  config.width = o.width;
  config.blocks = o.block_count;
  config.pattern_len = o.pattern_len;
  config.clock_ns = o.clock_ns;
  config.write_time_ns = o.write_ns;
  config.mode = o.mode == "cycle" ? DNACAM_MODE_CYCLE : DNACAM_MODE_FUNCTIONAL;
  config.per_block_memory = o.parallel ? 1 : 0;

  dnacam_result* result = nullptr;
  const dnacam_status s = dnacam_scan(
      &config, text.data(), text.size(),
      o.format == "fasta" ? DNACAM_FORMAT_FASTA : DNACAM_FORMAT_RAW,
      o.pattern ? o.pattern->c_str() : nullptr, o.disease ? o.disease->c_str() : nullptr,
      catalog, o.blocks.empty() ? nullptr : o.blocks.data(), o.blocks.size(),
      layout.empty() ? nullptr : layout.c_str(), &result);
  dnacam_catalog_free(catalog);
  if (s != DNACAM_OK) return report_failure(s);

  int rc = kExitOk;
  if (o.emit_report) {
    OwnedString json;
    if (auto st = dnacam_result_report_json(result, &json.ptr); st != DNACAM_OK) {
      rc = report_failure(st);
    } else if (!write_output(o.report, json.str())) {
      std::cerr << "error: Io: cannot write report '" << o.report << "'\n";
      rc = kExitInput;
    }
  }
  if (rc == kExitOk && !o.trace.empty()) {
    OwnedString csv;
    if (auto st = dnacam_result_trace_csv(result, &csv.ptr); st != DNACAM_OK) {
      rc = report_failure(st);
    } else if (!write_output(o.trace, csv.str())) {
      std::cerr << "error: Io: cannot write trace '" << o.trace << "'\n";
      rc = kExitInput;
    }
  }
  if (rc == kExitOk && !o.memory_trace.empty()) {
    OwnedString mem;
    if (auto st = dnacam_result_memory_trace(result, &mem.ptr); st != DNACAM_OK) {
      rc = report_failure(st);
    } else if (!write_output(o.memory_trace, mem.str())) {
      std::cerr << "error: Io: cannot write memory trace '" << o.memory_trace << "'\n";
      rc = kExitInput;
    }
  }
  dnacam_result_free(result);
  return rc;
}

struct TraceOptions {
  std::string x;
  std::string d;
  std::string stream;
  std::string input;
  std::string pattern;
  std::string actions;
  std::string trace;
};

int run_trace(const TraceOptions& o) {
  if (!o.input.empty()) {
    ScanOptions scan;
    scan.input = o.input;
    scan.pattern = o.pattern;
    scan.mode = "cycle";
    scan.trace = o.trace.empty() ? "-" : o.trace;
    scan.emit_report = false;
    return run_scan(scan);
  }
  OwnedString csv;
  OwnedString actions;
  std::uint32_t global_max = 0;
  dnacam_status s;
  if (!o.x.empty()) {
    s = dnacam_trace_inputs(o.x.c_str(), o.d.c_str(), &csv.ptr, &actions.ptr, &global_max);
  } else {
    s = dnacam_trace_stream(o.stream.c_str(), &csv.ptr, &actions.ptr, &global_max);
  }
  if (s != DNACAM_OK) return report_failure(s);
  if (!write_output(o.trace, csv.str())) {
    std::cerr << "error: Io: cannot write trace '" << o.trace << "'\n";
    return kExitInput;
  }
  if (!o.actions.empty() && !write_output(o.actions, actions.str())) {
    std::cerr << "error: Io: cannot write actions '" << o.actions << "'\n";
    return kExitInput;
  }
  return kExitOk;
}

int run_reference_figures() {
  OwnedString table;
  int all_pass = 0;
  if (auto s = dnacam_reference_figures(&table.ptr, &all_pass); s != DNACAM_OK) {
    return report_failure(s);
  }
  std::cout << table.str();
  return all_pass ? kExitOk : kExitInput;
}

int run_catalog(const std::string& path) {
  dnacam_catalog* catalog = nullptr;
  const dnacam_status s = path.empty() ? dnacam_catalog_builtin(&catalog)
                                       : dnacam_catalog_load(path.c_str(), &catalog);
  if (s != DNACAM_OK) return report_failure(s);
  for (std::size_t i = 0; i < dnacam_catalog_size(catalog); ++i) {
    std::cout << dnacam_catalog_name(catalog, i) << '\t' << dnacam_catalog_gene(catalog, i)
              << '\t' << dnacam_catalog_pattern(catalog, i) << '\n';
  }
  dnacam_catalog_free(catalog);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aCAM DNA tandem-repeat accelerator simulator"};
  app.require_subcommand(0, 1);

  bool reference_figures = false;
  app.add_flag("--paper-numbers", reference_figures,
               "Recompute the published latency/energy figures and compare");

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "Scan a sequence for the longest tandem repeat");
  scan_cmd->add_option("--input", scan.input, "Sequence file ('-' for stdin)")->required();
  scan_cmd->add_option("--format", scan.format, "Input format")
      ->check(CLI::IsMember({"raw", "fasta"}));
  auto* pat = scan_cmd->add_option("--pattern", scan.pattern, "Pattern to search");
  auto* dis = scan_cmd->add_option("--disease", scan.disease, "Disease preset name");
  pat->excludes(dis);
  scan_cmd->add_option("--catalog", scan.catalog, "Disease catalog file");
  scan_cmd->add_option("--blocks", scan.blocks, "Activated blocks (1-based)")->delimiter(',');
  scan_cmd->add_option("--layout", scan.layout, "Gene layout file (GENE=1,2 per line)");
  scan_cmd->add_option("--rows", scan.rows, "Array rows M")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--width", scan.width, "Data columns per row W")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--block-count", scan.block_count, "Row blocks B")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--pattern-len", scan.pattern_len, "Pattern length p (must match)")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--clock-ns", scan.clock_ns, "Clock period T in ns")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--write-ns", scan.write_ns, "Memristor write time T_w in ns")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--mode", scan.mode, "Detector mode")
      ->check(CLI::IsMember({"functional", "cycle"}));
  scan_cmd->add_flag("--parallel", scan.parallel, "Private memory per block, blocks in parallel");
  scan_cmd->add_option("--trace", scan.trace, "Write detector trace CSV (cycle mode)");
  scan_cmd->add_option("--memory-trace", scan.memory_trace, "Write match-index memory trace");
  scan_cmd->add_option("--report", scan.report, "Write JSON report here instead of stdout");

  TraceOptions trace;
  auto* trace_cmd = app.add_subcommand("trace", "Run the cycle-accurate detector");
  auto* x_opt = trace_cmd->add_option("--x", trace.x, "X input bits, e.g. 101110000");
  auto* d_opt = trace_cmd->add_option("--d", trace.d, "D input bits, same length as --x");
  auto* s_opt = trace_cmd->add_option("--stream", trace.stream,
                                      "Match-index bit stream; flush cycles are appended");
  x_opt->needs(d_opt);
  d_opt->needs(x_opt);
  auto* i_opt = trace_cmd->add_option("--input", trace.input,
                                      "Sequence file; traces the stream derived from the scan");
  auto* p_opt = trace_cmd->add_option("--pattern", trace.pattern, "Pattern for --input");
  s_opt->excludes(x_opt);
  i_opt->excludes(x_opt);
  i_opt->excludes(s_opt);
  i_opt->needs(p_opt);
  trace_cmd->add_option("--trace", trace.trace, "Write CSV trace here instead of stdout");
  trace_cmd->add_option("--actions", trace.actions, "Write the state/action table");

  auto* ref_cmd = app.add_subcommand("figures", "Same as --paper-numbers");

  std::string catalog_path;
  auto* cat_cmd = app.add_subcommand("catalog", "List the disease catalog");
  cat_cmd->add_option("--catalog", catalog_path, "Catalog file (default: built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (reference_figures || ref_cmd->parsed()) return run_reference_figures();
  if (scan_cmd->parsed()) {
    if (!scan.pattern && !scan.disease) {
      std::cerr << "error: one of --pattern or --disease is required\n";
      return kExitInput;
    }
    return run_scan(scan);
  }
  if (trace_cmd->parsed()) {
    if (trace.x.empty() && trace.stream.empty() && trace.input.empty()) {
      std::cerr << "error: trace needs --x/--d, --stream or --input\n";
      return kExitInput;
    }
    return run_trace(trace);
  }
  if (cat_cmd->parsed()) return run_catalog(catalog_path);
  std::cout << app.help();
  return kExitInput;
}
