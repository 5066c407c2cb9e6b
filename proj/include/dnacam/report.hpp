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

#ifndef DNACAM_REPORT_HPP
#define DNACAM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "dnacam/pipeline.hpp"

namespace dnacam {

// Flat JSON object, one per scan. Times in ns, energies in nJ (per-char in
// pJ), all rounded to 3 decimals. Every key is always present; disease
// fields are null when no disease was requested.
std::string report_json(const ScanRequest& request, const ScanResult& result);

// The fixed key set emitted by report_json, in emission order.
const std::vector<std::string>& report_keys();

// One published figure of the default 512x130 design recomputed by the
// model. `reference` is empty for purely informational rows.
struct ReferenceCheck {
  std::string name;
  std::string unit;
  double computed = 0;
  std::optional<double> reference;
  double rel_tolerance = 0;
  std::string note;

  bool pass() const;
};

// Latency, energy and breakdown figures for the default geometry,
// including the one-million-character workload for p = 3, 5 and 10. Energy
// rows come from metered single-block simulations.
std::vector<ReferenceCheck> reference_checks();

std::string render_reference_checks(const std::vector<ReferenceCheck>& checks);

}  // namespace dnacam

#endif  // DNACAM_REPORT_HPP
