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

#include "dnacam/detector.hpp"

#include <algorithm>
#include <sstream>

#include "dnacam/error.hpp"

namespace dnacam {

namespace {

std::uint8_t saturating_inc(std::uint8_t v) {
  return v < kRegisterMax ? static_cast<std::uint8_t>(v + 1) : v;
}

// Pointer index (0-based) served by a state; Initial behaves as if the
// last pointer had just been served.
std::size_t pointer_of(FsmState s) {
  switch (s) {
    case FsmState::S1: case FsmState::S2: return 0;
    case FsmState::S3: case FsmState::S4: return 1;
    case FsmState::S5: case FsmState::S6: return 2;
    default: return kFsmPointers - 1;
  }
}

bool is_increment(FsmState s) {
  return s == FsmState::S2 || s == FsmState::S4 || s == FsmState::S6;
}

bool is_update(FsmState s) {
  return s == FsmState::S1 || s == FsmState::S3 || s == FsmState::S5;
}

FsmState next_state(FsmState from, bool x, bool d) {
  if (d) return FsmState::Exit;
  static constexpr FsmState kInc[] = {FsmState::S2, FsmState::S4, FsmState::S6};
  static constexpr FsmState kUpd[] = {FsmState::S1, FsmState::S3, FsmState::S5};
  const std::size_t ptr = (pointer_of(from) + 1) % kFsmPointers;
  return x ? kInc[ptr] : kUpd[ptr];
}

}  // namespace

std::string_view to_string(FsmState s) noexcept {
  switch (s) {
    case FsmState::Initial: return "Initial";
    case FsmState::S1: return "S1";
    case FsmState::S2: return "S2";
    case FsmState::S3: return "S3";
    case FsmState::S4: return "S4";
    case FsmState::S5: return "S5";
    case FsmState::S6: return "S6";
    case FsmState::Exit: return "Exit";
  }
  return "?";
}

std::uint32_t detect_functional(std::span<const std::uint8_t> bits, std::uint32_t p,
                                std::uint32_t register_max) {
  if (p == 0) throw Error(ErrorCode::InvalidGeometry, "pattern length must be positive");
  std::vector<std::uint32_t> ctr(p, 0);
  std::vector<std::uint32_t> max(p, 0);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    const std::size_t x = (k + 1) % p;
    if (bits[k]) {
      ctr[x] = std::min(ctr[x] + 1, register_max);
    } else {
      max[x] = std::max(max[x], ctr[x]);
      ctr[x] = 0;
    }
  }
  std::uint32_t global = 0;
  for (std::size_t x = 0; x < p; ++x) global = std::max({global, max[x], ctr[x]});
  return global;
}

DetectorState step_fsm(const DetectorState& current, bool x, bool d, CycleRecord* record) {
  if (current.state == FsmState::Exit) {
    throw Error(ErrorCode::SteppedAfterExit, "detector stepped after reaching Exit");
  }
  DetectorState s = current;
  ++s.cycle;
  const FsmState entered = next_state(current.state, x, d);
  s.state = entered;

  CycleRecord rec;
  rec.cycle = s.cycle;
  rec.from = current.state;
  rec.state = entered;
  rec.x = x;
  rec.d = d;

  // Delayed pointer operations scheduled by earlier update states.
  for (std::size_t k = 0; k < kFsmPointers; ++k) {
    auto& ptr = s.pointers[k];
    if (s.compare_in[k] != 0 && --s.compare_in[k] == 0) {
      ptr.max_reg = std::max(ptr.max_reg, ptr.counter);
      rec.compared[k] = true;
    }
    if (s.reset_in[k] != 0 && --s.reset_in[k] == 0) {
      ptr.counter = 0;
      rec.cleared[k] = true;
    }
  }

  std::ostringstream action;
  const std::size_t k = pointer_of(entered);
  if (is_increment(entered)) {
    auto& ptr = s.pointers[k];
    ptr.counter = saturating_inc(ptr.counter);
    rec.inc[k] = true;
    action << "Increment ctr" << k + 1 << " (C" << k + 1 << "=1): ctr" << k + 1
           << '=' << unsigned(ptr.counter);
  } else if (is_update(entered)) {
    const auto& ptr = s.pointers[k];
    s.compare_in[k] = 1;
    s.reset_in[k] = 2;
    rec.rst[k] = true;
    action << "Update max" << k + 1 << ": max" << k + 1
           << ":=" << unsigned(std::max(ptr.max_reg, ptr.counter)) << "; Reset ctr"
           << k + 1 << " (R" << k + 1 << "=1): ctr" << k + 1 << "=0";
  }

  s.clr = entered == FsmState::Initial || entered == FsmState::Exit;
  if (s.clr) {
    for (auto& ptr : s.pointers) ptr.counter = 0;
  }
  if (entered == FsmState::Exit) {
    // Two-level comparator tree over the max registers.
    const auto first = std::max(s.pointers[0].max_reg, s.pointers[1].max_reg);
    s.global_max = std::max(first, s.pointers[2].max_reg);
    s.compare_in.fill(0);
    s.reset_in.fill(0);
    action << "Global max = " << unsigned(s.global_max);
  }

  if (record) {
    rec.clr = s.clr;
    for (std::size_t i = 0; i < kFsmPointers; ++i) {
      rec.ctr[i] = s.pointers[i].counter;
      rec.max[i] = s.pointers[i].max_reg;
    }
    rec.global_max = s.global_max;
    rec.action = action.str();
    *record = std::move(rec);
  }
  return s;
}

CycleRun run_fsm_inputs(std::span<const std::uint8_t> x, std::span<const std::uint8_t> d) {
  if (x.size() != d.size()) {
    throw Error(ErrorCode::InvalidGeometry, "X and D sequences differ in length");
  }
  CycleRun run;
  DetectorState state;
  for (std::size_t i = 0; i < x.size() && state.state != FsmState::Exit; ++i) {
    CycleRecord rec;
    state = step_fsm(state, x[i] != 0, d[i] != 0, &rec);
    run.trace.push_back(std::move(rec));
  }
  run.global_max = state.global_max;
  return run;
}

CycleRun run_cycle_accurate(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> x(bits.begin(), bits.end());
  std::vector<std::uint8_t> d(bits.size(), 0);
  x.insert(x.end(), kFlushCycles, 0);
  d.insert(d.end(), kFlushCycles - 1, 0);
  d.push_back(1);
  return run_fsm_inputs(x, d);
}

std::string trace_csv(const CycleRun& run) {
  std::ostringstream out;
  out << "cycle,state,x,d,C1,C2,C3,R1,R2,R3,ctr1,ctr2,ctr3,max1,max2,max3\n";
  for (const auto& r : run.trace) {
    out << r.cycle << ',' << to_string(r.state) << ',' << r.x << ',' << r.d;
    for (bool c : r.inc) out << ',' << c;
    for (bool c : r.rst) out << ',' << c;
    for (auto v : r.ctr) out << ',' << unsigned(v);
    for (auto v : r.max) out << ',' << unsigned(v);
    out << '\n';
  }
  out << "# global_max=" << run.global_max << '\n';
  return out.str();
}

std::string action_table(const CycleRun& run) {
  std::ostringstream out;
  for (const auto& r : run.trace) {
    out << to_string(r.from) << "; " << r.x << r.d << " | " << to_string(r.state)
        << " | " << r.action << '\n';
  }
  return out.str();
}

}  // namespace dnacam
