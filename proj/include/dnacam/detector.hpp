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

#ifndef DNACAM_DETECTOR_HPP
#define DNACAM_DETECTOR_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dnacam {

// Counters and max registers are 8-bit and clamp at this value.
inline constexpr std::uint32_t kRegisterMax = 255;

// Longest run of 1s inside any residue class (1-based index mod p) of the
// stream, i.e. the longest tandem repeat recorded in the match-index bits.
// Max registers take max(max, ctr) on every 0 and once more at end of
// stream. Registers clamp at `register_max`.
std::uint32_t detect_functional(std::span<const std::uint8_t> bits, std::uint32_t p,
                                std::uint32_t register_max = kRegisterMax);

// Cycle-accurate three-pointer detector.
//
// States S2/S4/S6 increment pointer 1/2/3 and S1/S3/S5 update-then-reset
// pointer 1/2/3. Each input moves to the next pointer in round-robin order
// (Initial precedes pointer 1): x=1 selects its increment state, x=0 its
// update/reset state. d=1 moves to Exit. An update/reset request issued in
// cycle c compares into the max register in c+1 and clears the counter in
// c+2. CLR is high in Initial and Exit; Exit also folds the three max
// registers into the global maximum.
enum class FsmState : std::uint8_t { Initial, S1, S2, S3, S4, S5, S6, Exit };

std::string_view to_string(FsmState s) noexcept;

inline constexpr std::size_t kFsmPointers = 3;

struct PointerBlock {
  std::uint8_t counter = 0;
  std::uint8_t max_reg = 0;
};

struct DetectorState {
  std::array<PointerBlock, kFsmPointers> pointers{};
  FsmState state = FsmState::Initial;
  std::uint8_t global_max = 0;
  bool clr = true;
  std::uint64_t cycle = 0;
  // Cycles until a scheduled compare / counter reset fires (0 = none).
  std::array<std::uint8_t, kFsmPointers> compare_in{};
  std::array<std::uint8_t, kFsmPointers> reset_in{};
};

struct CycleRecord {
  std::uint64_t cycle = 0;
  FsmState from = FsmState::Initial;
  FsmState state = FsmState::Initial;
  bool x = false;
  bool d = false;
  std::array<bool, kFsmPointers> inc{};     // C1..C3
  std::array<bool, kFsmPointers> rst{};     // R1..R3
  std::array<bool, kFsmPointers> compared{};  // delayed compare fired
  std::array<bool, kFsmPointers> cleared{};   // delayed reset fired
  bool clr = false;
  // Register values at the end of the cycle.
  std::array<std::uint8_t, kFsmPointers> ctr{};
  std::array<std::uint8_t, kFsmPointers> max{};
  std::uint8_t global_max = 0;
  // Human-readable action of the entered state.
  std::string action;
};

// Throws SteppedAfterExit when `state` is already Exit.
DetectorState step_fsm(const DetectorState& state, bool x, bool d,
                       CycleRecord* record = nullptr);

struct CycleRun {
  std::uint32_t global_max = 0;
  std::vector<CycleRecord> trace;
};

// Number of cycles appended after the stream: four flush zeros followed by
// one zero with D raised, which moves the FSM to Exit.
inline constexpr std::uint64_t kFlushCycles = 5;

CycleRun run_cycle_accurate(std::span<const std::uint8_t> bits);

// Drives the FSM with explicit X and D sequences of equal length until D is
// raised (or the input ends).
CycleRun run_fsm_inputs(std::span<const std::uint8_t> x, std::span<const std::uint8_t> d);

// "cycle,state,x,d,C1,C2,C3,R1,R2,R3,ctr1,ctr2,ctr3,max1,max2,max3" rows
// with a header line and a trailing "# global_max=<n>" comment.
std::string trace_csv(const CycleRun& run);

// "<state>; <x><d> | <next state> | <action>" per cycle.
std::string action_table(const CycleRun& run);

}  // namespace dnacam

#endif  // DNACAM_DETECTOR_HPP
