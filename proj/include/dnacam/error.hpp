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

#ifndef DNACAM_ERROR_HPP
#define DNACAM_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dnacam {

enum class ErrorCode {
  EmptyInput,
  InvalidCharacter,
  CatalogFormat,
  UnknownDisease,
  TextTooLong,
  PatternTooLong,
  InvalidGeometry,
  WindowOutOfRange,
  BlockOutOfRange,
  PatternMismatch,
  OutOfOrderColumn,
  DirtyColumn,
  ModeViolation,
  IllegalTransition,
  SteppedAfterExit,
  UnsupportedMode,
  OverlappingAssignment,
  GeneNotMapped,
  Io,
  InternalInvariant,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures surface as this exception. Input errors carry an
// optional 1-based byte position into the offending input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

  // True for failures caused by user input rather than a broken internal
  // invariant.
  bool is_input_error() const noexcept {
    return code_ != ErrorCode::InternalInvariant;
  }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace dnacam

#endif  // DNACAM_ERROR_HPP
