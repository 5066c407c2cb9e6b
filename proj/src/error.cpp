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

#include "dnacam/error.hpp"

namespace dnacam {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::CatalogFormat: return "CatalogFormat";
    case ErrorCode::UnknownDisease: return "UnknownDisease";
    case ErrorCode::TextTooLong: return "TextTooLong";
    case ErrorCode::PatternTooLong: return "PatternTooLong";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::WindowOutOfRange: return "WindowOutOfRange";
    case ErrorCode::BlockOutOfRange: return "BlockOutOfRange";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::OutOfOrderColumn: return "OutOfOrderColumn";
    case ErrorCode::DirtyColumn: return "DirtyColumn";
    case ErrorCode::ModeViolation: return "ModeViolation";
    case ErrorCode::IllegalTransition: return "IllegalTransition";
    case ErrorCode::SteppedAfterExit: return "SteppedAfterExit";
    case ErrorCode::UnsupportedMode: return "UnsupportedMode";
    case ErrorCode::OverlappingAssignment: return "OverlappingAssignment";
    case ErrorCode::GeneNotMapped: return "GeneNotMapped";
    case ErrorCode::Io: return "Io";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace dnacam
