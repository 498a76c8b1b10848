// Copyright 2026 The qdag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDAG_ERROR_HPP
#define QDAG_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qdag {

enum class ErrorCode {
  // Graph model.
  kEdgeNotForward,
  kSinkOrderViolation,
  kDuplicateEdge,
  kIndexOutOfRange,
  kInvalidParams,
  // Oracle and primitives.
  kOutOfRange,
  kEmptyDomain,
  // DP engine.
  kMissingCombiner,
  kTypeMismatch,
  // Circuits.
  kFanoutOne,
  kVarWithChildren,
  kGateWithoutInputs,
  kMissingPolarity,
  kRootHasParent,
  kXorPresent,
  kNonBinaryXor,
  kMissingVariable,
  kConflictingAssignment,
  // Zhegalkin polynomials.
  kSyntaxError,
  kEmptyInput,
  kVariableIndexZero,
  kConstantPolynomial,
  // Paths and reference oracles.
  kSourceOutOfRange,
  kTooLarge,
  // Files.
  kFormatError,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

/// Every recoverable failure in the library. `position()` is a 1-based line
/// number for line-oriented formats and a 0-based byte offset for ANF text;
/// `position_kind()` says which.
class Error : public std::runtime_error {
 public:
  enum class PositionKind { kNone, kLine, kOffset };

  Error(ErrorCode code, const std::string& message);
  Error(ErrorCode code, const std::string& message, PositionKind kind,
        std::size_t position);

  ErrorCode code() const { return code_; }
  PositionKind position_kind() const { return position_kind_; }
  std::optional<std::size_t> position() const;

 private:
  ErrorCode code_;
  PositionKind position_kind_ = PositionKind::kNone;
  std::size_t position_ = 0;
};

}  // namespace qdag

#endif  // QDAG_ERROR_HPP
