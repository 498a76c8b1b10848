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

#include "qdag/error.hpp"

namespace qdag {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEdgeNotForward: return "EdgeNotForward";
    case ErrorCode::kSinkOrderViolation: return "SinkOrderViolation";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kEmptyDomain: return "EmptyDomain";
    case ErrorCode::kMissingCombiner: return "MissingCombiner";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kFanoutOne: return "FanoutOne";
    case ErrorCode::kVarWithChildren: return "VarWithChildren";
    case ErrorCode::kGateWithoutInputs: return "GateWithoutInputs";
    case ErrorCode::kMissingPolarity: return "MissingPolarity";
    case ErrorCode::kRootHasParent: return "RootHasParent";
    case ErrorCode::kXorPresent: return "XorPresent";
    case ErrorCode::kNonBinaryXor: return "NonBinaryXor";
    case ErrorCode::kMissingVariable: return "MissingVariable";
    case ErrorCode::kConflictingAssignment: return "ConflictingAssignment";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kVariableIndexZero: return "VariableIndexZero";
    case ErrorCode::kConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::kSourceOutOfRange: return "SourceOutOfRange";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     Error::PositionKind kind, std::size_t position) {
  std::string out(error_code_name(code));
  switch (kind) {
    case Error::PositionKind::kLine:
      out += " at line " + std::to_string(position);
      break;
    case Error::PositionKind::kOffset:
      out += " at offset " + std::to_string(position);
      break;
    case Error::PositionKind::kNone:
      break;
  }
  return out + ": " + message;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message)
    : Error(code, message, PositionKind::kNone, 0) {}

Error::Error(ErrorCode code, const std::string& message, PositionKind kind,
             std::size_t position)
    : std::runtime_error(decorate(code, message, kind, position)),
      code_(code),
      position_kind_(kind),
      position_(position) {}

std::optional<std::size_t> Error::position() const {
  if (position_kind_ == PositionKind::kNone) return std::nullopt;
  return position_;
}

}  // namespace qdag
