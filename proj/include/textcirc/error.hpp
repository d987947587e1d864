// Copyright 2026 The textcirc Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace textcirc {

enum class ErrorCode {
  // grammar
  UnknownRule,
  SymbolPositionInvalid,
  VocabularyViolation,
  NonTerminalLeaf,
  ValidationFailure,
  // hybrid
  InvalidOccurrence,
  DoubleLink,
  OrderViolation,
  NonAdjacent,
  ScopeEscape,
  NotFusable,
  // diagrams and circuits
  EntityMismatch,
  DanglingLink,
  UnreducedCopula,
  ArityViolation,
  CycleDetected,
  MissingDictionaryEntry,
  // generation
  ParamsInvalid,
  Unrealizable,
  // io
  LexError,
  UnbalancedParens,
  BadEntityIndex,
  FormatError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownRule: return "UnknownRule";
    case ErrorCode::SymbolPositionInvalid: return "SymbolPositionInvalid";
    case ErrorCode::VocabularyViolation: return "VocabularyViolation";
    case ErrorCode::NonTerminalLeaf: return "NonTerminalLeaf";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::InvalidOccurrence: return "InvalidOccurrence";
    case ErrorCode::DoubleLink: return "DoubleLink";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::NonAdjacent: return "NonAdjacent";
    case ErrorCode::ScopeEscape: return "ScopeEscape";
    case ErrorCode::NotFusable: return "NotFusable";
    case ErrorCode::EntityMismatch: return "EntityMismatch";
    case ErrorCode::DanglingLink: return "DanglingLink";
    case ErrorCode::UnreducedCopula: return "UnreducedCopula";
    case ErrorCode::ArityViolation: return "ArityViolation";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::MissingDictionaryEntry: return "MissingDictionaryEntry";
    case ErrorCode::ParamsInvalid: return "ParamsInvalid";
    case ErrorCode::Unrealizable: return "Unrealizable";
    case ErrorCode::LexError: return "LexError";
    case ErrorCode::UnbalancedParens: return "UnbalancedParens";
    case ErrorCode::BadEntityIndex: return "BadEntityIndex";
    case ErrorCode::FormatError: return "FormatError";
  }
  return "Unknown";
}

/// Every failure in the library surfaces as this exception. Format errors
/// carry a 1-based line/column; other errors leave them at zero.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0,
        std::size_t column = 0)
      : std::runtime_error(format(code, message, line, column)),
        code_(code),
        message_(message),
        line_(line),
        column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code and position prefix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(ErrorCode code, const std::string& message,
                            std::size_t line, std::size_t column) {
    std::string out(to_string(code));
    if (line != 0) {
      out += " at " + std::to_string(line) + ":" + std::to_string(column);
    }
    out += ": ";
    out += message;
    return out;
  }

  ErrorCode code_;
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace textcirc
