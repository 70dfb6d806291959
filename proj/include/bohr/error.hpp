// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bohr {

enum class ErrorKind {
  EmptySeries,
  ZeroConstantTerm,
  ParameterOutOfRange,
  TruncationInsufficient,
  RadiusOutOfRange,
  RadiusOutOfWindow,
  ShapeMismatch,
  OddGapRequired,
  UnknownTheorem,
  NoSignChange,
  ToleranceTooSmall,
  DegenerateDirection,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (and tests) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace bohr
