// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "bohr/error.hpp"

namespace bohr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptySeries: return "EmptySeries";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorKind::RadiusOutOfRange: return "RadiusOutOfRange";
    case ErrorKind::RadiusOutOfWindow: return "RadiusOutOfWindow";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::OddGapRequired: return "OddGapRequired";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::ToleranceTooSmall: return "ToleranceTooSmall";
    case ErrorKind::DegenerateDirection: return "DegenerateDirection";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace bohr
