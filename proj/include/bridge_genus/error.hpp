// Copyright 2026 The bridge-genus Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace bridge_genus {

enum class ErrorCode {
    RunOutOfRange,
    EndRunNotSingle,
    LengthModViolation,
    TooFewRuns,
    Unsupported,
    TooShort,
    NotAKnot,
    ParityViolation,
    NonPositiveGenus,
    OddSum,
    InexactDivision,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::RunOutOfRange: return "RunOutOfRange";
    case ErrorCode::EndRunNotSingle: return "EndRunNotSingle";
    case ErrorCode::LengthModViolation: return "LengthModViolation";
    case ErrorCode::TooFewRuns: return "TooFewRuns";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::NonPositiveGenus: return "NonPositiveGenus";
    case ErrorCode::OddSum: return "OddSum";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace bridge_genus
