// Copyright 2026 The topophase Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace topophase {

enum class ErrorCode {
    InvalidAxis,
    InvalidGate,
    InvalidState,
    DimensionMismatch,
    RepeatedTarget,
    InvalidIndex,
    NonHermitian,
    Unnormalized,
    PathNotClosed,
    ContinuityBroken,
    TangentialTouch,
    OpenTrajectory,
    SchemaViolation,
    ClosureViolation,
    NonCyclicEvolution,
    NegativeTime,
    EmptyTargets,
    InvalidArgument,
    FidelityBelowThreshold,
    NyquistViolation,
    LengthMismatch,
    EmptyBand,
    Io,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// All library failures are reported with this exception; `code()` tells the
/// caller which contract was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidAxis: return "invalid-axis";
        case ErrorCode::InvalidGate: return "invalid-gate";
        case ErrorCode::InvalidState: return "invalid-state";
        case ErrorCode::DimensionMismatch: return "dimension-mismatch";
        case ErrorCode::RepeatedTarget: return "repeated-target";
        case ErrorCode::InvalidIndex: return "invalid-index";
        case ErrorCode::NonHermitian: return "non-hermitian";
        case ErrorCode::Unnormalized: return "unnormalized";
        case ErrorCode::PathNotClosed: return "path-not-closed";
        case ErrorCode::ContinuityBroken: return "continuity-broken";
        case ErrorCode::TangentialTouch: return "tangential-touch";
        case ErrorCode::OpenTrajectory: return "open-trajectory";
        case ErrorCode::SchemaViolation: return "schema-violation";
        case ErrorCode::ClosureViolation: return "closure-violation";
        case ErrorCode::NonCyclicEvolution: return "non-cyclic-evolution";
        case ErrorCode::NegativeTime: return "negative-time";
        case ErrorCode::EmptyTargets: return "empty-targets";
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::FidelityBelowThreshold: return "fidelity-below-threshold";
        case ErrorCode::NyquistViolation: return "nyquist-violation";
        case ErrorCode::LengthMismatch: return "length-mismatch";
        case ErrorCode::EmptyBand: return "empty-band";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

}  // namespace topophase
