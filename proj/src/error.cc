// Copyright 2026 The kerrmzi Authors
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

#include "kerrmzi/error.h"

namespace kerrmzi {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::StageMismatch:
            return "StageMismatch";
        case ErrorCode::ZeroProbabilityPostselection:
            return "ZeroProbabilityPostselection";
        case ErrorCode::DegenerateConditional:
            return "DegenerateConditional";
        case ErrorCode::WeakValueDivergence:
            return "WeakValueDivergence";
        case ErrorCode::DomainError:
            return "DomainError";
        case ErrorCode::SingularFisher:
            return "SingularFisher";
        case ErrorCode::InfiniteSnr:
            return "InfiniteSNR";
        case ErrorCode::EmptySample:
            return "EmptySample";
        case ErrorCode::DegenerateSample:
            return "DegenerateSample";
        case ErrorCode::NumericalInconsistency:
            return "NumericalInconsistency";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace kerrmzi
