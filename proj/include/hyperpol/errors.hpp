/*
   Copyright 2026 hyperpol developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace hyperpol {

/// Failure categories raised by the library. The CLI maps these onto exit
/// codes and machine-readable error records.
enum class Errc {
    NonNormalizable,      // coefficient pair breaks the orthogonality relation
    OutOfRange,           // a probability component left [0, 1]
    DegenerateInput,      // an input frequency/probability is zero where a ratio is needed
    InvalidCoefficients,  // deviation pair outside the representable sign/range convention
    InfeasiblePhase,      // phase value induces an output probability outside [0, 1]
    DomainError,          // phase outside a profile's domain
    EmptyRange,           // no feasible phase exists
    SizeMismatch,         // ensembles of different population size
    InvalidSpec,          // experiment spec failed validation
    NumericFailure,       // unclassified runtime numeric failure
};

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NonNormalizable: return "non_normalizable";
        case Errc::OutOfRange: return "out_of_range";
        case Errc::DegenerateInput: return "degenerate_input";
        case Errc::InvalidCoefficients: return "invalid_coefficients";
        case Errc::InfeasiblePhase: return "infeasible_phase";
        case Errc::DomainError: return "domain_error";
        case Errc::EmptyRange: return "empty_range";
        case Errc::SizeMismatch: return "size_mismatch";
        case Errc::InvalidSpec: return "invalid_spec";
        case Errc::NumericFailure: return "numeric_failure";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          message_(message) {}

    Errc code() const noexcept { return code_; }

    /// The description alone, without the errc_name prefix what() carries.
    const std::string& message() const noexcept { return message_; }

  private:
    Errc code_;
    std::string message_;
};

}  // namespace hyperpol
