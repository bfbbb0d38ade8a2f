// Copyright 2026 The update-structures Authors
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

#ifndef UPDSTRUCT_CHECK_RESULT_HPP
#define UPDSTRUCT_CHECK_RESULT_HPP

#include <string>
#include <vector>

#include "updstruct/category.hpp"

namespace updstruct {

/// One named equation checked on concrete morphisms.
///
/// Invariant: `holds == (residual <= threshold)`. On the set backend the
/// residual counts disagreeing inputs and the threshold is 0.
struct LawCheckResult {
    std::string law;
    bool holds = false;
    double residual = 0;
    double threshold = 0;
    std::vector<std::size_t> witnesses;

    static LawCheckResult from(std::string law, Comparison c) {
        return LawCheckResult{std::move(law), c.holds, c.residual, c.threshold, std::move(c.witnesses)};
    }
};

/// The failing comparison if any, else the one with the larger residual.
inline Comparison worst_of(Comparison a, Comparison b) {
    if (!a.holds) {
        return a;
    }
    if (!b.holds) {
        return b;
    }
    return a.residual >= b.residual ? a : b;
}

/// Raised when a check needs an optional component the structure lacks.
struct MissingComponent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace updstruct

#endif
