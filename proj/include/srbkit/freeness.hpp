/*
   Copyright 2026 The srbkit Authors

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

#include <cstdint>
#include <optional>
#include <vector>

#include "srbkit/arrangement.hpp"
#include "srbkit/graded.hpp"

namespace srbkit {

// det of the coefficient matrix equals a nonzero constant times the
// defining product. Every member must lie in the module (checked; a
// violation throws rather than returning false).
bool saito_test(const std::vector<Derivation>& derivs, const CentralArrangement& target);
bool saito_test(const std::vector<Derivation>& derivs, const MultiArrangement& target);

enum class Freeness { Free, NotFree, Unknown };

struct FreenessVerdict {
    Freeness status = Freeness::Unknown;
    // Saito-certified basis degrees when Free.
    std::vector<int> exponents;
    // When NotFree: the smallest degree at which the computed graded
    // dimensions rule out every admissible exponent multiset, together with
    // the computed dimension there and the one the hypothesized exponents
    // would have produced.
    std::optional<int> certificate_degree;
    std::optional<int> computed_dimension;
    std::optional<int> hypothesized_dimension;
};

struct FreenessOptions {
    std::uint64_t seed = 20240517;
    int max_trials = 5;
    // Dimension scan cap; defaults to max(hypothesized) + 1.
    std::optional<int> max_degree;
};

// Decides freeness against a hypothesized exponent multiset (which must sum
// to the total multiplicity). Free verdicts carry a Saito-verified basis
// built from seeded generic combinations of graded bases, with candidates
// taken modulo polynomial multiples of the lower-degree generators; NotFree
// verdicts are certified by a graded dimension incompatible with every
// admissible multiset.
FreenessVerdict decide_freeness(const CentralArrangement& target, std::vector<int> hypothesized,
                                const FreenessOptions& opts = {});
FreenessVerdict decide_freeness(const MultiArrangement& target, std::vector<int> hypothesized,
                                const FreenessOptions& opts = {});

const char* to_string(Freeness f);

}  // namespace srbkit
