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

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "srbkit/freeness.hpp"
#include "srbkit/srb.hpp"

namespace srbkit {

struct CheckRecord {
    std::string id;
    bool passed = false;
    // Set when a freeness decision came back Unknown (reported separately
    // from an ordinary failure).
    bool unknown = false;
    // Failing records always carry concrete witness data.
    std::string witness;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    bool all_passed() const;
    bool any_unknown() const;
    std::string to_text() const;
};

// Statement-level checks; every check is exact. `progress`, when non-null,
// receives one diagnostic line per check as it completes.

// Divisibility characterization of both families plus the one-dimensionality
// of the constrained spaces behind them.
VerificationReport verify_characterization(const SrbResult& r, std::ostream* progress = nullptr);
// eta lies in D_0 of the Catalan cone, that graded piece is one-dimensional,
// and eta is fixed by every simple reflection.
VerificationReport verify_k_euler(const SrbResult& r, std::ostream* progress = nullptr);
// s_i fixes plus[j] (i != j) and hat_minus[i]; the cleared-denominator
// reflection identity for s_i(plus[i]).
VerificationReport verify_reflections(const SrbResult& r, std::ostream* progress = nullptr);
// Adding alpha + k z (resp. removing alpha - k z) keeps the cone free
// exactly for simple alpha.
VerificationReport verify_simplefree(const RootSystem& rs, int k, const FreenessOptions& opts = {},
                                     std::ostream* progress = nullptr);
// Freeness with the expected exponents for the added/deleted cones over the
// given subsets of the simple system, and for the corresponding
// multiarrangements on the base.
VerificationReport verify_exponents(const RootSystem& rs, int k, const std::vector<std::set<int>>& gammas,
                                    const FreenessOptions& opts = {}, std::ostream* progress = nullptr);
// Restriction to z = 0 is a bijection between the degree-kh pieces.
VerificationReport verify_ziegler(const RootSystem& rs, int k, std::ostream* progress = nullptr);

// Default subset list for verify_exponents: all subsets up to rank 2, and
// the empty set, {1}, and the full simple system above.
std::vector<std::set<int>> default_gammas(int rank);

}  // namespace srbkit
