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

#include <set>
#include <string>
#include <vector>

#include "srbkit/polynomial.hpp"
#include "srbkit/root_system.hpp"

namespace srbkit {

// Affine arrangement of root hyperplanes {alpha = level}.
struct AffineArrangement {
    int rank = 0;
    // (root coordinates, integer level), duplicates forbidden.
    std::vector<std::pair<std::vector<int>, int>> hyperplanes;

    int size() const { return static_cast<int>(hyperplanes.size()); }
    std::string to_text() const;
};

// Central arrangement given by normalized, pairwise non-proportional forms.
struct CentralArrangement {
    int arity = 0;
    std::vector<LinearForm> forms;

    int size() const { return static_cast<int>(forms.size()); }
    bool contains(const LinearForm& f) const;
    CentralArrangement adding(const LinearForm& f) const;
    CentralArrangement removing(const LinearForm& f) const;
};

// Central multiarrangement: base forms with positive multiplicities.
struct MultiArrangement {
    int arity = 0;
    std::vector<std::pair<LinearForm, int>> entries;

    int size() const { return static_cast<int>(entries.size()); }
    int total_multiplicity() const;
};

// Hyperplanes {alpha = j} for positive alpha and -k+1 <= j <= k.
AffineArrangement shi_arrangement(const RootSystem& rs, int k);
// Hyperplanes {alpha = j} for -k <= j <= k; k = 0 gives the reflection
// arrangement itself.
AffineArrangement catalan_arrangement(const RootSystem& rs, int k);

// The form alpha - level*z over (x1..xl, z).
LinearForm cone_form(std::span<const int> root, int level, int arity);
// The form alpha over (x1..xl).
LinearForm root_form(std::span<const int> root);

// Homogenization: each {alpha = j} becomes alpha - j*z, and the hyperplane
// at infinity z = 0 is appended.
CentralArrangement cone(const AffineArrangement& aff);

// Cone of the Shi arrangement with the forms alpha_i + k*z added (sign '+')
// or the forms alpha_i - k*z removed (sign '-') for i in gamma (1-based
// simple root indices).
CentralArrangement b_gamma(const RootSystem& rs, int k, const std::set<int>& gamma, char sign);

// Restriction multiplicities on z = 0: each root direction carries the
// number of forms of the cone that restrict to it. Requires the form z.
MultiArrangement ziegler_multiplicity(const CentralArrangement& central);

// The multiarrangement (A(Phi), m) with one multiplicity per positive root,
// in the root order of rs.
MultiArrangement root_multiarrangement(const RootSystem& rs, const std::vector<int>& mult);
// Convenience: constant multiplicity m, adjusted by +delta or -delta on the
// simple roots in gamma.
MultiArrangement root_multiarrangement_gamma(const RootSystem& rs, int base, int delta, const std::set<int>& gamma);

}  // namespace srbkit
