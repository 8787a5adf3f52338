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

#include <vector>

#include "srbkit/arrangement.hpp"
#include "srbkit/derivation.hpp"

namespace srbkit {

// Basis of one homogeneous piece of a logarithmic derivation module. The
// members are canonical: reduced echelon form over the coefficient
// coordinates, each with first nonzero coefficient 1.
struct GradedBasis {
    int degree = 0;
    std::vector<Derivation> members;

    int dimension() const { return static_cast<int>(members.size()); }
};

// Basis of the degree-d piece of D(target), computed by imposing the
// per-hyperplane divisibility conditions on unknown coefficient monomials
// and solving the resulting exact linear system hyperplane by hyperplane.
// restrict_to_d0 adds the constraint theta(z) = 0 (cones only).
GradedBasis graded_derivations(const CentralArrangement& target, int degree, bool restrict_to_d0 = false);
GradedBasis graded_derivations(const MultiArrangement& target, int degree);

int graded_dimension(const CentralArrangement& target, int degree, bool restrict_to_d0 = false);
int graded_dimension(const MultiArrangement& target, int degree);

// Coordinates of a homogeneous derivation over (slot, monomial) pairs at
// the given degree; the flattening used by all rank computations.
std::vector<Rational> flatten(const Derivation& theta, int degree);

}  // namespace srbkit
