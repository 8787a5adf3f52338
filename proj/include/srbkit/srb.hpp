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

#include <stdexcept>
#include <string>
#include <vector>

#include "srbkit/derivation.hpp"
#include "srbkit/freeness.hpp"
#include "srbkit/root_system.hpp"

namespace srbkit {

// Raised when a computation contradicts a structural fact every downstream
// construction depends on (a constrained space of the wrong dimension, a
// division that must succeed failing, ...). Never caught internally.
class theorem_falsified : public std::runtime_error {
public:
    explicit theorem_falsified(const std::string& what) : std::runtime_error(what) {}
};

// The simple-root bases of D_0 of the Shi cone at degree kh, the derived
// minus family with its exact quotients by alpha_i - k z, and the degree
// kh+1 generator of D_0 of the Catalan cone.
struct SrbResult {
    RootSystem rs;
    int k = 1;
    std::vector<Derivation> plus;       // degree kh, arity rank+1
    std::vector<Derivation> minus;      // minus[j] = sum_p gram(j,p) plus[p]
    std::vector<Derivation> hat_minus;  // minus[i] = (alpha_i - k z) * hat_minus[i]
    Derivation eta;                     // sum_i (alpha_i + k z) plus[i], degree kh+1
    std::vector<Rational> scalars;      // plus[i] = scalars[i] * raw[i]
};

// For each i, the canonical generator of the one-dimensional space of
// degree-kh derivations in D_0 of the Shi cone whose value on alpha_j + k z
// is divisible by alpha_j + k z for every j != i. A dimension other than 1
// throws theorem_falsified.
std::vector<Derivation> compute_srb_plus_raw(const RootSystem& rs, int k);

struct NormalizedPlus {
    std::vector<Derivation> plus;
    Derivation eta;
    std::vector<Rational> scalars;
};

// Solves for the unique (up to scale) coefficients c_i making
// sum c_i (alpha_i + k z) raw_i land in D_0 of the Catalan cone at degree
// kh+1, then fixes the global scale so the first nonzero coefficient of
// plus[0] is 1. A solution space of dimension != 1 or a vanishing c_i
// throws theorem_falsified.
NormalizedPlus normalize_srb_plus(const RootSystem& rs, int k, const std::vector<Derivation>& raw);

// minus[j] = sum_p gram(j,p) plus[p]; each minus[i] is divided exactly by
// alpha_i - k z (failure throws theorem_falsified).
std::pair<std::vector<Derivation>, std::vector<Derivation>> compute_srb_minus(const RootSystem& rs, int k,
                                                                              const std::vector<Derivation>& plus);

SrbResult compute_srb(const RootSystem& rs, int k);

// The cone form alpha_i + k z (1-based i).
LinearForm plus_form(const RootSystem& rs, int k, int i);
// The cone form alpha_i - k z (1-based i).
LinearForm minus_form(const RootSystem& rs, int k, int i);

}  // namespace srbkit
