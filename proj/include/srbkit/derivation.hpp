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

#include <optional>
#include <string>
#include <vector>

#include "srbkit/arrangement.hpp"
#include "srbkit/polynomial.hpp"
#include "srbkit/root_system.hpp"

namespace srbkit {

// Homogeneous derivation given by its coefficients on the coordinate frame:
// theta = sum_i coefficients[i] * d/dx_i. For cone computations the last
// slot is the z-coefficient.
struct Derivation {
    int arity = 0;
    int degree = 0;
    std::vector<Polynomial> coefficients;

    static Derivation zero(int arity, int degree);

    bool is_zero() const;
    // theta applied to a central linear form.
    Polynomial apply(const LinearForm& f) const;

    Derivation& operator+=(const Derivation& rhs);
    Derivation& operator-=(const Derivation& rhs);
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    Derivation scaled(const Rational& c) const;
    // Multiplication by a polynomial raises the degree accordingly.
    Derivation times(const Polynomial& p) const;
    bool operator==(const Derivation& rhs) const = default;

    std::string to_text(bool last_is_z = true) const;
};

// x1 d/dx1 + ... (+ z d/dz when the last slot is z).
Derivation euler_derivation(int arity);

// Sets z = 0 in every coefficient and drops the z slot. Requires the
// z-coefficient to vanish identically.
Derivation ziegler_restrict(const Derivation& theta);

// Simple-reflection action (s theta)(f) = s(theta(s f)) with s acting by
// x_j -> x_j - cartan(i,j) x_i and fixing z; i is 1-based. Involutive.
Derivation weyl_act(const RootSystem& rs, int i, const Derivation& theta);

// Membership checks against the defining divisibility conditions. The
// witness form of the first failing hyperplane is returned on failure.
std::optional<std::pair<LinearForm, int>> membership_failure(const Derivation& theta, const CentralArrangement& a);
std::optional<std::pair<LinearForm, int>> membership_failure(const Derivation& theta, const MultiArrangement& a);
bool in_module(const Derivation& theta, const CentralArrangement& a);
bool in_module(const Derivation& theta, const MultiArrangement& a);
// D_0 additionally requires theta(z) = 0.
bool in_module_d0(const Derivation& theta, const CentralArrangement& a);

}  // namespace srbkit
