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

#include <span>
#include <string>
#include <vector>

#include "srbkit/linalg.hpp"
#include "srbkit/polynomial.hpp"

namespace srbkit {

enum class Family { A, B, C, D, G };

char family_to_char(Family f);
Family family_from_char(char c);

// Irreducible crystallographic root system in simple-root coordinates: the
// coordinate functionals x1..xl are the simple roots, so every root is an
// integer coordinate vector and the dual-basis derivations are d/dx_i.
//
// Conventions: Bourbaki numbering; B_l has the last simple root short, C_l
// has it long, G2 has the first one short; the inner product is scaled so
// (alpha, alpha) = 2 for long roots.
class RootSystem {
public:
    RootSystem(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::string name() const;

    // Positive roots in simple-root coordinates; the l simple roots come
    // first as unit vectors.
    const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }
    int positive_count() const { return static_cast<int>(positive_roots_.size()); }
    int coxeter_number() const { return coxeter_number_; }
    // Sorted ascending; computed from the height distribution of the
    // positive roots.
    const std::vector<int>& exponents() const { return exponents_; }
    const RationalMatrix& gram_dual() const { return gram_dual_; }
    // cartan(i,j) = 2 I*(a_i, a_j) / I*(a_i, a_i), 0-based.
    int cartan(int i, int j) const { return cartan_[i][j]; }

    bool is_positive_root(std::span<const int> coords) const;
    bool is_simple_root(std::span<const int> coords) const;

    // Image of a root under the i-th simple reflection (0-based i).
    std::vector<int> reflect_root(int i, std::span<const int> coords) const;
    // Action on polynomials: x_j -> x_j - cartan(i,j) x_i; when the arity is
    // rank+1 the extra variable z is fixed.
    Polynomial reflect_polynomial(int i, const Polynomial& p) const;
    // Row j = coordinates of s_i(x_j).
    std::vector<std::vector<int>> simple_reflection_matrix(int i) const;

private:
    std::vector<int> reflect_root_impl(int i, const std::vector<int>& coords) const;

    Family family_;
    int rank_;
    std::vector<std::vector<int>> positive_roots_;
    RationalMatrix gram_dual_;
    std::vector<std::vector<int>> cartan_;
    int coxeter_number_ = 0;
    std::vector<int> exponents_;
};

RootSystem build_root_system(Family family, int rank);

}  // namespace srbkit
