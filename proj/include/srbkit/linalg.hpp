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
#include <vector>

#include "srbkit/rational.hpp"

namespace srbkit {

class RationalMatrix {
public:
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    bool operator==(const RationalMatrix& rhs) const = default;

    std::vector<Rational> apply(std::span<const Rational> v) const;

    // Null-space basis by fraction-free forward elimination with
    // first-nonzero-column pivoting and back-substitution. Basis vectors are
    // scaled so their first nonzero entry is 1; the result is the canonical
    // reduced basis of the null space.
    std::vector<std::vector<Rational>> kernel() const;
    int rank() const;

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

// Canonical (reduced row echelon) basis of the span of the given vectors.
std::vector<std::vector<Rational>> rref_basis(std::vector<std::vector<Rational>> vectors);

int rank_of(std::vector<std::vector<Rational>> vectors);

}  // namespace srbkit
