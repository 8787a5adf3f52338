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

#include "srbkit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace srbkit {

namespace {

// Forward elimination in place. Returns (pivot row, pivot column) pairs in
// order. Rows are first scaled to integer entries; the update rule keeps
// intermediate values integral (Bareiss).
std::vector<std::pair<int, int>> eliminate(std::vector<std::vector<Rational>>& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    for (auto& row : m) {
        Integer den_lcm = 1;
        for (const auto& v : row)
            if (v != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
        if (den_lcm != 1) {
            const Rational s{den_lcm};
            for (auto& v : row) v *= s;
        }
    }
    std::vector<std::pair<int, int>> pivots;
    Rational prev(1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int i = row; i < rows; ++i) {
            if (m[i][col] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != row) std::swap(m[pr], m[row]);
        const Rational pivot = m[row][col];
        for (int i = row + 1; i < rows; ++i) {
            const Rational factor = m[i][col];
            for (int j = col; j < cols; ++j) {
                m[i][j] = (pivot * m[i][j] - factor * m[row][j]) / prev;
            }
        }
        prev = pivot;
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

// Back-substitution to reduced row echelon form given the pivot list.
void back_substitute(std::vector<std::vector<Rational>>& m, const std::vector<std::pair<int, int>>& pivots) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (int p = static_cast<int>(pivots.size()) - 1; p >= 0; --p) {
        const auto [r, c] = pivots[p];
        const Rational inv = Rational(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int q = 0; q < p; ++q) {
            const int r2 = pivots[q].first;
            const Rational factor = m[r2][c];
            if (factor == 0) continue;
            for (int j = c; j < cols; ++j) m[r2][j] -= factor * m[r][j];
        }
    }
}

}  // namespace

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix: dimension mismatch");
    std::vector<Rational> out(rows_);
    for (int r = 0; r < rows_; ++r) {
        Rational s(0);
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != 0 && v[c] != 0) s += at(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

std::vector<std::vector<Rational>> RationalMatrix::kernel() const {
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    const auto pivots = eliminate(m);
    back_substitute(m, pivots);

    std::vector<bool> is_pivot_col(cols_, false);
    for (const auto& [r, c] : pivots) is_pivot_col[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot_col[f]) continue;
        std::vector<Rational> v(cols_);
        v[f] = 1;
        for (const auto& [r, c] : pivots) v[c] = -m[r][f];
        int fn = -1;
        for (int i = 0; i < cols_; ++i) {
            if (v[i] != 0) {
                fn = i;
                break;
            }
        }
        if (fn >= 0 && v[fn] != 1) {
            const Rational inv = Rational(1) / v[fn];
            for (auto& x : v) x *= inv;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int RationalMatrix::rank() const {
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    return static_cast<int>(eliminate(m).size());
}

std::vector<std::vector<Rational>> rref_basis(std::vector<std::vector<Rational>> vectors) {
    if (vectors.empty()) return vectors;
    const auto pivots = eliminate(vectors);
    back_substitute(vectors, pivots);
    vectors.resize(pivots.size());
    return vectors;
}

int rank_of(std::vector<std::vector<Rational>> vectors) {
    if (vectors.empty()) return 0;
    return static_cast<int>(eliminate(vectors).size());
}

}  // namespace srbkit
