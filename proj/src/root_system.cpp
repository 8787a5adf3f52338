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

#include "srbkit/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace srbkit {

char family_to_char(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
        case Family::G: return 'G';
    }
    throw std::invalid_argument("root system: bad family");
}

Family family_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'C': case 'c': return Family::C;
        case 'D': case 'd': return Family::D;
        case 'G': case 'g': return Family::G;
    }
    throw std::invalid_argument(std::string("root system: unknown family '") + c + "'; supported: A, B, C, D, G");
}

namespace {

const char* kSupportedMessage =
    "supported root systems: A1-A4, B1-B4, C1-C4, D4, G2";

RationalMatrix make_gram(Family family, int rank) {
    RationalMatrix g(rank, rank);
    auto chain = [&](const std::vector<Rational>& diag, const std::vector<Rational>& off) {
        for (int i = 0; i < rank; ++i) g.at(i, i) = diag[i];
        for (int i = 0; i + 1 < rank; ++i) {
            g.at(i, i + 1) = off[i];
            g.at(i + 1, i) = off[i];
        }
    };
    switch (family) {
        case Family::A: {
            chain(std::vector<Rational>(rank, 2), std::vector<Rational>(std::max(rank - 1, 0), -1));
            return g;
        }
        case Family::B: {
            // Last simple root short: norms (2,...,2,1).
            std::vector<Rational> diag(rank, 2);
            diag[rank - 1] = 1;
            chain(diag, std::vector<Rational>(std::max(rank - 1, 0), -1));
            return g;
        }
        case Family::C: {
            // Last simple root long: norms (1,...,1,2).
            std::vector<Rational> diag(rank, 1);
            diag[rank - 1] = 2;
            std::vector<Rational> off(std::max(rank - 1, 0), Rational(-1, 2));
            if (rank >= 2) off[rank - 2] = -1;
            chain(diag, off);
            return g;
        }
        case Family::D: {
            // Node 2 (0-based index 1) is the branch point.
            for (int i = 0; i < rank; ++i) g.at(i, i) = 2;
            g.at(0, 1) = g.at(1, 0) = -1;
            g.at(1, 2) = g.at(2, 1) = -1;
            g.at(1, 3) = g.at(3, 1) = -1;
            return g;
        }
        case Family::G: {
            // First simple root short: norms (2/3, 2).
            g.at(0, 0) = Rational(2, 3);
            g.at(1, 1) = 2;
            g.at(0, 1) = g.at(1, 0) = -1;
            return g;
        }
    }
    throw std::invalid_argument("root system: bad family");
}

}  // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank), gram_dual_(1, 1) {
    const bool supported = (family == Family::A && rank >= 1 && rank <= 4) ||
                           (family == Family::B && rank >= 1 && rank <= 4) ||
                           (family == Family::C && rank >= 1 && rank <= 4) ||
                           (family == Family::D && rank == 4) ||
                           (family == Family::G && rank == 2);
    if (!supported)
        throw std::invalid_argument("root system: unsupported type " + std::string(1, family_to_char(family)) +
                                    std::to_string(rank) + "; " + kSupportedMessage);
    // Rank 1 of any admitted family is the single-root system with norm 2.
    if (rank == 1) {
        gram_dual_ = RationalMatrix(1, 1);
        gram_dual_.at(0, 0) = 2;
    } else {
        gram_dual_ = make_gram(family, rank);
    }

    cartan_.assign(rank, std::vector<int>(rank));
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            const Rational c = 2 * gram_dual_.at(i, j) / gram_dual_.at(i, i);
            if (c.get_den() != 1) throw std::logic_error("root system: non-integral Cartan entry");
            cartan_[i][j] = static_cast<int>(c.get_num().get_si());
        }
    }

    // Positive roots by closure under simple reflections.
    std::set<std::vector<int>> roots;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        roots.insert(e);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(roots.begin(), roots.end());
        for (const auto& r : snapshot) {
            for (int i = 0; i < rank; ++i) {
                std::vector<int> img = reflect_root_impl(i, r);
                bool nonneg = true, nonzero = false;
                for (int v : img) {
                    if (v < 0) nonneg = false;
                    if (v != 0) nonzero = true;
                }
                if (nonneg && nonzero && roots.insert(img).second) grew = true;
            }
        }
    }
    // Simple roots first, then by (height, coordinates).
    positive_roots_.assign(roots.begin(), roots.end());
    std::sort(positive_roots_.begin(), positive_roots_.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        const int ha = std::accumulate(a.begin(), a.end(), 0);
        const int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a > b;  // x1 before x2 among simple roots
    });

    const int count = positive_count();
    if ((2 * count) % rank != 0) throw std::logic_error("root system: |roots| not divisible");
    coxeter_number_ = 2 * count / rank;

    // Exponents from the height distribution: the number of exponents >= t
    // equals the number of roots of height t.
    std::map<int, int> by_height;
    for (const auto& r : positive_roots_) ++by_height[std::accumulate(r.begin(), r.end(), 0)];
    exponents_.clear();
    for (int i = 1; i <= rank; ++i) {
        int d = 0;
        for (const auto& [h, n] : by_height)
            if (n >= i) ++d;
        exponents_.push_back(d);
    }
    std::sort(exponents_.begin(), exponents_.end());

    if (std::accumulate(exponents_.begin(), exponents_.end(), 0) != count)
        throw std::logic_error("root system: exponent sum mismatch");
    for (int i = 0; i < rank; ++i)
        if (exponents_[i] + exponents_[rank - 1 - i] != coxeter_number_)
            throw std::logic_error("root system: exponent symmetry violated");
}

std::string RootSystem::name() const {
    return std::string(1, family_to_char(family_)) + std::to_string(rank_);
}

bool RootSystem::is_positive_root(std::span<const int> coords) const {
    std::vector<int> v(coords.begin(), coords.end());
    return std::find(positive_roots_.begin(), positive_roots_.end(), v) != positive_roots_.end();
}

bool RootSystem::is_simple_root(std::span<const int> coords) const {
    int ones = 0, others = 0;
    for (int c : coords) {
        if (c == 1) ++ones;
        else if (c != 0) ++others;
    }
    return ones == 1 && others == 0 && static_cast<int>(coords.size()) == rank_;
}

std::vector<int> RootSystem::reflect_root(int i, std::span<const int> coords) const {
    if (i < 0 || i >= rank_) throw std::invalid_argument("root system: reflection index out of range");
    return reflect_root_impl(i, std::vector<int>(coords.begin(), coords.end()));
}

std::vector<int> RootSystem::reflect_root_impl(int i, const std::vector<int>& coords) const {
    // s_i(sum_j b_j a_j): only the i-th coordinate changes.
    std::vector<int> out = coords;
    int acc = 0;
    for (int j = 0; j < rank_; ++j) acc += cartan_[i][j] * coords[j];
    out[i] = coords[i] - acc;
    return out;
}

Polynomial RootSystem::reflect_polynomial(int i, const Polynomial& p) const {
    if (i < 0 || i >= rank_) throw std::invalid_argument("root system: reflection index out of range");
    const int n = p.arity();
    if (n != rank_ && n != rank_ + 1) throw std::invalid_argument("root system: polynomial arity mismatch");
    std::vector<Polynomial> images;
    images.reserve(n);
    for (int j = 0; j < n; ++j) {
        Polynomial img = Polynomial::variable(n, j);
        if (j < rank_ && cartan_[i][j] != 0) {
            Exponents e(n, 0);
            e[i] = 1;
            img.add_term(e, Rational(-cartan_[i][j]));
        }
        images.push_back(std::move(img));
    }
    return p.substitute(images);
}

std::vector<std::vector<int>> RootSystem::simple_reflection_matrix(int i) const {
    if (i < 0 || i >= rank_) throw std::invalid_argument("root system: reflection index out of range");
    std::vector<std::vector<int>> m(rank_, std::vector<int>(rank_, 0));
    for (int j = 0; j < rank_; ++j) {
        m[j][j] = 1;
        m[j][i] -= cartan_[i][j];
    }
    return m;
}

RootSystem build_root_system(Family family, int rank) {
    return RootSystem(family, rank);
}

}  // namespace srbkit
