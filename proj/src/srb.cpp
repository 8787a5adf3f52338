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

#include "srbkit/srb.hpp"

#include <set>

#include "srbkit/graded.hpp"
#include "srbkit/linalg.hpp"

namespace srbkit {

LinearForm plus_form(const RootSystem& rs, int k, int i) {
    return cone_form(rs.positive_roots()[i - 1], -k, rs.rank() + 1);
}

LinearForm minus_form(const RootSystem& rs, int k, int i) {
    return cone_form(rs.positive_roots()[i - 1], k, rs.rank() + 1);
}

std::vector<Derivation> compute_srb_plus_raw(const RootSystem& rs, int k) {
    if (k < 1) throw std::invalid_argument("srb: k must be >= 1");
    const int l = rs.rank();
    const int kh = k * rs.coxeter_number();
    std::vector<Derivation> raw;
    raw.reserve(l);
    for (int i = 1; i <= l; ++i) {
        std::set<int> gamma;
        for (int j = 1; j <= l; ++j)
            if (j != i) gamma.insert(j);
        const CentralArrangement constrained = b_gamma(rs, k, gamma, '+');
        GradedBasis basis = graded_derivations(constrained, kh, /*restrict_to_d0=*/true);
        if (basis.dimension() != 1)
            throw theorem_falsified("constrained space for plus basis member " + std::to_string(i) + " of " +
                                    rs.name() + ", k=" + std::to_string(k) + " has dimension " +
                                    std::to_string(basis.dimension()) + ", expected 1");
        raw.push_back(std::move(basis.members[0]));
    }
    return raw;
}

NormalizedPlus normalize_srb_plus(const RootSystem& rs, int k, const std::vector<Derivation>& raw) {
    const int l = rs.rank();
    if (static_cast<int>(raw.size()) != l) throw std::invalid_argument("srb: raw list has wrong length");
    const int arity = l + 1;

    // psi_i = (alpha_i + k z) raw_i already satisfies every condition of the
    // Catalan cone except divisibility at alpha + k z for non-simple alpha;
    // those conditions pin down the coefficients c_i.
    std::vector<Derivation> psi;
    psi.reserve(l);
    for (int i = 1; i <= l; ++i) psi.push_back(raw[i - 1].times(plus_form(rs, k, i).to_polynomial()));

    std::vector<std::vector<Rational>> rows;
    for (const auto& root : rs.positive_roots()) {
        if (rs.is_simple_root(root)) continue;
        const LinearForm f = cone_form(root, -k, arity);
        std::vector<Polynomial> images;
        images.reserve(l);
        for (const auto& p : psi) images.push_back(remainder_components(p.apply(f), f, 1)[0]);
        // Rows indexed by the monomials appearing across the images.
        std::set<Exponents, GrlexDescending> monos;
        for (const auto& im : images)
            for (const auto& [e, c] : im.terms()) monos.insert(e);
        for (const auto& e : monos) {
            std::vector<Rational> row(l);
            for (int i = 0; i < l; ++i) row[i] = images[i].coefficient(e);
            rows.push_back(std::move(row));
        }
    }

    RationalMatrix m(static_cast<int>(rows.size()), l);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < l; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
    const auto solutions = m.kernel();
    if (solutions.size() != 1)
        throw theorem_falsified("normalization system for " + rs.name() + ", k=" + std::to_string(k) +
                                " has solution dimension " + std::to_string(solutions.size()) + ", expected 1");
    std::vector<Rational> c = solutions[0];
    for (int i = 0; i < l; ++i)
        if (c[i] == 0)
            throw theorem_falsified("normalization coefficient " + std::to_string(i + 1) + " vanishes for " +
                                    rs.name() + ", k=" + std::to_string(k));

    NormalizedPlus out;
    out.plus.reserve(l);
    for (int i = 0; i < l; ++i) out.plus.push_back(raw[i].scaled(c[i]));

    // Global convention: first nonzero coefficient of plus[0], scanning the
    // coordinate slots in order and each polynomial in canonical term order,
    // equals 1.
    Rational lead(0);
    for (const auto& p : out.plus[0].coefficients) {
        if (!p.is_zero()) {
            lead = p.leading_coefficient();
            break;
        }
    }
    if (lead == 0) throw theorem_falsified("plus basis member 1 is zero for " + rs.name());
    const Rational global = Rational(1) / lead;
    for (int i = 0; i < l; ++i) {
        c[i] *= global;
        out.plus[i] = raw[i].scaled(c[i]);
    }
    out.scalars = std::move(c);

    out.eta = Derivation::zero(arity, k * rs.coxeter_number() + 1);
    for (int i = 1; i <= l; ++i) out.eta += out.plus[i - 1].times(plus_form(rs, k, i).to_polynomial());
    return out;
}

std::pair<std::vector<Derivation>, std::vector<Derivation>> compute_srb_minus(const RootSystem& rs, int k,
                                                                              const std::vector<Derivation>& plus) {
    const int l = rs.rank();
    if (static_cast<int>(plus.size()) != l) throw std::invalid_argument("srb: plus list has wrong length");
    std::vector<Derivation> minus, hat;
    minus.reserve(l);
    hat.reserve(l);
    for (int j = 0; j < l; ++j) {
        Derivation mj = Derivation::zero(plus[0].arity, plus[0].degree);
        for (int p = 0; p < l; ++p) mj += plus[p].scaled(rs.gram_dual().at(j, p));
        minus.push_back(std::move(mj));
    }
    for (int i = 0; i < l; ++i) {
        const Polynomial divisor = minus_form(rs, k, i + 1).to_polynomial();
        Derivation h = Derivation::zero(plus[0].arity, plus[0].degree - 1);
        for (int s = 0; s < plus[0].arity; ++s) {
            if (minus[i].coefficients[s].is_zero()) continue;
            auto q = divide_exact(minus[i].coefficients[s], divisor);
            if (!q)
                throw theorem_falsified("minus basis member " + std::to_string(i + 1) + " of " + rs.name() +
                                        ", k=" + std::to_string(k) + " is not divisible by " +
                                        minus_form(rs, k, i + 1).to_text(true));
            h.coefficients[s] = std::move(*q);
        }
        hat.push_back(std::move(h));
    }
    return {std::move(minus), std::move(hat)};
}

SrbResult compute_srb(const RootSystem& rs, int k) {
    SrbResult r{rs, k, {}, {}, {}, {}, {}};
    const auto raw = compute_srb_plus_raw(rs, k);
    auto normalized = normalize_srb_plus(rs, k, raw);
    r.plus = std::move(normalized.plus);
    r.eta = std::move(normalized.eta);
    r.scalars = std::move(normalized.scalars);
    auto [minus, hat] = compute_srb_minus(rs, k, r.plus);
    r.minus = std::move(minus);
    r.hat_minus = std::move(hat);
    return r;
}

}  // namespace srbkit
