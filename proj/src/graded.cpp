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

#include "srbkit/graded.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "srbkit/linalg.hpp"

namespace srbkit {

namespace {

struct Unknown {
    int slot;
    Exponents exp;
};

struct Constraint {
    LinearForm form;
    int mult;
};

// Degree-d members of the module cut out by the constraints, as coordinate
// vectors over the unknown list.
struct Solver {
    int arity;
    int degree;
    std::vector<Unknown> unknowns;
    std::vector<std::vector<Rational>> basis;  // basis vectors over unknowns

    Solver(int arity_, int degree_, const std::vector<Constraint>& constraints, bool restrict_last_zero)
        : arity(arity_), degree(degree_) {
        // Single-variable constraints (x_v)^m | theta(x_v) prune the
        // monomial pool for slot v directly; all others become kernel steps.
        std::vector<int> min_exp(arity, 0);
        std::vector<const Constraint*> general;
        for (const auto& c : constraints) {
            if (c.form.nonzero_count() == 1) {
                const int v = c.form.first_nonzero();
                min_exp[v] = std::max(min_exp[v], c.mult);
            } else {
                general.push_back(&c);
            }
        }

        const auto monos = monomials_of_degree(arity, degree);
        for (int s = 0; s < arity; ++s) {
            if (restrict_last_zero && s == arity - 1) continue;
            for (const auto& e : monos)
                if (e[s] >= min_exp[s]) unknowns.push_back({s, e});
        }

        basis.assign(unknowns.size(), std::vector<Rational>(unknowns.size()));
        for (size_t i = 0; i < unknowns.size(); ++i) basis[i][i] = 1;

        for (const auto* c : general) {
            impose(*c);
            if (basis.empty()) break;
        }
        basis = rref_basis(std::move(basis));
    }

    Polynomial image(const std::vector<Rational>& vec, const LinearForm& f) const {
        Polynomial p(arity);
        for (size_t u = 0; u < unknowns.size(); ++u) {
            if (vec[u] == 0) continue;
            const Rational c = f.coefficients[unknowns[u].slot];
            if (c == 0) continue;
            p.add_term(unknowns[u].exp, vec[u] * c);
        }
        return p;
    }

    void impose(const Constraint& c) {
        const size_t dim = basis.size();
        std::vector<std::vector<Polynomial>> comps(dim);
        for (size_t j = 0; j < dim; ++j) comps[j] = remainder_components(image(basis[j], c.form), c.form, c.mult);

        // Shared row indexing over (component, monomial).
        using RowKey = std::pair<int, Exponents>;
        struct RowCmp {
            bool operator()(const RowKey& a, const RowKey& b) const {
                if (a.first != b.first) return a.first < b.first;
                return GrlexDescending{}(a.second, b.second);
            }
        };
        std::map<RowKey, int, RowCmp> row_index;
        for (const auto& col : comps)
            for (int r = 0; r < c.mult; ++r)
                for (const auto& [e, coef] : col[r].terms()) row_index.try_emplace({r, e}, 0);
        int next = 0;
        for (auto& [k, v] : row_index) v = next++;

        RationalMatrix constraint(next, static_cast<int>(dim));
        for (size_t j = 0; j < dim; ++j)
            for (int r = 0; r < c.mult; ++r)
                for (const auto& [e, coef] : comps[j][r].terms()) constraint.at(row_index[{r, e}], static_cast<int>(j)) = coef;

        const auto combos = constraint.kernel();
        std::vector<std::vector<Rational>> next_basis;
        next_basis.reserve(combos.size());
        for (const auto& k : combos) {
            std::vector<Rational> v(unknowns.size());
            for (size_t j = 0; j < dim; ++j) {
                if (k[j] == 0) continue;
                for (size_t u = 0; u < unknowns.size(); ++u)
                    if (basis[j][u] != 0) v[u] += k[j] * basis[j][u];
            }
            next_basis.push_back(std::move(v));
        }
        basis = std::move(next_basis);
    }

    GradedBasis result() const {
        GradedBasis out;
        out.degree = degree;
        out.members.reserve(basis.size());
        for (const auto& vec : basis) {
            Derivation d = Derivation::zero(arity, degree);
            for (size_t u = 0; u < unknowns.size(); ++u)
                if (vec[u] != 0) d.coefficients[unknowns[u].slot].add_term(unknowns[u].exp, vec[u]);
            out.members.push_back(std::move(d));
        }
        return out;
    }
};

std::vector<Constraint> constraints_of(const CentralArrangement& a) {
    std::vector<Constraint> cs;
    cs.reserve(a.forms.size());
    for (const auto& f : a.forms) cs.push_back({f, 1});
    return cs;
}

std::vector<Constraint> constraints_of(const MultiArrangement& a) {
    std::vector<Constraint> cs;
    cs.reserve(a.entries.size());
    for (const auto& [f, m] : a.entries) cs.push_back({f, m});
    return cs;
}

}  // namespace

GradedBasis graded_derivations(const CentralArrangement& target, int degree, bool restrict_to_d0) {
    if (degree < 0) throw std::invalid_argument("graded derivations: degree must be >= 0");
    Solver s(target.arity, degree, constraints_of(target), restrict_to_d0);
    return s.result();
}

GradedBasis graded_derivations(const MultiArrangement& target, int degree) {
    if (degree < 0) throw std::invalid_argument("graded derivations: degree must be >= 0");
    Solver s(target.arity, degree, constraints_of(target), false);
    return s.result();
}

int graded_dimension(const CentralArrangement& target, int degree, bool restrict_to_d0) {
    return graded_derivations(target, degree, restrict_to_d0).dimension();
}

int graded_dimension(const MultiArrangement& target, int degree) {
    return graded_derivations(target, degree).dimension();
}

std::vector<Rational> flatten(const Derivation& theta, int degree) {
    const auto monos = monomials_of_degree(theta.arity, degree);
    std::vector<Rational> v;
    v.reserve(monos.size() * theta.arity);
    for (int s = 0; s < theta.arity; ++s) {
        if (!theta.coefficients[s].is_zero() && !theta.coefficients[s].is_homogeneous(degree))
            throw std::invalid_argument("flatten: derivation is not homogeneous of the requested degree");
        for (const auto& e : monos) v.push_back(theta.coefficients[s].coefficient(e));
    }
    return v;
}

}  // namespace srbkit
