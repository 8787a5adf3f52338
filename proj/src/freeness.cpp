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

#include "srbkit/freeness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "srbkit/linalg.hpp"

namespace srbkit {

namespace {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Nonzero integer in [-9, 9].
    Rational small_scalar() {
        const int v = static_cast<int>(next() % 18);
        return Rational(v < 9 ? v - 9 : v - 8);
    }
};

struct TargetView {
    int arity;
    std::vector<std::pair<LinearForm, int>> defining;  // (form, multiplicity)
    int total_multiplicity;
};

TargetView view_of(const CentralArrangement& a) {
    TargetView v;
    v.arity = a.arity;
    for (const auto& f : a.forms) v.defining.emplace_back(f, 1);
    v.total_multiplicity = a.size();
    return v;
}

TargetView view_of(const MultiArrangement& a) {
    TargetView v;
    v.arity = a.arity;
    v.defining = a.entries;
    v.total_multiplicity = a.total_multiplicity();
    return v;
}

bool saito_det_matches(const std::vector<Derivation>& derivs, const TargetView& t) {
    const int n = t.arity;
    if (static_cast<int>(derivs.size()) != n)
        throw std::invalid_argument("saito test: need exactly one derivation per coordinate");
    std::vector<std::vector<Polynomial>> m(n);
    for (int i = 0; i < n; ++i) {
        if (derivs[i].arity != n) throw std::invalid_argument("saito test: derivation arity mismatch");
        m[i] = derivs[i].coefficients;
    }
    Polynomial det = poly_det(m);
    if (det.is_zero()) return false;
    for (const auto& [form, mult] : t.defining) {
        const Polynomial fp = form.to_polynomial();
        for (int r = 0; r < mult; ++r) {
            auto q = divide_exact(det, fp);
            if (!q) return false;
            det = std::move(*q);
        }
    }
    return det.is_constant() && !det.is_zero();
}

// Number of degree-d monomial multiples a generator of degree e contributes
// in an arity-n free module: C(d - e + n - 1, n - 1).
long free_piece(int d, int e, int n) {
    if (d < e) return 0;
    long r = 1;
    for (int i = 1; i <= n - 1; ++i) r = r * (d - e + i) / i;
    return r;
}

long predicted_dimension(const std::vector<int>& exps, int d, int n) {
    long total = 0;
    for (int e : exps) total += free_piece(d, e, n);
    return total;
}

// All multisets of `size` non-negative integers summing to `total`,
// as non-decreasing vectors.
void enumerate_multisets(int size, int total, int minimum, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (size == 1) {
        if (total >= minimum) {
            cur.push_back(total);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int v = minimum; v * size <= total; ++v) {
        cur.push_back(v);
        enumerate_multisets(size - 1, total - v, v, cur, out);
        cur.pop_back();
    }
}

struct BasisBuildResult {
    bool feasible = true;  // false when the graded dimensions already clash
    std::vector<Derivation> generators;
};

// One attempt at assembling module generators with the hypothesized
// degrees. Bases per degree are supplied by the caller and reused across
// attempts; only the random combinations are redrawn.
BasisBuildResult build_candidate_basis(const TargetView& t, const std::vector<int>& exps,
                                       const std::map<int, GradedBasis>& bases, SplitMix64& rng) {
    BasisBuildResult res;
    std::map<int, int> count_by_degree;
    for (int e : exps) ++count_by_degree[e];

    for (const auto& [deg, want] : count_by_degree) {
        const GradedBasis& space = bases.at(deg);
        // Span of polynomial multiples of the already-chosen generators
        // inside this degree.
        std::vector<std::vector<Rational>> rows;
        for (const auto& g : res.generators) {
            for (const auto& mono : monomials_of_degree(t.arity, deg - g.degree)) {
                rows.push_back(flatten(g.times(Polynomial::monomial(t.arity, mono, Rational(1))), deg));
            }
        }
        const int base_rank = rank_of(rows);
        // The space must be able to supply `want` new directions.
        {
            auto probe = rows;
            for (const auto& m : space.members) probe.push_back(flatten(m, deg));
            if (rank_of(std::move(probe)) < base_rank + want) {
                res.feasible = false;
                return res;
            }
        }
        std::vector<Derivation> picked;
        auto probe = rows;
        for (int c = 0; c < want; ++c) {
            Derivation cand = Derivation::zero(t.arity, deg);
            for (const auto& m : space.members) cand += m.scaled(rng.small_scalar());
            probe.push_back(flatten(cand, deg));
            picked.push_back(std::move(cand));
        }
        if (rank_of(std::move(probe)) != base_rank + want) {
            // Degenerate draw; signal the caller to retry.
            res.generators.clear();
            res.feasible = true;
            return res;
        }
        for (auto& d : picked) res.generators.push_back(std::move(d));
    }
    return res;
}

template <typename Target>
FreenessVerdict decide_impl(const Target& target, std::vector<int> hyp, const FreenessOptions& opts) {
    const TargetView t = view_of(target);
    std::sort(hyp.begin(), hyp.end());
    const int degree_sum = std::accumulate(hyp.begin(), hyp.end(), 0);
    if (degree_sum != t.total_multiplicity)
        throw std::invalid_argument("freeness: exponents must sum to the total multiplicity");
    if (static_cast<int>(hyp.size()) != t.arity)
        throw std::invalid_argument("freeness: need one exponent per coordinate");
    for (int e : hyp)
        if (e < 0) throw std::invalid_argument("freeness: exponents must be non-negative");
    const int max_degree = opts.max_degree.value_or(hyp.empty() ? 0 : hyp.back() + 1);
    if (!hyp.empty() && max_degree < hyp.back())
        throw std::invalid_argument("freeness: search cap below the largest hypothesized exponent");

    std::map<int, GradedBasis> bases;
    auto basis_at = [&](int d) -> const GradedBasis& {
        auto it = bases.find(d);
        if (it == bases.end()) it = bases.emplace(d, graded_derivations(target, d)).first;
        return it->second;
    };

    // Free attempt: seeded generic combinations, Saito check.
    SplitMix64 rng(opts.seed);
    bool dimensions_clash = false;
    for (int e : hyp) basis_at(e);
    for (int trial = 0; trial < opts.max_trials && !dimensions_clash; ++trial) {
        BasisBuildResult built = build_candidate_basis(t, hyp, bases, rng);
        if (!built.feasible) {
            dimensions_clash = true;
            break;
        }
        if (built.generators.empty()) continue;  // degenerate draw, redraw
        if (saito_det_matches(built.generators, t)) {
            FreenessVerdict v;
            v.status = Freeness::Free;
            v.exponents = hyp;
            return v;
        }
    }

    // NotFree scan: eliminate every admissible exponent multiset against the
    // computed dimensions, degree by degree.
    std::vector<std::vector<int>> admissible;
    {
        std::vector<int> cur;
        enumerate_multisets(t.arity, t.total_multiplicity, 0, cur, admissible);
    }
    for (int d = 0; d <= max_degree; ++d) {
        const int dim = basis_at(d).dimension();
        std::vector<std::vector<int>> surviving;
        for (auto& e : admissible)
            if (predicted_dimension(e, d, t.arity) == dim) surviving.push_back(std::move(e));
        admissible = std::move(surviving);
        if (admissible.empty()) {
            FreenessVerdict v;
            v.status = Freeness::NotFree;
            v.certificate_degree = d;
            v.computed_dimension = dim;
            v.hypothesized_dimension = static_cast<int>(predicted_dimension(hyp, d, t.arity));
            return v;
        }
    }
    return FreenessVerdict{};
}

}  // namespace

bool saito_test(const std::vector<Derivation>& derivs, const CentralArrangement& target) {
    for (const auto& d : derivs)
        if (auto fail = membership_failure(d, target))
            throw std::invalid_argument("saito test: candidate is not in the module (fails at " +
                                        fail->first.to_text(true) + ")");
    return saito_det_matches(derivs, view_of(target));
}

bool saito_test(const std::vector<Derivation>& derivs, const MultiArrangement& target) {
    for (const auto& d : derivs)
        if (auto fail = membership_failure(d, target))
            throw std::invalid_argument("saito test: candidate is not in the module (fails at " +
                                        fail->first.to_text(false) + "^" + std::to_string(fail->second) + ")");
    return saito_det_matches(derivs, view_of(target));
}

FreenessVerdict decide_freeness(const CentralArrangement& target, std::vector<int> hypothesized,
                                const FreenessOptions& opts) {
    return decide_impl(target, std::move(hypothesized), opts);
}

FreenessVerdict decide_freeness(const MultiArrangement& target, std::vector<int> hypothesized,
                                const FreenessOptions& opts) {
    return decide_impl(target, std::move(hypothesized), opts);
}

const char* to_string(Freeness f) {
    switch (f) {
        case Freeness::Free: return "Free";
        case Freeness::NotFree: return "NotFree";
        case Freeness::Unknown: return "Unknown";
    }
    return "Unknown";
}

}  // namespace srbkit
