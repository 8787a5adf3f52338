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

#include "srbkit/verify.hpp"

#include <ostream>

#include "srbkit/graded.hpp"
#include "srbkit/linalg.hpp"

namespace srbkit {

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

bool VerificationReport::any_unknown() const {
    for (const auto& c : checks)
        if (c.unknown) return true;
    return false;
}

std::string VerificationReport::to_text() const {
    std::string s = "suite: " + suite + "\n";
    int passed = 0;
    for (const auto& c : checks) {
        s += c.passed ? "[pass] " : "[FAIL] ";
        s += c.id;
        if (!c.passed && !c.witness.empty()) s += " -- " + c.witness;
        s += "\n";
        if (c.passed) ++passed;
    }
    s += "summary: " + std::to_string(passed) + "/" + std::to_string(checks.size()) + " passed\n";
    return s;
}

namespace {

struct Recorder {
    VerificationReport& report;
    std::ostream* progress;

    void add(std::string id, bool ok, std::string witness = "", bool unknown = false) {
        if (progress) *progress << "# " << report.suite << ": " << id << " ... " << (ok ? "pass" : "FAIL") << "\n";
        report.checks.push_back({std::move(id), ok, unknown, ok ? std::string() : std::move(witness)});
    }
};

std::string case_tag(const RootSystem& rs, int k) {
    return rs.name() + ", k=" + std::to_string(k);
}

std::string coords_text(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::vector<int> arrangement_exponents(int kh, int shift, int count, int rank, bool with_euler) {
    std::vector<int> e;
    if (with_euler) e.push_back(1);
    for (int i = 0; i < count; ++i) e.push_back(kh + shift);
    for (int i = count; i < rank; ++i) e.push_back(kh);
    return e;
}

std::string verdict_witness(const FreenessVerdict& v) {
    std::string s = std::string("verdict ") + to_string(v.status);
    if (v.certificate_degree) {
        s += ", certificate degree " + std::to_string(*v.certificate_degree) + " (dimension " +
             std::to_string(*v.computed_dimension) + ", hypothesized " + std::to_string(*v.hypothesized_dimension) +
             ")";
    }
    return s;
}

}  // namespace

VerificationReport verify_characterization(const SrbResult& r, std::ostream* progress) {
    VerificationReport report;
    report.suite = "characterization (" + case_tag(r.rs, r.k) + ")";
    Recorder rec{report, progress};
    const int l = r.rs.rank();
    const int kh = r.k * r.rs.coxeter_number();

    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            if (i == j) continue;
            const LinearForm f = plus_form(r.rs, r.k, j);
            const Polynomial val = r.plus[i - 1].apply(f);
            const bool ok = divisible_by_linear_power(val, f, 1);
            rec.add("plus-divisibility i=" + std::to_string(i) + " j=" + std::to_string(j), ok,
                    "plus[" + std::to_string(i) + "](" + f.to_text(true) + ") = " + val.to_text(true) +
                        " has nonzero remainder");
        }
    }
    for (int i = 1; i <= l; ++i) {
        const LinearForm f = minus_form(r.rs, r.k, i);
        bool ok = true;
        std::string witness;
        for (int s = 0; s < r.minus[i - 1].arity && ok; ++s) {
            const Polynomial& c = r.minus[i - 1].coefficients[s];
            if (!c.is_zero() && !divisible_by_linear_power(c, f, 1)) {
                ok = false;
                witness = "coefficient on slot " + std::to_string(s + 1) + " of minus[" + std::to_string(i) +
                          "] is not divisible by " + f.to_text(true);
            }
        }
        rec.add("minus-divisibility i=" + std::to_string(i), ok, witness);
    }
    for (int i = 1; i <= l; ++i) {
        std::set<int> gamma;
        for (int j = 1; j <= l; ++j)
            if (j != i) gamma.insert(j);
        const int dim = graded_dimension(b_gamma(r.rs, r.k, gamma, '+'), kh, true);
        rec.add("plus-uniqueness-dimension i=" + std::to_string(i), dim == 1,
                "dimension " + std::to_string(dim) + ", expected 1");
    }
    for (int i = 1; i <= l; ++i) {
        const int dim = graded_dimension(b_gamma(r.rs, r.k, {i}, '-'), kh - 1, true);
        rec.add("minus-uniqueness-dimension i=" + std::to_string(i), dim == 1,
                "dimension " + std::to_string(dim) + ", expected 1");
    }
    return report;
}

VerificationReport verify_k_euler(const SrbResult& r, std::ostream* progress) {
    VerificationReport report;
    report.suite = "keuler (" + case_tag(r.rs, r.k) + ")";
    Recorder rec{report, progress};
    const int kh = r.k * r.rs.coxeter_number();
    const CentralArrangement cat = cone(catalan_arrangement(r.rs, r.k));

    {
        bool ok = r.eta.coefficients.back().is_zero() && r.eta.degree == kh + 1;
        std::string witness = "eta(z) nonzero or wrong degree";
        if (ok) {
            if (auto fail = membership_failure(r.eta, cat)) {
                ok = false;
                witness = "eta(" + fail->first.to_text(true) + ") is not divisible by " + fail->first.to_text(true);
            }
        }
        rec.add("eta-membership", ok, witness);
    }
    {
        const int dim = graded_dimension(cat, kh + 1, true);
        rec.add("catalan-top-dimension", dim == 1, "dimension " + std::to_string(dim) + ", expected 1");
    }
    for (int i = 1; i <= r.rs.rank(); ++i) {
        const Derivation image = weyl_act(r.rs, i, r.eta);
        rec.add("eta-invariance i=" + std::to_string(i), image == r.eta,
                "s_" + std::to_string(i) + "(eta) - eta is nonzero");
    }
    return report;
}

VerificationReport verify_reflections(const SrbResult& r, std::ostream* progress) {
    VerificationReport report;
    report.suite = "reflections (" + case_tag(r.rs, r.k) + ")";
    Recorder rec{report, progress};
    const int l = r.rs.rank();
    const int arity = l + 1;

    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            if (i == j) continue;
            const Derivation image = weyl_act(r.rs, i, r.plus[j - 1]);
            rec.add("plus-fixed i=" + std::to_string(i) + " j=" + std::to_string(j), image == r.plus[j - 1],
                    "s_" + std::to_string(i) + "(plus[" + std::to_string(j) + "]) differs");
        }
    }
    for (int i = 1; i <= l; ++i) {
        const Derivation image = weyl_act(r.rs, i, r.hat_minus[i - 1]);
        rec.add("hat-minus-fixed i=" + std::to_string(i), image == r.hat_minus[i - 1],
                "s_" + std::to_string(i) + "(hat_minus[" + std::to_string(i) + "]) differs");
    }
    for (int i = 1; i <= l; ++i) {
        // (-a_i + k z) s_i(plus[i]) = (a_i + k z) plus[i] + a_i sum_{j != i} cartan(i,j) plus[j]
        const Polynomial lhs_factor = -(minus_form(r.rs, r.k, i).to_polynomial());
        const Derivation lhs = weyl_act(r.rs, i, r.plus[i - 1]).times(lhs_factor);
        Derivation rhs = r.plus[i - 1].times(plus_form(r.rs, r.k, i).to_polynomial());
        const Polynomial alpha_i = cone_form(r.rs.positive_roots()[i - 1], 0, arity).to_polynomial();
        for (int j = 1; j <= l; ++j) {
            if (j == i) continue;
            const int c = r.rs.cartan(i - 1, j - 1);
            if (c != 0) rhs += r.plus[j - 1].scaled(Rational(c)).times(alpha_i);
        }
        rec.add("reflection-identity i=" + std::to_string(i), lhs == rhs,
                "cleared-denominator identity fails at i=" + std::to_string(i));
    }
    return report;
}

VerificationReport verify_simplefree(const RootSystem& rs, int k, const FreenessOptions& opts,
                                     std::ostream* progress) {
    VerificationReport report;
    report.suite = "simplefree (" + case_tag(rs, k) + ")";
    Recorder rec{report, progress};
    const int kh = k * rs.coxeter_number();
    const int arity = rs.rank() + 1;
    const CentralArrangement shi_cone = cone(shi_arrangement(rs, k));

    for (const auto& root : rs.positive_roots()) {
        const bool simple = rs.is_simple_root(root);
        const std::string tag = coords_text(root) + (simple ? " (simple)" : " (non-simple)");
        const Freeness expected = simple ? Freeness::Free : Freeness::NotFree;
        {
            const CentralArrangement added = shi_cone.adding(cone_form(root, -k, arity));
            const FreenessVerdict v =
                decide_freeness(added, arrangement_exponents(kh, +1, 1, rs.rank(), true), opts);
            rec.add("added " + tag + " -> " + to_string(v.status), v.status == expected, verdict_witness(v),
                    v.status == Freeness::Unknown);
        }
        {
            const CentralArrangement deleted = shi_cone.removing(cone_form(root, k, arity));
            const FreenessVerdict v =
                decide_freeness(deleted, arrangement_exponents(kh, -1, 1, rs.rank(), true), opts);
            rec.add("deleted " + tag + " -> " + to_string(v.status), v.status == expected, verdict_witness(v),
                    v.status == Freeness::Unknown);
        }
    }
    return report;
}

VerificationReport verify_exponents(const RootSystem& rs, int k, const std::vector<std::set<int>>& gammas,
                                    const FreenessOptions& opts, std::ostream* progress) {
    VerificationReport report;
    report.suite = "exponents (" + case_tag(rs, k) + ")";
    Recorder rec{report, progress};
    const int kh = k * rs.coxeter_number();

    for (const auto& gamma : gammas) {
        std::string gtxt = "{";
        for (int i : gamma) gtxt += (gtxt.size() > 1 ? "," : "") + std::to_string(i);
        gtxt += "}";
        const int g = static_cast<int>(gamma.size());
        {
            const FreenessVerdict v = decide_freeness(
                b_gamma(rs, k, gamma, '+'), arrangement_exponents(kh, +1, g, rs.rank(), true), opts);
            rec.add("added-cone gamma=" + gtxt, v.status == Freeness::Free, verdict_witness(v),
                    v.status == Freeness::Unknown);
        }
        {
            const FreenessVerdict v = decide_freeness(
                b_gamma(rs, k, gamma, '-'), arrangement_exponents(kh, -1, g, rs.rank(), true), opts);
            rec.add("deleted-cone gamma=" + gtxt, v.status == Freeness::Free, verdict_witness(v),
                    v.status == Freeness::Unknown);
        }
        {
            const FreenessVerdict v = decide_freeness(root_multiarrangement_gamma(rs, 2 * k, +1, gamma),
                                                      arrangement_exponents(kh, +1, g, rs.rank(), false), opts);
            rec.add("multi-plus gamma=" + gtxt, v.status == Freeness::Free, verdict_witness(v),
                    v.status == Freeness::Unknown);
        }
        {
            const FreenessVerdict v = decide_freeness(root_multiarrangement_gamma(rs, 2 * k, -1, gamma),
                                                      arrangement_exponents(kh, -1, g, rs.rank(), false), opts);
            rec.add("multi-minus gamma=" + gtxt, v.status == Freeness::Free, verdict_witness(v),
                    v.status == Freeness::Unknown);
        }
    }
    return report;
}

VerificationReport verify_ziegler(const RootSystem& rs, int k, std::ostream* progress) {
    VerificationReport report;
    report.suite = "ziegler (" + case_tag(rs, k) + ")";
    Recorder rec{report, progress};
    const int l = rs.rank();
    const int kh = k * rs.coxeter_number();

    const GradedBasis top = graded_derivations(cone(shi_arrangement(rs, k)), kh, true);
    rec.add("cone-dimension", top.dimension() == l,
            "dimension " + std::to_string(top.dimension()) + ", expected " + std::to_string(l));

    const MultiArrangement multi = root_multiarrangement(rs, std::vector<int>(rs.positive_count(), 2 * k));
    const int multi_dim = graded_dimension(multi, kh);
    rec.add("restriction-dimension", multi_dim == l,
            "dimension " + std::to_string(multi_dim) + ", expected " + std::to_string(l));

    bool members_ok = true;
    std::string witness;
    std::vector<std::vector<Rational>> images;
    for (int i = 0; i < top.dimension(); ++i) {
        const Derivation res = ziegler_restrict(top.members[i]);
        if (auto fail = membership_failure(res, multi)) {
            members_ok = false;
            witness = "restriction of member " + std::to_string(i + 1) + " fails divisibility at " +
                      fail->first.to_text(false) + "^" + std::to_string(fail->second);
            break;
        }
        images.push_back(flatten(res, kh));
    }
    rec.add("restriction-membership", members_ok, witness);

    const int rank = members_ok ? rank_of(std::move(images)) : 0;
    rec.add("restriction-injective", members_ok && rank == top.dimension(),
            "restriction rank " + std::to_string(rank) + " < " + std::to_string(top.dimension()));
    return report;
}

std::vector<std::set<int>> default_gammas(int rank) {
    std::vector<std::set<int>> out;
    if (rank <= 2) {
        for (unsigned mask = 0; mask < (1u << rank); ++mask) {
            std::set<int> g;
            for (int i = 0; i < rank; ++i)
                if (mask & (1u << i)) g.insert(i + 1);
            out.push_back(std::move(g));
        }
    } else {
        out.push_back({});
        out.push_back({1});
        std::set<int> all;
        for (int i = 1; i <= rank; ++i) all.insert(i);
        out.push_back(std::move(all));
    }
    return out;
}

}  // namespace srbkit
