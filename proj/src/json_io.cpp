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

#include "srbkit/json_io.hpp"

#include <stdexcept>

namespace srbkit {

namespace {

Json rational_array(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

Json matrix_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["coef"] = to_string(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["arity"] = p.arity();
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const Derivation& d) {
    Json coeffs = Json::array();
    for (const auto& c : d.coefficients) coeffs.push_back(to_json(c));
    Json j;
    j["degree"] = d.degree;
    j["coefficients"] = std::move(coeffs);
    return j;
}

Json to_json(const RootSystem& rs) {
    Json j;
    j["family"] = std::string(1, family_to_char(rs.family()));
    j["rank"] = rs.rank();
    j["coxeterNumber"] = rs.coxeter_number();
    j["exponents"] = rs.exponents();
    j["positiveRoots"] = rs.positive_roots();
    Json cartan = Json::array();
    for (int i = 0; i < rs.rank(); ++i) {
        Json row = Json::array();
        for (int jj = 0; jj < rs.rank(); ++jj) row.push_back(rs.cartan(i, jj));
        cartan.push_back(std::move(row));
    }
    j["cartan"] = std::move(cartan);
    j["gramDual"] = matrix_json(rs.gram_dual());
    Json refl = Json::array();
    for (int i = 0; i < rs.rank(); ++i) refl.push_back(rs.simple_reflection_matrix(i));
    j["simpleReflections"] = std::move(refl);
    return j;
}

Json to_json(const AffineArrangement& a) {
    Json j;
    j["rank"] = a.rank;
    Json hs = Json::array();
    for (const auto& [root, level] : a.hyperplanes) {
        Json h;
        h["root"] = root;
        h["level"] = level;
        hs.push_back(std::move(h));
    }
    j["hyperplanes"] = std::move(hs);
    return j;
}

Json to_json(const CentralArrangement& a) {
    Json j;
    j["rank"] = a.arity - 1;
    Json forms = Json::array();
    for (const auto& f : a.forms) forms.push_back(rational_array(f.coefficients));
    j["forms"] = std::move(forms);
    return j;
}

Json to_json(const MultiArrangement& a) {
    Json j;
    j["rank"] = a.arity;
    Json forms = Json::array();
    Json mults = Json::array();
    for (const auto& [f, m] : a.entries) {
        forms.push_back(rational_array(f.coefficients));
        mults.push_back(m);
    }
    j["forms"] = std::move(forms);
    j["multiplicities"] = std::move(mults);
    return j;
}

Json to_json(const FreenessVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["exponents"] = v.exponents;
    if (v.certificate_degree) {
        j["certificateDegree"] = *v.certificate_degree;
        j["computedDimension"] = *v.computed_dimension;
        j["hypothesizedDimension"] = *v.hypothesized_dimension;
    } else {
        j["certificateDegree"] = nullptr;
    }
    return j;
}

Json to_json(const SrbResult& r) {
    Json j;
    j["family"] = std::string(1, family_to_char(r.rs.family()));
    j["rank"] = r.rs.rank();
    j["k"] = r.k;
    Json plus = Json::array(), minus = Json::array(), hat = Json::array();
    for (const auto& d : r.plus) plus.push_back(to_json(d));
    for (const auto& d : r.minus) minus.push_back(to_json(d));
    for (const auto& d : r.hat_minus) hat.push_back(to_json(d));
    j["plus"] = std::move(plus);
    j["minus"] = std::move(minus);
    j["hatMinus"] = std::move(hat);
    j["eta"] = to_json(r.eta);
    j["scalars"] = rational_array(r.scalars);
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["suite"] = r.suite;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["id"] = c.id;
        cj["status"] = c.passed ? "pass" : "fail";
        if (!c.passed) {
            cj["witness"] = c.witness;
            cj["unknown"] = c.unknown;
        }
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["passed"] = r.all_passed();
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    const int arity = j.at("arity").get<int>();
    Polynomial p(arity);
    for (const auto& t : j.at("terms")) {
        const auto e = t.at("exp").get<Exponents>();
        p.add_term(e, rational_from_string(t.at("coef").get<std::string>()));
    }
    return p;
}

Derivation derivation_from_json(const Json& j) {
    Derivation d;
    d.degree = j.at("degree").get<int>();
    for (const auto& c : j.at("coefficients")) d.coefficients.push_back(polynomial_from_json(c));
    d.arity = static_cast<int>(d.coefficients.size());
    for (const auto& c : d.coefficients) {
        if (c.arity() != d.arity) throw std::invalid_argument("derivation json: inconsistent arities");
        if (!c.is_zero() && !c.is_homogeneous(d.degree))
            throw std::invalid_argument("derivation json: coefficient not homogeneous of the stated degree");
    }
    return d;
}

SrbResult srb_result_from_json(const Json& j) {
    const std::string fam = j.at("family").get<std::string>();
    if (fam.size() != 1) throw std::invalid_argument("srb json: bad family");
    RootSystem rs(family_from_char(fam[0]), j.at("rank").get<int>());
    SrbResult r{rs, j.at("k").get<int>(), {}, {}, {}, {}, {}};
    for (const auto& d : j.at("plus")) r.plus.push_back(derivation_from_json(d));
    for (const auto& d : j.at("minus")) r.minus.push_back(derivation_from_json(d));
    for (const auto& d : j.at("hatMinus")) r.hat_minus.push_back(derivation_from_json(d));
    r.eta = derivation_from_json(j.at("eta"));
    for (const auto& s : j.at("scalars")) r.scalars.push_back(rational_from_string(s.get<std::string>()));
    return r;
}

}  // namespace srbkit
