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

#include "srbkit/arrangement.hpp"

#include <algorithm>
#include <stdexcept>

namespace srbkit {

std::string AffineArrangement::to_text() const {
    std::string s;
    for (const auto& [root, level] : hyperplanes) {
        s += "(";
        for (size_t i = 0; i < root.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(root[i]);
        }
        s += ") level " + std::to_string(level) + "\n";
    }
    return s;
}

bool CentralArrangement::contains(const LinearForm& f) const {
    const LinearForm n = f.normalized();
    return std::find(forms.begin(), forms.end(), n) != forms.end();
}

CentralArrangement CentralArrangement::adding(const LinearForm& f) const {
    if (f.arity() != arity) throw std::invalid_argument("arrangement: form arity mismatch");
    const LinearForm n = f.normalized();
    for (const auto& g : forms)
        if (g.proportional_to(n)) throw std::invalid_argument("arrangement: form already present");
    CentralArrangement out = *this;
    out.forms.push_back(n);
    return out;
}

CentralArrangement CentralArrangement::removing(const LinearForm& f) const {
    const LinearForm n = f.normalized();
    CentralArrangement out = *this;
    auto it = std::find(out.forms.begin(), out.forms.end(), n);
    if (it == out.forms.end()) throw std::invalid_argument("arrangement: form not present");
    out.forms.erase(it);
    return out;
}

int MultiArrangement::total_multiplicity() const {
    int t = 0;
    for (const auto& [f, m] : entries) t += m;
    return t;
}

AffineArrangement shi_arrangement(const RootSystem& rs, int k) {
    if (k < 1) throw std::invalid_argument("shi arrangement: k must be >= 1");
    AffineArrangement a;
    a.rank = rs.rank();
    for (const auto& root : rs.positive_roots())
        for (int j = -k + 1; j <= k; ++j) a.hyperplanes.emplace_back(root, j);
    return a;
}

AffineArrangement catalan_arrangement(const RootSystem& rs, int k) {
    if (k < 0) throw std::invalid_argument("catalan arrangement: k must be >= 0");
    AffineArrangement a;
    a.rank = rs.rank();
    for (const auto& root : rs.positive_roots())
        for (int j = -k; j <= k; ++j) a.hyperplanes.emplace_back(root, j);
    return a;
}

LinearForm cone_form(std::span<const int> root, int level, int arity) {
    if (static_cast<int>(root.size()) + 1 != arity) throw std::invalid_argument("cone form: arity mismatch");
    LinearForm f;
    f.coefficients.reserve(arity);
    for (int c : root) f.coefficients.emplace_back(c);
    f.coefficients.emplace_back(-level);
    return f.normalized();
}

LinearForm root_form(std::span<const int> root) {
    LinearForm f;
    f.coefficients.reserve(root.size());
    for (int c : root) f.coefficients.emplace_back(c);
    return f.normalized();
}

CentralArrangement cone(const AffineArrangement& aff) {
    CentralArrangement c;
    c.arity = aff.rank + 1;
    for (const auto& [root, level] : aff.hyperplanes) c.forms.push_back(cone_form(root, level, c.arity));
    LinearForm z;
    z.coefficients.assign(c.arity, Rational(0));
    z.coefficients.back() = 1;
    c.forms.push_back(z);
    for (size_t i = 0; i < c.forms.size(); ++i)
        for (size_t j = i + 1; j < c.forms.size(); ++j)
            if (c.forms[i].proportional_to(c.forms[j])) throw std::invalid_argument("cone: proportional forms");
    return c;
}

CentralArrangement b_gamma(const RootSystem& rs, int k, const std::set<int>& gamma, char sign) {
    if (sign != '+' && sign != '-') throw std::invalid_argument("b_gamma: sign must be '+' or '-'");
    for (int i : gamma)
        if (i < 1 || i > rs.rank()) throw std::invalid_argument("b_gamma: index outside the simple system");
    CentralArrangement c = cone(shi_arrangement(rs, k));
    for (int i : gamma) {
        const auto& root = rs.positive_roots()[i - 1];
        if (sign == '+')
            c = c.adding(cone_form(root, -k, c.arity));
        else
            c = c.removing(cone_form(root, k, c.arity));
    }
    return c;
}

MultiArrangement ziegler_multiplicity(const CentralArrangement& central) {
    const int arity = central.arity;
    LinearForm z;
    z.coefficients.assign(arity, Rational(0));
    z.coefficients.back() = 1;
    if (!central.contains(z)) throw std::invalid_argument("ziegler restriction: the form z is missing");
    MultiArrangement m;
    m.arity = arity - 1;
    for (const auto& f : central.forms) {
        LinearForm base;
        base.coefficients.assign(f.coefficients.begin(), f.coefficients.end() - 1);
        bool all_zero = true;
        for (const auto& c : base.coefficients)
            if (c != 0) all_zero = false;
        if (all_zero) continue;  // the hyperplane at infinity itself
        base = base.normalized();
        auto it = std::find_if(m.entries.begin(), m.entries.end(), [&](const auto& e) { return e.first == base; });
        if (it == m.entries.end())
            m.entries.emplace_back(base, 1);
        else
            ++it->second;
    }
    return m;
}

MultiArrangement root_multiarrangement(const RootSystem& rs, const std::vector<int>& mult) {
    if (static_cast<int>(mult.size()) != rs.positive_count())
        throw std::invalid_argument("multiarrangement: one multiplicity per positive root required");
    MultiArrangement m;
    m.arity = rs.rank();
    for (int i = 0; i < rs.positive_count(); ++i) {
        if (mult[i] < 0) throw std::invalid_argument("multiarrangement: negative multiplicity");
        if (mult[i] == 0) continue;
        m.entries.emplace_back(root_form(rs.positive_roots()[i]), mult[i]);
    }
    return m;
}

MultiArrangement root_multiarrangement_gamma(const RootSystem& rs, int base, int delta, const std::set<int>& gamma) {
    std::vector<int> mult(rs.positive_count(), base);
    for (int i : gamma) {
        if (i < 1 || i > rs.rank()) throw std::invalid_argument("multiarrangement: index outside the simple system");
        mult[i - 1] += delta;
    }
    return root_multiarrangement(rs, mult);
}

}  // namespace srbkit
