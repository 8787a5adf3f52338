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

#include "srbkit/derivation.hpp"

#include <stdexcept>

namespace srbkit {

Derivation Derivation::zero(int arity, int degree) {
    Derivation d;
    d.arity = arity;
    d.degree = degree;
    d.coefficients.assign(arity, Polynomial(arity));
    return d;
}

bool Derivation::is_zero() const {
    for (const auto& c : coefficients)
        if (!c.is_zero()) return false;
    return true;
}

Polynomial Derivation::apply(const LinearForm& f) const {
    if (f.arity() != arity) throw std::invalid_argument("derivation: form arity mismatch");
    if (!f.is_central()) throw std::invalid_argument("derivation: form must be central");
    Polynomial r(arity);
    for (int i = 0; i < arity; ++i)
        if (f.coefficients[i] != 0 && !coefficients[i].is_zero()) r += coefficients[i] * f.coefficients[i];
    return r;
}

Derivation& Derivation::operator+=(const Derivation& rhs) {
    if (arity != rhs.arity || degree != rhs.degree) throw std::invalid_argument("derivation: shape mismatch");
    for (int i = 0; i < arity; ++i) coefficients[i] += rhs.coefficients[i];
    return *this;
}

Derivation& Derivation::operator-=(const Derivation& rhs) {
    if (arity != rhs.arity || degree != rhs.degree) throw std::invalid_argument("derivation: shape mismatch");
    for (int i = 0; i < arity; ++i) coefficients[i] -= rhs.coefficients[i];
    return *this;
}

Derivation Derivation::scaled(const Rational& c) const {
    Derivation d = *this;
    for (auto& p : d.coefficients) p *= c;
    return d;
}

Derivation Derivation::times(const Polynomial& p) const {
    if (p.arity() != arity) throw std::invalid_argument("derivation: polynomial arity mismatch");
    Derivation d;
    d.arity = arity;
    d.degree = degree + std::max(p.degree(), 0);
    d.coefficients.reserve(arity);
    for (const auto& c : coefficients) d.coefficients.push_back(c * p);
    return d;
}

std::string Derivation::to_text(bool last_is_z) const {
    std::string s;
    for (int i = 0; i < arity; ++i) {
        const std::string var = (last_is_z && i == arity - 1) ? "z" : "x" + std::to_string(i + 1);
        s += "theta(" + var + ") = " + coefficients[i].to_text(last_is_z) + "\n";
    }
    return s;
}

Derivation euler_derivation(int arity) {
    Derivation d = Derivation::zero(arity, 1);
    for (int i = 0; i < arity; ++i) d.coefficients[i] = Polynomial::variable(arity, i);
    return d;
}

Derivation ziegler_restrict(const Derivation& theta) {
    const int n = theta.arity;
    if (n < 2) throw std::invalid_argument("ziegler restriction: arity too small");
    if (!theta.coefficients[n - 1].is_zero())
        throw std::invalid_argument("ziegler restriction: theta(z) must vanish");
    Derivation d;
    d.arity = n - 1;
    d.degree = theta.degree;
    d.coefficients.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i)
        d.coefficients.push_back(theta.coefficients[i].substitute_zero(n - 1).drop_variable(n - 1));
    return d;
}

Derivation weyl_act(const RootSystem& rs, int i, const Derivation& theta) {
    const int l = rs.rank();
    if (i < 1 || i > l) throw std::invalid_argument("weyl action: reflection index out of range");
    const int n = theta.arity;
    if (n != l && n != l + 1) throw std::invalid_argument("weyl action: derivation arity mismatch");
    const int idx = i - 1;
    Derivation out = Derivation::zero(n, theta.degree);
    for (int j = 0; j < n; ++j) {
        // (s theta)(x_j) = s(theta(s x_j)); s fixes z.
        Polynomial inner = theta.coefficients[j];
        if (j < l && j != idx) {
            // s(x_j) = x_j - cartan(i,j) x_i
            inner -= theta.coefficients[idx] * Rational(rs.cartan(idx, j));
        } else if (j == idx) {
            // s(x_i) = -x_i since cartan(i,i) = 2
            inner = theta.coefficients[idx] * Rational(-1);
        }
        out.coefficients[j] = rs.reflect_polynomial(idx, inner);
    }
    return out;
}

namespace {

template <typename Entries>
std::optional<std::pair<LinearForm, int>> first_failure(const Derivation& theta, const Entries& entries) {
    for (const auto& [form, mult] : entries) {
        if (!divisible_by_linear_power(theta.apply(form), form, mult)) return std::make_pair(form, mult);
    }
    return std::nullopt;
}

std::vector<std::pair<LinearForm, int>> with_unit_mult(const CentralArrangement& a) {
    std::vector<std::pair<LinearForm, int>> v;
    v.reserve(a.forms.size());
    for (const auto& f : a.forms) v.emplace_back(f, 1);
    return v;
}

}  // namespace

std::optional<std::pair<LinearForm, int>> membership_failure(const Derivation& theta, const CentralArrangement& a) {
    return first_failure(theta, with_unit_mult(a));
}

std::optional<std::pair<LinearForm, int>> membership_failure(const Derivation& theta, const MultiArrangement& a) {
    return first_failure(theta, a.entries);
}

bool in_module(const Derivation& theta, const CentralArrangement& a) {
    return !membership_failure(theta, a).has_value();
}

bool in_module(const Derivation& theta, const MultiArrangement& a) {
    return !membership_failure(theta, a).has_value();
}

bool in_module_d0(const Derivation& theta, const CentralArrangement& a) {
    if (theta.arity != a.arity) throw std::invalid_argument("derivation: arity mismatch");
    return theta.coefficients[theta.arity - 1].is_zero() && in_module(theta, a);
}

}  // namespace srbkit
