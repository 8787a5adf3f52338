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

#include "srbkit/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace srbkit {

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(int arity, Rational c) {
    Polynomial p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

Polynomial Polynomial::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw std::invalid_argument("polynomial: variable index out of range");
    Exponents e(arity, 0);
    e[index] = 1;
    return monomial(arity, e, Rational(1));
}

Polynomial Polynomial::monomial(int arity, Exponents exps, Rational coef) {
    if (static_cast<int>(exps.size()) != arity) throw std::invalid_argument("polynomial: exponent arity mismatch");
    Polynomial p(arity);
    p.add_term(exps, coef);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::leading_coefficient() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("polynomial: exponent arity mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (arity_ != rhs.arity_) throw std::invalid_argument("polynomial: arity mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (arity_ != rhs.arity_) throw std::invalid_argument("polynomial: arity mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("polynomial: arity mismatch");
    Polynomial r(a.arity_);
    Exponents e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
    if (static_cast<int>(images.size()) != arity_) throw std::invalid_argument("polynomial: substitution arity mismatch");
    const int out_arity = images.empty() ? 0 : images[0].arity();
    for (const auto& im : images)
        if (im.arity() != out_arity) throw std::invalid_argument("polynomial: inconsistent image arities");
    // Lazily grown power tables for each image.
    std::vector<std::vector<Polynomial>> powers(arity_);
    auto power_of = [&](int v, int e) -> const Polynomial& {
        auto& tab = powers[v];
        if (tab.empty()) tab.push_back(Polynomial::constant(out_arity, Rational(1)));
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * images[v]);
        return tab[e];
    };
    Polynomial r(out_arity);
    for (const auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(out_arity, c);
        for (int v = 0; v < arity_; ++v)
            if (e[v] > 0) t = t * power_of(v, e[v]);
        r += t;
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != arity_) throw std::invalid_argument("polynomial: evaluation arity mismatch");
    Rational r(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < arity_; ++v)
            for (int i = 0; i < e[v]; ++i) t *= point[v];
        r += t;
    }
    return r;
}

Polynomial Polynomial::substitute_zero(int var) const {
    if (var < 0 || var >= arity_) throw std::invalid_argument("polynomial: variable index out of range");
    Polynomial r(arity_);
    for (const auto& [e, c] : terms_)
        if (e[var] == 0) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::drop_variable(int var) const {
    if (var < 0 || var >= arity_) throw std::invalid_argument("polynomial: variable index out of range");
    Polynomial r(arity_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[var] != 0) throw std::invalid_argument("polynomial: dropping a used variable");
        Exponents e2;
        e2.reserve(arity_ - 1);
        for (int i = 0; i < arity_; ++i)
            if (i != var) e2.push_back(e[i]);
        r.add_term(e2, c);
    }
    return r;
}

namespace {

std::string variable_name(int index, int arity, bool last_is_z) {
    if (last_is_z && index == arity - 1) return "z";
    return "x" + std::to_string(index + 1);
}

std::string monomial_text(const Exponents& e, bool last_is_z) {
    std::string s;
    const int n = static_cast<int>(e.size());
    for (int i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += variable_name(i, n, last_is_z);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string Polynomial::to_text(bool last_is_z) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        const std::string mono = monomial_text(e, last_is_z);
        if (mono.empty()) {
            s += to_string(a);
        } else {
            if (a != 1) s += to_string(a) + "*";
            s += mono;
        }
        first = false;
    }
    return s;
}

int LinearForm::first_nonzero() const {
    for (int i = 0; i < arity(); ++i)
        if (coefficients[i] != 0) return i;
    return -1;
}

int LinearForm::nonzero_count() const {
    int n = 0;
    for (const auto& c : coefficients)
        if (c != 0) ++n;
    return n;
}

LinearForm LinearForm::normalized() const {
    const int fn = first_nonzero();
    if (fn < 0) throw std::invalid_argument("linear form: all coefficients zero");
    // Clear denominators, then divide by the integer content.
    Integer den_lcm = 1;
    for (const auto& c : coefficients) {
        if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (constant != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), constant.get_den().get_mpz_t());
    LinearForm r = *this;
    const Rational scale_up(den_lcm);
    for (auto& c : r.coefficients) c *= scale_up;
    r.constant *= scale_up;
    Integer content = 0;
    for (const auto& c : r.coefficients) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), r.constant.get_num().get_mpz_t());
    Rational scale_down = Rational(1) / Rational(content);
    if (r.coefficients[fn] < 0) scale_down = -scale_down;
    for (auto& c : r.coefficients) c *= scale_down;
    r.constant *= scale_down;
    return r;
}

bool LinearForm::proportional_to(const LinearForm& other) const {
    if (arity() != other.arity()) return false;
    return normalized() == other.normalized();
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p(arity());
    for (int i = 0; i < arity(); ++i) {
        if (coefficients[i] == 0) continue;
        Exponents e(arity(), 0);
        e[i] = 1;
        p.add_term(e, coefficients[i]);
    }
    if (constant != 0) p.add_term(Exponents(arity(), 0), constant);
    return p;
}

std::string LinearForm::to_text(bool last_is_z) const {
    return to_polynomial().to_text(last_is_z);
}

std::string to_string(const Exponents& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    if (p.arity() != d.arity()) throw std::invalid_argument("divide_exact: arity mismatch");
    const int n = p.arity();
    Polynomial q(n);
    Polynomial r = p;
    const auto& dl = *d.terms().begin();
    Exponents e(n);
    while (!r.is_zero()) {
        const auto& rl = *r.terms().begin();
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            e[i] = rl.first[i] - dl.first[i];
            if (e[i] < 0) {
                ok = false;
                break;
            }
        }
        if (!ok) return std::nullopt;
        Polynomial t = Polynomial::monomial(n, e, rl.second / dl.second);
        q += t;
        r -= t * d;
    }
    return q;
}

std::vector<Polynomial> remainder_components(const Polynomial& p, const LinearForm& f, int power) {
    if (power < 1) throw std::invalid_argument("remainder_components: power must be >= 1");
    if (!f.is_central()) throw std::invalid_argument("remainder_components: form must be central");
    if (f.arity() != p.arity()) throw std::invalid_argument("remainder_components: arity mismatch");
    const int v = f.first_nonzero();
    if (v < 0) throw std::invalid_argument("remainder_components: zero form");
    const int n = p.arity();
    const Rational c = f.coefficients[v];
    // g := f - c*x_v, so x_v = (f - g)/c and p expands as sum_j r_j * f^j.
    Polynomial g = f.to_polynomial();
    {
        Exponents e(n, 0);
        e[v] = 1;
        g.add_term(e, -c);
    }

    // Group terms of p by the exponent of x_v.
    std::map<int, Polynomial> slices;
    for (const auto& [e, coef] : p.terms()) {
        Exponents e2 = e;
        const int ev = e2[v];
        e2[v] = 0;
        auto [it, inserted] = slices.try_emplace(ev, Polynomial(n));
        it->second.add_term(e2, coef);
    }
    int max_e = slices.empty() ? 0 : slices.rbegin()->first;

    std::vector<Polynomial> neg_g_pow;
    neg_g_pow.push_back(Polynomial::constant(n, Rational(1)));
    for (int t = 1; t <= max_e; ++t) neg_g_pow.push_back(neg_g_pow.back() * (-g));

    std::vector<Rational> c_pow(max_e + 1);
    c_pow[0] = 1;
    for (int t = 1; t <= max_e; ++t) c_pow[t] = c_pow[t - 1] * c;

    std::vector<Polynomial> out;
    out.reserve(power);
    for (int j = 0; j < power; ++j) {
        Polynomial rj(n);
        for (const auto& [ev, slice] : slices) {
            if (ev < j) continue;
            rj += slice * neg_g_pow[ev - j] * (binomial(ev, j) / c_pow[ev]);
        }
        out.push_back(std::move(rj));
    }
    return out;
}

bool divisible_by_linear_power(const Polynomial& p, const LinearForm& f, int power) {
    for (const auto& r : remainder_components(p, f, power))
        if (!r.is_zero()) return false;
    return true;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
    int arity = -1;
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("poly_det: matrix not square");
        for (const auto& p : row) {
            if (arity < 0) arity = p.arity();
            if (p.arity() != arity) throw std::invalid_argument("poly_det: mixed arities");
        }
    }
    // minors[mask] = determinant of rows in mask, columns 0..popcount-1.
    std::vector<Polynomial> minors(1u << n, Polynomial(arity));
    minors[0] = Polynomial::constant(arity, Rational(1));
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int col = __builtin_popcount(mask) - 1;
        Polynomial det(arity);
        int pos = 0;
        for (int r = 0; r < n; ++r) {
            if (!(mask & (1u << r))) continue;
            if (!m[r][col].is_zero() && !minors[mask & ~(1u << r)].is_zero()) {
                Polynomial t = m[r][col] * minors[mask & ~(1u << r)];
                if ((pos + col) % 2 != 0) t = -t;
                det += t;
            }
            ++pos;
        }
        minors[mask] = std::move(det);
    }
    return minors[(1u << n) - 1];
}

std::string factored_text(const Polynomial& p, const std::vector<LinearForm>& candidates, bool last_is_z) {
    if (p.is_zero()) return "0";
    Polynomial rest = p;
    std::vector<std::pair<Polynomial, int>> factors;
    for (const auto& f : candidates) {
        const Polynomial fp = f.to_polynomial();
        int count = 0;
        while (true) {
            auto q = divide_exact(rest, fp);
            if (!q) break;
            rest = std::move(*q);
            ++count;
        }
        if (count > 0) factors.emplace_back(fp, count);
    }
    if (factors.empty()) return p.to_text(last_is_z);

    std::string s;
    Rational lead(1);
    if (rest.is_constant()) {
        lead = rest.leading_coefficient();
        rest = Polynomial(p.arity());
    }
    if (lead == -1)
        s += "-";
    else if (lead != 1)
        s += to_string(lead) + "*";
    bool first = true;
    for (const auto& [fp, count] : factors) {
        if (!first) s += "*";
        const bool bare = fp.terms().size() == 1 && fp.leading_coefficient() == 1;
        s += bare ? fp.to_text(last_is_z) : "(" + fp.to_text(last_is_z) + ")";
        if (count > 1) s += "^" + std::to_string(count);
        first = false;
    }
    if (!rest.is_zero() && !(rest.is_constant() && rest.leading_coefficient() == 1)) {
        s += "*(" + rest.to_text(last_is_z) + ")";
    }
    return s;
}

std::vector<Exponents> monomials_of_degree(int arity, int degree) {
    std::vector<Exponents> out;
    if (arity == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    Exponents cur(arity, 0);
    // Enumerate recursively, then sort into the canonical order.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == arity - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), GrlexDescending{});
    return out;
}

}  // namespace srbkit
