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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srbkit/linalg.hpp"
#include "srbkit/polynomial.hpp"

using namespace srbkit;

namespace {

// Small deterministic generator for the property checks.
struct Rng {
    std::uint64_t state = 0x12345678u;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int integer(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
    Rational rational() {
        int num = integer(-6, 6);
        int den = integer(1, 4);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
};

Polynomial random_poly(Rng& rng, int arity, int max_degree, int terms) {
    Polynomial p(arity);
    for (int t = 0; t < terms; ++t) {
        Exponents e(arity);
        for (int i = 0; i < arity; ++i) e[i] = rng.integer(0, max_degree);
        p.add_term(e, rng.rational());
    }
    return p;
}

LinearForm random_central_form(Rng& rng, int arity) {
    LinearForm f;
    f.coefficients.resize(arity);
    while (f.first_nonzero() < 0) {
        for (int i = 0; i < arity; ++i) f.coefficients[i] = Rational(rng.integer(-3, 3));
    }
    return f.normalized();
}

Polynomial x(int arity, int i) { return Polynomial::variable(arity, i); }

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(to_string(rational_from_string("3/6")) == "1/2");
    CHECK(to_string(rational_from_string("-4/2")) == "-2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("polynomial ring arithmetic") {
    // x1 - x1 = 0
    CHECK((x(2, 0) - x(2, 0)).is_zero());
    // (x1 + z)(x1 - z) = x1^2 - z^2 (arity 2, second variable plays z)
    Polynomial sum = x(2, 0) + x(2, 1);
    Polynomial diff = x(2, 0) - x(2, 1);
    Polynomial expect(2);
    expect.add_term({2, 0}, 1);
    expect.add_term({0, 2}, -1);
    CHECK(sum * diff == expect);
    // (2/3 x1)(3/2 x2) = x1 x2
    Polynomial a = x(2, 0) * Rational(2, 3);
    Polynomial b = x(2, 1) * Rational(3, 2);
    Polynomial ab(2);
    ab.add_term({1, 1}, 1);
    CHECK(a * b == ab);
    CHECK_THROWS_AS(x(2, 0) + x(3, 0), std::invalid_argument);
}

TEST_CASE("polynomial homogeneity and text") {
    Polynomial p(3);
    p.add_term({2, 0, 0}, 1);
    p.add_term({0, 1, 1}, Rational(-1, 2));
    CHECK(p.is_homogeneous(2));
    CHECK(!p.is_homogeneous(1));
    CHECK(p.to_text(true) == "x1^2 - 1/2*x2*z");
    CHECK(Polynomial(3).to_text() == "0");
    CHECK(Polynomial(2).is_homogeneous(5));
}

TEST_CASE("divide_exact") {
    // (x1^2 - z^2) / (x1 - z) = x1 + z
    Polynomial p(2);
    p.add_term({2, 0}, 1);
    p.add_term({0, 2}, -1);
    Polynomial d = x(2, 0) - x(2, 1);
    auto q = divide_exact(p, d);
    REQUIRE(q.has_value());
    CHECK(*q == x(2, 0) + x(2, 1));

    // x1^2 + z^2 is not divisible by x1 - z
    Polynomial nd(2);
    nd.add_term({2, 0}, 1);
    nd.add_term({0, 2}, 1);
    CHECK(!divide_exact(nd, d).has_value());

    // x(x - z) / (x - z) = x
    CHECK(*divide_exact(x(2, 0) * d, d) == x(2, 0));

    CHECK_THROWS_AS(divide_exact(p, Polynomial(2)), std::invalid_argument);
}

TEST_CASE("divide_exact round trip on random inputs") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_poly(rng, 3, 2, 4);
        Polynomial d = random_poly(rng, 3, 2, 3);
        if (d.is_zero()) continue;
        auto q = divide_exact(p * d, d);
        REQUIRE(q.has_value());
        CHECK(*q == p);
        // A nonzero constant offset breaks divisibility unless d is constant.
        if (!d.is_constant() && !p.is_zero()) {
            Polynomial off = p * d + Polynomial::constant(3, 1);
            CHECK(!divide_exact(off, d).has_value());
        }
    }
}

TEST_CASE("remainder_components") {
    // x1^2 against x1^2: both components vanish
    Polynomial sq(2);
    sq.add_term({2, 0}, 1);
    LinearForm fx1;
    fx1.coefficients = {Rational(1), Rational(0)};
    auto comps = remainder_components(sq, fx1, 2);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].is_zero());
    CHECK(comps[1].is_zero());

    // x1^3 does not divide x1^2
    comps = remainder_components(sq, fx1, 3);
    CHECK(comps[0].is_zero());
    CHECK(comps[1].is_zero());
    CHECK(!comps[2].is_zero());

    // x1*x2 mod (x1 + x2): eliminating x1 gives -x2^2
    Polynomial p(2);
    p.add_term({1, 1}, 1);
    LinearForm sum;
    sum.coefficients = {Rational(1), Rational(1)};
    comps = remainder_components(p, sum, 1);
    Polynomial expect(2);
    expect.add_term({0, 2}, -1);
    CHECK(comps[0] == expect);

    CHECK_THROWS_AS(remainder_components(p, sum, 0), std::invalid_argument);
    LinearForm affine = sum;
    affine.constant = 1;
    CHECK_THROWS_AS(remainder_components(p, affine, 1), std::invalid_argument);
}

TEST_CASE("remainder_components agree with iterated division") {
    Rng rng;
    for (int trial = 0; trial < 60; ++trial) {
        const int arity = 2 + trial % 2;
        Polynomial p = random_poly(rng, arity, 3, 4);
        LinearForm f = random_central_form(rng, arity);
        const int m = 1 + trial % 3;
        bool by_components = divisible_by_linear_power(p, f, m);
        Polynomial q = p;
        bool by_division = true;
        const Polynomial fp = f.to_polynomial();
        for (int i = 0; i < m && by_division; ++i) {
            auto r = divide_exact(q, fp);
            if (!r)
                by_division = false;
            else
                q = *r;
        }
        CHECK(by_components == by_division);
    }
}

TEST_CASE("linear form normalization") {
    LinearForm f;
    f.coefficients = {Rational(-2), Rational(4)};
    LinearForm n = f.normalized();
    CHECK(n.coefficients[0] == 1);
    CHECK(n.coefficients[1] == -2);
    LinearForm g;
    g.coefficients = {Rational(1, 2), Rational(-1)};
    CHECK(g.normalized() == n);
    CHECK(f.proportional_to(g));
    LinearForm zero;
    zero.coefficients = {Rational(0), Rational(0)};
    CHECK_THROWS_AS(zero.normalized(), std::invalid_argument);
}

TEST_CASE("kernel basics") {
    RationalMatrix id = RationalMatrix::identity(2);
    CHECK(id.kernel().empty());
    CHECK(id.rank() == 2);

    RationalMatrix zero(2, 2);
    auto basis = zero.kernel();
    REQUIRE(basis.size() == 2);
    CHECK(basis[0][0] == 1);
    CHECK(basis[1][1] == 1);

    RationalMatrix row(1, 2);
    row.at(0, 0) = 1;
    row.at(0, 1) = 1;
    basis = row.kernel();
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == 1);
    CHECK(basis[0][1] == -1);
}

TEST_CASE("kernel vectors are exact null vectors and count matches rank") {
    Rng rng;
    for (int trial = 0; trial < 25; ++trial) {
        const int rows = rng.integer(1, 5);
        const int cols = rng.integer(1, 6);
        RationalMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = rng.rational();
        const auto basis = m.kernel();
        CHECK(static_cast<int>(basis.size()) == cols - m.rank());
        for (const auto& v : basis) {
            for (const auto& entry : m.apply(v)) CHECK(entry == 0);
            // normalized leading entry
            for (const auto& x : v) {
                if (x != 0) {
                    CHECK(x == 1);
                    break;
                }
            }
        }
        // Independence of the returned vectors.
        CHECK(rank_of(basis) == static_cast<int>(basis.size()));
    }
}

TEST_CASE("kernel output depends only on the row space") {
    Rng rng;
    for (int trial = 0; trial < 15; ++trial) {
        const int rows = rng.integer(2, 4);
        const int cols = rng.integer(2, 6);
        RationalMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = rng.rational();
        // Shuffle rows and add a multiple of one row to another.
        RationalMatrix t(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t.at(r, c) = m.at((r + 1) % rows, c);
        if (rows >= 2) {
            const Rational factor = rng.rational();
            for (int c = 0; c < cols; ++c) t.at(0, c) += factor * t.at(1, c);
        }
        CHECK(m.kernel() == t.kernel());
    }
}

TEST_CASE("poly_det") {
    // diag(x1, x2)
    std::vector<std::vector<Polynomial>> m{{x(2, 0), Polynomial(2)}, {Polynomial(2), x(2, 1)}};
    Polynomial expect(2);
    expect.add_term({1, 1}, 1);
    CHECK(poly_det(m) == expect);

    // equal rows -> 0
    std::vector<std::vector<Polynomial>> eq{{x(2, 0), x(2, 1)}, {x(2, 0), x(2, 1)}};
    CHECK(poly_det(eq).is_zero());

    // [[x, z], [z, x]] -> x^2 - z^2
    std::vector<std::vector<Polynomial>> sym{{x(2, 0), x(2, 1)}, {x(2, 1), x(2, 0)}};
    Polynomial expect2(2);
    expect2.add_term({2, 0}, 1);
    expect2.add_term({0, 2}, -1);
    CHECK(poly_det(sym) == expect2);

    std::vector<std::vector<Polynomial>> rect{{x(2, 0)}, {x(2, 1)}};
    CHECK_THROWS_AS(poly_det(rect), std::invalid_argument);
}

TEST_CASE("poly_det agrees with scalar determinant at random points") {
    Rng rng;
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3;
        std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(2)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = random_poly(rng, 2, 2, 2);
        const Polynomial det = poly_det(m);
        std::vector<Rational> point{rng.rational(), rng.rational()};
        // cofactor expansion on scalars
        auto scalar_det = [&](auto&& self, std::vector<std::vector<Rational>> a) -> Rational {
            const int sz = static_cast<int>(a.size());
            if (sz == 1) return a[0][0];
            Rational acc(0);
            for (int r = 0; r < sz; ++r) {
                std::vector<std::vector<Rational>> sub;
                for (int i = 0; i < sz; ++i) {
                    if (i == r) continue;
                    std::vector<Rational> row(a[i].begin() + 1, a[i].end());
                    sub.push_back(std::move(row));
                }
                Rational term = a[r][0] * self(self, std::move(sub));
                acc += (r % 2 == 0) ? term : -term;
            }
            return acc;
        };
        std::vector<std::vector<Rational>> vals(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) vals[i][j] = m[i][j].evaluate(point);
        CHECK(det.evaluate(point) == scalar_det(scalar_det, vals));
    }
}

TEST_CASE("monomial order and enumeration") {
    const auto monos = monomials_of_degree(3, 2);
    CHECK(monos.size() == 6);
    CHECK(monos.front() == Exponents{2, 0, 0});
    CHECK(monos.back() == Exponents{0, 0, 2});
    GrlexDescending cmp;
    for (size_t i = 0; i + 1 < monos.size(); ++i) CHECK(cmp(monos[i], monos[i + 1]));
}

TEST_CASE("factored text") {
    // x1^2 - x1 z = x1 (x1 - z)
    Polynomial p(2);
    p.add_term({2, 0}, 1);
    p.add_term({1, 1}, -1);
    LinearForm fx1, fz, fd;
    fx1.coefficients = {Rational(1), Rational(0)};
    fz.coefficients = {Rational(0), Rational(1)};
    fd.coefficients = {Rational(1), Rational(-1)};
    CHECK(factored_text(p, {fx1, fz, fd}, true) == "x1*(x1 - z)");
    CHECK(factored_text(p * Rational(2), {fx1, fz, fd}, true) == "2*x1*(x1 - z)");
}
