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

#include <algorithm>

#include "srbkit/freeness.hpp"
#include "srbkit/graded.hpp"

using namespace srbkit;

namespace {

Derivation make_derivation(std::vector<Polynomial> coeffs, int degree) {
    Derivation d;
    d.arity = static_cast<int>(coeffs.size());
    d.degree = degree;
    d.coefficients = std::move(coeffs);
    return d;
}

// x1 (x1 - z) d/dx1 in the A1 cone coordinates (x1, z).
Derivation a1_generator() {
    Polynomial c(2);
    c.add_term({2, 0}, 1);
    c.add_term({1, 1}, -1);
    return make_derivation({c, Polynomial(2)}, 2);
}

}  // namespace

TEST_CASE("graded pieces of small cones") {
    const RootSystem a1(Family::A, 1);
    const CentralArrangement shi_a1 = cone(shi_arrangement(a1, 1));
    GradedBasis basis = graded_derivations(shi_a1, 2, true);
    REQUIRE(basis.dimension() == 1);
    CHECK(basis.members[0] == a1_generator());

    const RootSystem a2(Family::A, 2);
    const CentralArrangement shi_a2 = cone(shi_arrangement(a2, 1));
    CHECK(graded_dimension(shi_a2, 3, true) == 2);
    CHECK(graded_dimension(shi_a2, 2, true) == 0);

    // Members of a returned basis satisfy the divisibility conditions.
    for (const auto& m : graded_derivations(shi_a2, 3, true).members) {
        CHECK(in_module_d0(m, shi_a2));
        for (const auto& f : shi_a2.forms) {
            auto q = divide_exact(m.apply(f), f.to_polynomial());
            CHECK(q.has_value());
        }
    }
}

TEST_CASE("graded pieces of the constant-multiplicity base arrangement") {
    const RootSystem a2(Family::A, 2);
    const MultiArrangement m = root_multiarrangement(a2, {2, 2, 2});
    // Hand solve: theta(x1) = a x1^2, theta(x2) = b x2^2, and divisibility at
    // x1 + x2 forces a = b = 0; the first members appear at degree kh = 3.
    CHECK(graded_dimension(m, 2) == 0);
    CHECK(graded_dimension(m, 3) == 2);
    for (const auto& member : graded_derivations(m, 3).members) CHECK(in_module(member, m));
}

TEST_CASE("degree-one piece of a cone is spanned by the Euler derivation") {
    for (auto [family, rank] : {std::pair{Family::A, 2}, {Family::B, 2}}) {
        const RootSystem rs(family, rank);
        const CentralArrangement c = cone(shi_arrangement(rs, 1));
        const GradedBasis basis = graded_derivations(c, 1, false);
        REQUIRE(basis.dimension() == 1);
        // canonical scaling makes it exactly the Euler derivation
        CHECK(basis.members[0] == euler_derivation(rank + 1));
    }
}

TEST_CASE("graded bases do not depend on the order of the defining forms") {
    const RootSystem a2(Family::A, 2);
    const CentralArrangement c = cone(shi_arrangement(a2, 1));
    CentralArrangement reversed = c;
    std::reverse(reversed.forms.begin(), reversed.forms.end());
    CHECK(graded_derivations(c, 3, true).members == graded_derivations(reversed, 3, true).members);
    CHECK(graded_derivations(c, 3, false).members == graded_derivations(reversed, 3, false).members);
}

TEST_CASE("euler derivation") {
    const Derivation e2 = euler_derivation(2);
    CHECK(e2.coefficients[0] == Polynomial::variable(2, 0));
    CHECK(e2.coefficients[1] == Polynomial::variable(2, 1));

    const RootSystem a2(Family::A, 2);
    const CentralArrangement c = cone(shi_arrangement(a2, 1));
    CHECK(in_module(euler_derivation(3), c));
    CHECK(!in_module_d0(euler_derivation(3), c));
}

TEST_CASE("ziegler restriction of derivations") {
    const Derivation g = a1_generator();
    const Derivation r = ziegler_restrict(g);
    REQUIRE(r.arity == 1);
    Polynomial expect(1);
    expect.add_term({2}, 1);
    CHECK(r.coefficients[0] == expect);
    // Lands in D(A(A1), 2).
    const RootSystem a1(Family::A, 1);
    CHECK(in_module(r, root_multiarrangement(a1, {2})));

    // Everything divisible by z restricts to zero; restriction is linear.
    Derivation zmul = g.times(Polynomial::variable(2, 1));
    zmul.coefficients[0] = Polynomial::variable(2, 1) * Polynomial::variable(2, 1) * Polynomial::variable(2, 1);
    CHECK(ziegler_restrict(zmul).is_zero());
    const Derivation sum = ziegler_restrict(g + g);
    CHECK(sum == [&] {
        Derivation two = r;
        return two.scaled(Rational(2));
    }());

    Derivation bad = g;
    bad.coefficients[1] = Polynomial::variable(2, 1) * Polynomial::variable(2, 0);
    CHECK_THROWS_AS(ziegler_restrict(bad), std::invalid_argument);
}

TEST_CASE("saito test on the boolean arrangement") {
    CentralArrangement boolean2;
    boolean2.arity = 2;
    LinearForm fx, fy;
    fx.coefficients = {Rational(1), Rational(0)};
    fy.coefficients = {Rational(0), Rational(1)};
    boolean2.forms = {fx, fy};

    const Derivation xdx = make_derivation({Polynomial::variable(2, 0), Polynomial(2)}, 1);
    const Derivation ydy = make_derivation({Polynomial(2), Polynomial::variable(2, 1)}, 1);
    CHECK(saito_test({xdx, ydy}, boolean2));

    // Duplicate members: determinant vanishes.
    CHECK(!saito_test({xdx, xdx}, boolean2));

    // Degree sum too high: determinant is not a constant multiple of x*y.
    const Derivation xydx = xdx.times(Polynomial::variable(2, 1));
    CHECK(!saito_test({xydx, ydy}, boolean2));

    // Membership violations (x d/dy included) are an error, not false.
    const Derivation xdy = make_derivation({Polynomial(2), Polynomial::variable(2, 0)}, 1);
    CHECK_THROWS_AS(saito_test({xdx, xdy}, boolean2), std::invalid_argument);
}

TEST_CASE("saito test certifies the A1 shi cone") {
    const RootSystem a1(Family::A, 1);
    const CentralArrangement c = cone(shi_arrangement(a1, 1));
    CHECK(saito_test({euler_derivation(2), a1_generator()}, c));
}

TEST_CASE("weyl action") {
    const RootSystem a1(Family::A, 1);
    const Derivation g = a1_generator();
    const Derivation image = weyl_act(a1, 1, g);
    // s1 sends x1 (x1 - z) d/dx1 to -x1 (x1 + z) d/dx1.
    Polynomial expect(2);
    expect.add_term({2, 0}, -1);
    expect.add_term({1, 1}, -1);
    CHECK(image.coefficients[0] == expect);
    CHECK(weyl_act(a1, 1, image) == g);

    const RootSystem a2(Family::A, 2);
    Polynomial mixed(3);
    mixed.add_term({2, 1, 0}, 1);
    mixed.add_term({0, 1, 2}, Rational(-3, 2));
    const Derivation probe = make_derivation({mixed, Polynomial(3), mixed * Rational(2)}, 3);
    for (int i = 1; i <= 2; ++i) {
        CHECK(weyl_act(a2, i, euler_derivation(3)) == euler_derivation(3));
        CHECK(weyl_act(a2, i, weyl_act(a2, i, probe)) == probe);
    }

    // The Catalan cone is stable: the action preserves membership.
    const CentralArrangement cat = cone(catalan_arrangement(a2, 1));
    for (const auto& member : graded_derivations(cat, 4, true).members)
        for (int i = 1; i <= 2; ++i) CHECK(in_module_d0(weyl_act(a2, i, member), cat));
}

TEST_CASE("decide_freeness on the A2 shi cone and its edits") {
    const RootSystem a2(Family::A, 2);
    const CentralArrangement shi_cone = cone(shi_arrangement(a2, 1));

    const FreenessVerdict free_verdict = decide_freeness(shi_cone, {1, 3, 3});
    CHECK(free_verdict.status == Freeness::Free);
    CHECK(free_verdict.exponents == std::vector<int>{1, 3, 3});

    const FreenessVerdict added = decide_freeness(b_gamma(a2, 1, {1}, '+'), {1, 3, 4});
    CHECK(added.status == Freeness::Free);

    const CentralArrangement bad = shi_cone.adding(cone_form(std::vector<int>{1, 1}, -1, 3));
    const FreenessVerdict not_free = decide_freeness(bad, {1, 3, 4});
    CHECK(not_free.status == Freeness::NotFree);
    REQUIRE(not_free.certificate_degree.has_value());
    // The certificate is reproducible.
    CHECK(graded_dimension(bad, *not_free.certificate_degree) == *not_free.computed_dimension);
    // The verdict does not depend on which admissible multiset was offered.
    CHECK(decide_freeness(bad, {2, 3, 3}).status == Freeness::NotFree);
    CHECK(decide_freeness(bad, {1, 1, 6}).status == Freeness::NotFree);

    CHECK_THROWS_AS(decide_freeness(shi_cone, {1, 3, 4}), std::invalid_argument);
}

TEST_CASE("decide_freeness returns Unknown when nothing can be certified") {
    // The Boolean arrangement is free with exponents (1,1); probing it with
    // (0,2) can neither pass Saito nor eliminate (1,1) from the dimension
    // scan, so the verdict stays Unknown.
    CentralArrangement boolean2;
    boolean2.arity = 2;
    LinearForm fx, fy;
    fx.coefficients = {Rational(1), Rational(0)};
    fy.coefficients = {Rational(0), Rational(1)};
    boolean2.forms = {fx, fy};
    const FreenessVerdict v = decide_freeness(boolean2, {0, 2});
    CHECK(v.status == Freeness::Unknown);
    CHECK(!v.certificate_degree.has_value());
}

TEST_CASE("decide_freeness on base multiarrangements") {
    const RootSystem a2(Family::A, 2);
    const FreenessVerdict v = decide_freeness(root_multiarrangement(a2, {2, 2, 2}), {3, 3});
    CHECK(v.status == Freeness::Free);
    const FreenessVerdict plus = decide_freeness(root_multiarrangement_gamma(a2, 2, +1, {1}), {3, 4});
    CHECK(plus.status == Freeness::Free);
}

TEST_CASE("ziegler restriction is a bijection at the top degree for A2") {
    const RootSystem a2(Family::A, 2);
    const CentralArrangement shi_cone = cone(shi_arrangement(a2, 1));
    const GradedBasis top = graded_derivations(shi_cone, 3, true);
    REQUIRE(top.dimension() == 2);
    const MultiArrangement multi = root_multiarrangement(a2, {2, 2, 2});
    CHECK(graded_dimension(multi, 3) == 2);
    std::vector<std::vector<Rational>> images;
    for (const auto& m : top.members) images.push_back(flatten(ziegler_restrict(m), 3));
    CHECK(rank_of(images) == 2);
}
