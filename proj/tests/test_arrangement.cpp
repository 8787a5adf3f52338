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

#include "srbkit/arrangement.hpp"

using namespace srbkit;

namespace {

LinearForm form2(int a, int b) {
    LinearForm f;
    f.coefficients = {Rational(a), Rational(b)};
    return f.normalized();
}

}  // namespace

TEST_CASE("shi and catalan hyperplane sets") {
    const RootSystem a2(Family::A, 2);
    CHECK(shi_arrangement(a2, 1).size() == 6);
    CHECK(catalan_arrangement(a2, 1).size() == 9);
    CHECK(catalan_arrangement(a2, 0).size() == 3);

    const RootSystem b2(Family::B, 2);
    CHECK(shi_arrangement(b2, 2).size() == 16);

    const RootSystem a1(Family::A, 1);
    const auto shi = shi_arrangement(a1, 1);
    REQUIRE(shi.size() == 2);
    CHECK(shi.hyperplanes[0] == std::make_pair(std::vector<int>{1}, 0));
    CHECK(shi.hyperplanes[1] == std::make_pair(std::vector<int>{1}, 1));
    const auto cat = catalan_arrangement(a1, 1);
    REQUIRE(cat.size() == 3);
    CHECK(cat.hyperplanes[0].second == -1);

    CHECK_THROWS_AS(shi_arrangement(a2, 0), std::invalid_argument);
    CHECK_THROWS_AS(catalan_arrangement(a2, -1), std::invalid_argument);
}

TEST_CASE("cone forms") {
    const RootSystem a1(Family::A, 1);
    const CentralArrangement c = cone(shi_arrangement(a1, 1));
    REQUIRE(c.size() == 3);
    CHECK(c.forms[0] == form2(1, 0));   // x1
    CHECK(c.forms[1] == form2(1, -1));  // x1 - z
    CHECK(c.forms[2] == form2(0, 1));   // z

    const RootSystem a2(Family::A, 2);
    CHECK(cone(shi_arrangement(a2, 1)).size() == 7);
    const CentralArrangement cat = cone(catalan_arrangement(a1, 1));
    REQUIRE(cat.size() == 4);
    CHECK(cat.forms[0] == form2(1, 1));  // x1 + z

    // Forms are normalized and pairwise non-proportional.
    for (const auto& f : cat.forms) CHECK(f == f.normalized());
    for (int i = 0; i < cat.size(); ++i)
        for (int j = i + 1; j < cat.size(); ++j) CHECK(!cat.forms[i].proportional_to(cat.forms[j]));
}

TEST_CASE("added and deleted cones") {
    const RootSystem a2(Family::A, 2);
    CHECK(b_gamma(a2, 1, {1, 2}, '+').size() == 9);
    CHECK(b_gamma(a2, 1, {1}, '-').size() == 6);
    CHECK(b_gamma(a2, 1, {}, '+').size() == 7);
    CHECK(b_gamma(a2, 1, {}, '-').size() == 7);
    CHECK_THROWS_AS(b_gamma(a2, 1, {3}, '+'), std::invalid_argument);
    CHECK_THROWS_AS(b_gamma(a2, 1, {1}, 'x'), std::invalid_argument);

    // Set relations: added strictly contains the cone, deleted is strictly
    // contained, and the deleted forms are exactly the level-k ones.
    const CentralArrangement base = cone(shi_arrangement(a2, 1));
    const CentralArrangement plus = b_gamma(a2, 1, {1}, '+');
    const CentralArrangement minus = b_gamma(a2, 1, {1}, '-');
    for (const auto& f : base.forms) CHECK(plus.contains(f));
    CHECK(plus.size() == base.size() + 1);
    for (const auto& f : minus.forms) CHECK(base.contains(f));
    std::vector<LinearForm> removed;
    for (const auto& f : base.forms)
        if (!minus.contains(f)) removed.push_back(f);
    REQUIRE(removed.size() == 1);
    CHECK(removed[0] == cone_form(std::vector<int>{1, 0}, 1, 3));
}

TEST_CASE("ziegler multiplicities") {
    const RootSystem a2(Family::A, 2);
    const MultiArrangement shi_mult = ziegler_multiplicity(cone(shi_arrangement(a2, 1)));
    REQUIRE(shi_mult.size() == 3);
    for (const auto& [f, m] : shi_mult.entries) CHECK(m == 2);
    CHECK(shi_mult.total_multiplicity() == 2 * 1 * 3);

    const MultiArrangement plus = ziegler_multiplicity(b_gamma(a2, 1, {1}, '+'));
    const MultiArrangement minus = ziegler_multiplicity(b_gamma(a2, 1, {1}, '-'));
    auto mult_of = [](const MultiArrangement& ma, const LinearForm& f) {
        for (const auto& [g, m] : ma.entries)
            if (g == f) return m;
        return -1;
    };
    CHECK(mult_of(plus, form2(1, 0)) == 3);
    CHECK(mult_of(plus, form2(0, 1)) == 2);
    CHECK(mult_of(plus, form2(1, 1)) == 2);
    CHECK(mult_of(minus, form2(1, 0)) == 1);
    CHECK(mult_of(minus, form2(0, 1)) == 2);

    // Matches the direct construction on the base.
    CHECK(plus.entries == root_multiarrangement_gamma(a2, 2, +1, {1}).entries);
    CHECK(minus.entries == root_multiarrangement_gamma(a2, 2, -1, {1}).entries);

    CentralArrangement no_z;
    no_z.arity = 3;
    no_z.forms = {cone_form(std::vector<int>{1, 0}, 0, 3)};
    CHECK_THROWS_AS(ziegler_multiplicity(no_z), std::invalid_argument);
}

TEST_CASE("multiarrangement construction guards") {
    const RootSystem a2(Family::A, 2);
    CHECK_THROWS_AS(root_multiarrangement(a2, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(root_multiarrangement(a2, {1, 2, -1}), std::invalid_argument);
    const MultiArrangement m = root_multiarrangement(a2, {1, 0, 2});
    CHECK(m.size() == 2);  // zero-multiplicity hyperplanes drop out
    CHECK(m.total_multiplicity() == 3);
}
