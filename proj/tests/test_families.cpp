#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "oracles.hpp"
#include "stree/family.hpp"

using namespace stree;

static Family sn_family(const Universe& u, int n) {
    return Family::explicit_family(u, enum_strong_subtrees(u, n).members);
}

TEST_CASE("derived families") {
    Universe u = Universe::full(2, 3);

    auto tuples = derive(sn_family(u, 2), T(u, {"e"}));
    CHECK(tuples.size() == 5);
    for (const auto& t : tuples) REQUIRE(t.size() == 2);

    Family s2 = sn_family(u, 2);
    for (const auto& y : s2.members()) CHECK(derive(s2, y).empty());

    CHECK(derive(sn_family(u, 1), T(u, {"e"})).empty());
}

TEST_CASE("derive/graft duality") {
    Universe u = Universe::full(2, 4);
    for (int n = 2; n <= 3; ++n) {
        Family g = sn_family(u, n);
        for (int k = 1; k < n; ++k) {
            for (const auto& y : enum_strong_subtrees(u, k).members) {
                for (const auto& parts : derive(g, y)) {
                    StrongSubtree back = graft(u, y, parts);
                    CHECK(g.contains(back));
                }
            }
        }
    }
}

TEST_CASE("projections") {
    Universe u = Universe::full(2, 3);
    auto tuples = derive(sn_family(u, 2), T(u, {"e"}));
    auto p0 = project(tuples, 0);
    for (const auto& x : p0) CHECK(is_ancestor(N("0"), x.root()));
}

TEST_CASE("Nash-Williams check") {
    Universe u4 = Universe::full(2, 4);
    CHECK(is_nash_williams(sn_family(u4, 2)));

    Universe u3 = Universe::full(2, 3);
    auto mixed = enum_strong_subtrees(u3, 1).members;
    auto s2 = enum_strong_subtrees(u3, 2).members;
    mixed.insert(mixed.end(), s2.begin(), s2.end());
    CHECK_FALSE(is_nash_williams(Family::explicit_family(u3, mixed)));

    CHECK(is_nash_williams(
        Family::explicit_family(u3, {StrongSubtree::empty_tree(2)})));
}

TEST_CASE("finite uniformity rank") {
    Universe u = Universe::full(2, 4);
    CHECK(uniform_rank(Family::explicit_family(u, {StrongSubtree::empty_tree(2)})) == 0);
    CHECK(uniform_rank(sn_family(u, 2)) == 2);

    auto mixed = enum_strong_subtrees(u, 1).members;
    auto s2 = enum_strong_subtrees(u, 2).members;
    mixed.insert(mixed.end(), s2.begin(), s2.end());
    CHECK_FALSE(uniform_rank(Family::explicit_family(u, mixed)).has_value());

    // a proper subfamily of S_2 is not uniform
    auto some = enum_strong_subtrees(u, 2).members;
    some.pop_back();
    CHECK_FALSE(uniform_rank(Family::explicit_family(u, some)).has_value());
}

TEST_CASE("uniform families are Nash-Williams and survive restriction (finite shadow)") {
    for (int m = 3; m <= 4; ++m) {
        Universe u = Universe::full(2, m);
        for (int n = 1; n <= 3 && n <= m; ++n) {
            Family g = sn_family(u, n);
            CHECK(is_nash_williams(g));
            CHECK(uniform_rank(g) == n);
            for (int h = n; h <= m; ++h)
                for (const auto& t : enum_strong_subtrees(u, h).members) {
                    Family r = restrict(g, t);
                    CHECK(uniform_rank(r) == n);
                    CHECK(is_nash_williams(r));
                }
        }
    }
}

TEST_CASE("membership predicate: height equals root height") {
    Universe u = Universe::full(2, 3);
    CHECK(omega_family_member(u, T(u, {"e"})));
    CHECK_FALSE(omega_family_member(u, T(u, {"e", "0", "1"})));
    CHECK(omega_family_member(u, T(u, {"0", "00", "01"})));

    Family f = Family::predicate_family(u, "omega_root_height");
    CHECK(f.contains(T(u, {"0", "00", "01"})));
    CHECK_FALSE(f.contains(T(u, {"0"})));
    for (const auto& x : f.members()) CHECK(omega_family_member(u, x));

    // restriction keeps the verdicts on common elements
    StrongSubtree t = T(u, {"e", "0", "1", "00", "01", "10", "11"});
    Family rf = restrict(f, t);
    CHECK(rf.predicate_id() == "omega_root_height");
}

TEST_CASE("restriction of the empty family") {
    Universe u = Universe::full(2, 3);
    Family empty = Family::explicit_family(u, {});
    Family r = restrict(empty, T(u, {"e", "0", "1"}));
    CHECK(r.members().empty());
}

TEST_CASE("partition witnesses") {
    Universe u = Universe::full(2, 4);
    Family s1 = sn_family(u, 1);

    SUBCASE("constant partition: first height-k subtree") {
        Coloring c = builtin_coloring("constant", u, s1.members(), 0);
        auto w = ramsey_witness(s1, c, 2);
        REQUIRE(w.has_value());
        CHECK(w->T == enum_strong_subtrees(u, 2).members.front());
        CHECK(w->candidates_examined == 1);
    }
    SUBCASE("level parity: witness on parity-pure levels") {
        Coloring c;
        for (const auto& x : s1.members())
            c.set(x, x.levels().front() % 2 == 0 ? "even" : "odd");
        auto w = ramsey_witness(s1, c, 2);
        REQUIRE(w.has_value());
        CHECK(w->T.levels() == std::vector<int>{0, 2});
        CHECK(w->colors_present.size() <= 1);
        // re-verify independently
        std::set<std::string> seen;
        for (const auto& x : s1.members())
            if (w->T.contains(x.root())) seen.insert(c.at(x));
        CHECK(seen.size() == 1);
    }
    SUBCASE("injective coloring on a cramped universe: no witness") {
        Universe tiny = Universe::full(2, 2);
        Family tiny_s1 = sn_family(tiny, 1);
        Coloring c = builtin_coloring("injective", tiny, tiny_s1.members(), 0);
        CHECK_FALSE(ramsey_witness(tiny_s1, c, 2).has_value());
    }
}
