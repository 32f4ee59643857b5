#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "setmatch/error.hpp"
#include "setmatch/family.hpp"

using namespace setmatch;

TEST_CASE("down_closure examples") {
    CHECK(down_closure(Family(2, {{}})) == Family(2, {{}}));
    CHECK(down_closure(Family(3, {{1, 2}})) == Family(3, {{}, {1}, {2}, {1, 2}}));
    const Family two_edges = down_closure(Family(3, {{1, 2}, {2, 3}}));
    CHECK(two_edges == Family(3, {{}, {1}, {2}, {3}, {1, 2}, {2, 3}}));
    CHECK(two_edges.size() == 6);
}

TEST_CASE("up_closure examples") {
    CHECK(up_closure(Family(2, {{1, 2}})) == Family(2, {{1, 2}}));
    CHECK(up_closure(Family(2, {{}})) == Family::power_set(2));
    const Family up = up_closure(Family(3, {{1}, {2}}));
    CHECK(up == Family(3, {{1}, {2}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}));
    CHECK(up.size() == 6);
}

TEST_CASE("complement_family examples") {
    CHECK(complement_family(Family(2, {{}})) == Family(2, {{1, 2}}));
    CHECK(complement_family(Family::power_set(2)) == Family::power_set(2));
    CHECK(complement_family(Family::star(3, 1)) == Family(3, {{}, {2}, {3}, {2, 3}}));
}

TEST_CASE("predicates") {
    CHECK_FALSE(is_intersecting(Family(2, {{1}, {2}})));
    const Family star = Family::star(3, 1);
    CHECK(is_intersecting(star));
    CHECK(star.size() == 4);
    CHECK(is_iu(Family(4, {{1}, {1, 3}})));
    CHECK(is_down_set(Family(3, {{}, {1}})));
    CHECK_FALSE(is_down_set(Family(3, {{1}})));
    CHECK(is_up_set(star));
    CHECK(is_t_intersecting(Family(3, {{1, 2}, {1, 2, 3}}), 2));
    CHECK_FALSE(is_s_union(Family(3, {{1, 2}, {3}}), 1));
    CHECK(is_ts_family(Family(4, {{1, 2}}), 2, 2));
    CHECK_FALSE(is_ts_family(Family(4, {{1, 2}}), 2, 3));

    SUBCASE("empty family is vacuously everything") {
        const Family none(3);
        CHECK(is_intersecting(none));
        CHECK(is_union(none));
        CHECK(is_iu(none));
        CHECK(is_ts_family(none, 3, 3));
    }
    SUBCASE("a member is paired with itself") {
        CHECK_FALSE(is_intersecting(Family(2, {{}})));
        CHECK_FALSE(is_union(Family(2, {{1, 2}})));
    }
}

TEST_CASE("cross predicates") {
    CHECK_FALSE(is_cross_intersecting(Family(2, {{1}}), Family(2, {{2}})));
    const Family any = Family(3, {{1}, {2, 3}});
    CHECK(is_cross_intersecting(Family(3), any));
    CHECK(is_cross_union(Family(3), any));
    CHECK(is_cross_iu(Family(3), any));
    CHECK(is_cross_ts(Family(3), any, 2, 2));
    CHECK(is_cross_iu(Family(4, {{1}, {1, 2}}), Family(4, {{1, 3}})));
    CHECK_THROWS_AS(is_cross_intersecting(Family(2), Family(3)), Error);
}

TEST_CASE("covering number") {
    CHECK(covering_number(Family::star(3, 1)) == 1);
    CHECK(covering_number(Family(3, {{1, 2}, {2, 3}, {1, 3}})) == 2);
    CHECK(covering_number(Family(3)) == 0);
    CHECK_THROWS_WITH_AS(covering_number(Family(2, {{}})), "covering number undefined: empty set member", Error);
    CHECK(covering_number(Family(4, {{1}, {2}, {3}, {4}})) == 4);
}

TEST_CASE("max degree") {
    CHECK(max_degree(Family::power_set(3)) == 4);
    CHECK(max_degree(down_closure(Family(3, {{1, 2}, {2, 3}}))) == 3);
    CHECK(max_degree(Family(3, {{}})) == 0);
    CHECK(max_degree(Family(0)) == 0);
}

TEST_CASE("link and deletion") {
    auto [link, del] = link_and_deletion(Family::power_set(2), 1);
    CHECK(link == Family(2, {{}, {2}}));
    CHECK(del == Family(2, {{}, {2}}));

    auto [l2, d2] = link_and_deletion(Family(2, {{1}}), 1);
    CHECK(l2 == Family(2, {{}}));
    CHECK(d2.empty());

    auto [l3, d3] = link_and_deletion(down_closure(Family(3, {{1, 2}, {3}})), 3);
    CHECK(l3 == Family(3, {{}}));
    CHECK(d3 == Family(3, {{}, {1}, {2}, {1, 2}}));

    CHECK_THROWS_AS(link_and_deletion(Family(2), 3), Error);
    CHECK_THROWS_AS(link_and_deletion(Family(2), 0), Error);
}

TEST_CASE("family construction") {
    CHECK(Family(3, std::vector<SetMask>{3, 1, 3}).size() == 2);
    CHECK_THROWS_AS(Family(2, std::vector<SetMask>{4}), Error);
    CHECK_THROWS_AS(Family(26), Error);
    CHECK(format_set(make_set({1, 3})) == "{1,3}");
    CHECK(format_set(0) == "{}");
    const Family big(22, std::vector<SetMask>{0, (1U << 21) | 1U});
    CHECK(big.contains((1U << 21) | 1U));
    CHECK_FALSE(big.contains(1));
}

TEST_CASE("sparse families above the dense threshold close correctly") {
    const Family f(22, std::vector<SetMask>{(1U << 21) | (1U << 3) | 1U});
    const Family down = down_closure(f);
    CHECK(down.size() == 8);
    CHECK(is_down_set(down));
    CHECK(up_closure(Family(22, std::vector<SetMask>{full_mask(22) & ~1U})).size() == 2);
}

TEST_CASE("closure and complement properties on random families") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Family f = brute::random_family(n, rng);
        const Family g = brute::random_family(n, rng);
        const Family down = down_closure(f);
        const Family up = up_closure(f);
        CHECK(down == brute::down_closure(f));
        CHECK(up == brute::up_closure(f));
        CHECK(down_closure(down) == down);
        CHECK(up_closure(up) == up);
        CHECK(f.subset_of(down));
        CHECK(f.subset_of(up));
        CHECK(is_down_set(down));
        CHECK(is_up_set(up));
        CHECK(complement_family(complement_family(f)) == f);
        CHECK(is_union(f) == is_intersecting(complement_family(f)));
        CHECK(is_iu(f) == (is_t_intersecting(f, 1) && is_s_union(f, 1)));
        CHECK(is_cross_iu(f, g) == is_cross_iu(g, f));
        CHECK(is_cross_intersecting(f, f) == is_intersecting(f));
        CHECK(is_cross_iu(f, f) == is_iu(f));
        const Family fg = family_union(f, g);
        CHECK(down_closure(f).subset_of(down_closure(fg)));
        const int element = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        auto [link, del] = link_and_deletion(down, element);
        CHECK(link.size() + del.size() == down.size());
        CHECK(is_down_set(link));
        CHECK(is_down_set(del));
        CHECK(link.subset_of(del));
    }
}

TEST_CASE("intersecting families never exceed half the cube") {
    for (int n = 1; n <= 4; ++n) {
        const auto best = brute::max_subfamily(Family::power_set(n),
                                               [](SetMask a, SetMask b) { return (a & b) != 0; });
        CHECK(best == (std::size_t{1} << (n - 1)));
    }
}

TEST_CASE("up-set and down-set correlation at n <= 3") {
    for (int n = 0; n <= 3; ++n) {
        const auto downs = brute::all_down_sets(n);
        for (const auto& b : downs) {
            for (const auto& d : downs) {
                const Family a = complement_family(d);
                CHECK(is_up_set(a));
                CHECK((family_intersection(a, b).size() << n) <= a.size() * b.size());
            }
        }
    }
}
