#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "setmatch/small_family.hpp"

using namespace setmatch;

TEST_CASE("word round trip") {
    const Family f(3, {{}, {1, 3}, {2}});
    CHECK(to_word(f) == ((1ULL << 0) | (1ULL << 5) | (1ULL << 2)));
    CHECK(from_word(3, to_word(f)) == f);
    CHECK(word_size(to_word(f)) == 3);
    CHECK(universe_word(0) == 1);
    CHECK(universe_word(3) == 0xFFULL);
    CHECK(universe_word(6) == ~0ULL);
}

TEST_CASE("word closures agree with the family versions") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng() % 7);
        const Family f = brute::random_family(n, rng);
        const FamilyWord w = to_word(f);
        CHECK(from_word(n, down_closure_word(n, w)) == down_closure(f));
        CHECK(from_word(n, up_closure_word(n, w)) == up_closure(f));
        CHECK(from_word(n, complement_word(n, w)) == complement_family(f));
        CHECK(is_down_word(n, w) == is_down_set(f));
    }
}

TEST_CASE("partner table matches the cross predicate") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t <= 2; ++t) {
            for (int s = 0; s <= 2; ++s) {
                const PartnerTable table(n, t, s);
                for (int trial = 0; trial < 40; ++trial) {
                    const Family f = brute::random_family(n, rng);
                    const Family g = brute::random_family(n, rng);
                    const bool expected = is_cross_ts(f, g, t, s);
                    CHECK(table.cross(to_word(f), to_word(g)) == expected);
                    CHECK(table.self(to_word(f)) == is_ts_family(f, t, s));
                }
                CHECK(table.common_partners(0) == universe_word(n));
            }
        }
    }
}
