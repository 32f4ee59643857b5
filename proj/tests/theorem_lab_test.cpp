#include <doctest.h>

#include "setmatch/error.hpp"
#include "setmatch/theorem_lab.hpp"

using namespace setmatch;

TEST_CASE("status strings") {
    CHECK(to_string(Status::verified) == "verified");
    CHECK(to_string(Status::counterexample) == "counterexample");
    CHECK(to_string(Status::conjecture_consistent) == "conjecture-consistent");
}

TEST_CASE("absorb keeps the first counterexample") {
    CheckReport parent{.claim_id = "p"};
    CheckReport soft{.claim_id = "c", .instance_count = 2};
    soft.status = Status::conjecture_consistent;
    parent.absorb(soft);
    CHECK(parent.status == Status::conjecture_consistent);
    CHECK(parent.instance_count == 2);
    CheckReport bad{.claim_id = "b", .instance_count = 1};
    bad.fail("first", {Family(1)});
    bad.fail("second", {});
    CHECK(bad.witness->note == "first");
    parent.absorb(bad);
    CHECK(parent.status == Status::counterexample);
    CHECK_FALSE(parent.passed());
    CHECK(parent.parts.size() == 2);
}

TEST_CASE("ekr and iu bounds") {
    for (int n = 1; n <= 4; ++n) {
        const CheckReport r = check_ekr(n);
        CHECK(r.status == Status::verified);
        CHECK(r.achieved == (std::int64_t{1} << (n - 1)));
    }
    for (int n = 2; n <= 4; ++n) {
        const CheckReport r = check_iu_bounds(n);
        CHECK(r.status == Status::verified);
        CHECK(r.achieved == (std::int64_t{1} << (n - 2)));
    }
    const CheckReport three = check_iu_bounds(3);
    const auto& product = three.parts.at(1);
    CHECK(product.achieved == 4);
    REQUIRE(product.witness.has_value());
    CHECK(product.witness->ratios->chain_holds());
    CHECK_THROWS_AS(check_ekr(9), Error);
}

TEST_CASE("ratio traces") {
    const Family a(3, {{1}, {1, 2}});
    const RatioTrace t = RatioTrace::of(a, a);
    CHECK(t.alpha == Ratio{2, 8});
    CHECK(t.correlation_holds());
    CHECK(t.chain_holds());
}

TEST_CASE("small theorem checks") {
    CHECK(check_harris_kleitman(3).status == Status::verified);
    CHECK(check_crossiu_sum(3).status == Status::verified);
    CHECK(check_chvatal_all(3, ChvatalMode::full).status == Status::verified);
    CHECK(check_chvatal_all(3, ChvatalMode::tau2).status == Status::verified);
    CHECK(check_self_matching_theorem(4).status == Status::verified);
    CHECK(check_two_family_matching(3).status == Status::verified);
    CHECK(check_ratio_lemma().status == Status::verified);
}

TEST_CASE("chvatal on a single down-set") {
    const Family d = down_closure(Family(3, {{1, 2}, {2, 3}, {1, 3}}));
    const CheckReport r = check_chvatal(d, ChvatalMode::full);
    CHECK(r.status == Status::verified);
    CHECK(r.bound == 3);
    CHECK(r.achieved == 3);
}

TEST_CASE("hilton sum") {
    const Family iu(3, {{1}, {1, 2}});
    const CheckReport r = check_hilton_sum({iu, iu, iu});
    CHECK(r.status == Status::verified);
    CHECK(r.achieved == 6);
    CHECK(r.bound == 8);
    CHECK_THROWS_AS(check_hilton_sum({Family(2, {{1}}), Family(2, {{2}})}), Error);
    CHECK(check_hilton_equality(3).status == Status::verified);
    CHECK(check_hilton_equality(4).status == Status::verified);
    const CheckReport cube = check_hilton_sum({Family::power_set(4), Family(4)});
    CHECK(cube.status == Status::verified);
    CHECK(cube.achieved == 16);
    CHECK(scan_hilton(3, {2, 3}, 200, 0).status == Status::verified);
}

TEST_CASE("scans are reproducible") {
    const CheckReport a = check_crossiu_sum(4, 300, 5);
    const CheckReport b = check_crossiu_sum(4, 300, 5);
    CHECK(a.status == Status::verified);
    CHECK(a.instance_count == b.instance_count);
    CHECK(a.achieved == b.achieved);
    CHECK(a.seed == std::optional<std::uint64_t>{5});
}

TEST_CASE("ts conjectures stay conjectures") {
    const CheckReport r = scan_ts_conjectures(4);
    CHECK(r.status == Status::conjecture_consistent);
    CHECK(r.passed());
    REQUIRE(r.parts.size() == 4);
    CHECK(r.parts[0].status == Status::verified);
    CHECK(r.parts[1].status == Status::verified);
    CHECK(r.parts[2].status == Status::conjecture_consistent);
    CHECK(r.parts[3].status == Status::conjecture_consistent);
}

TEST_CASE("dispatch") {
    CHECK(claim_ids().size() == 9);
    CHECK(run_check("ekr", {.n = 3}).claim_id == "ekr");
    CHECK_THROWS_WITH_AS(run_check("nope", {}), "unknown claim id 'nope'", Error);
}
