#include <doctest.h>

#include <json.hpp>
#include <random>

#include "brute.hpp"
#include "setmatch/error.hpp"
#include "setmatch/io.hpp"

using namespace setmatch;

TEST_CASE("text family format") {
    const Family f = parse_family_text("# a comment\nn=3\n-\n1,3\n\n 2 \n");
    CHECK(f == Family(3, {{}, {1, 3}, {2}}));
    CHECK(family_to_text(f) == "n=3\n-\n2\n1,3\n");
    CHECK(parse_family_text(family_to_text(f)) == f);
    CHECK(parse_family_text("n=2\n") == Family(2));
}

TEST_CASE("json family format") {
    const Family f = parse_family_json(R"({"n":3,"sets":[[1,2],[3],[]]})");
    CHECK(f == Family(3, {{1, 2}, {3}, {}}));
    CHECK(family_to_json(f) == R"({"n":3,"sets":[[],[1,2],[3]]})");
    CHECK(parse_family(family_to_json(f)) == f);
    CHECK(parse_family("  " + family_to_json(f)) == f);
    CHECK(parse_family(family_to_text(f)) == f);
}

TEST_CASE("parse errors name the token") {
    CHECK_THROWS_WITH_AS(parse_family_text("n=3\n1,x\n"), "malformed element 'x'", Error);
    CHECK_THROWS_WITH_AS(parse_family_text("n=3\n4\n"), "element '4' outside [1,3]", Error);
    CHECK_THROWS_WITH_AS(parse_family_text("3\n"), "expected header 'n=<k>', got '3'", Error);
    CHECK_THROWS_WITH_AS(parse_family_text(""), "missing header 'n=<k>'", Error);
    CHECK_THROWS_WITH_AS(parse_family_text("n=40\n"), "ground size n=40 out of range", Error);
    CHECK_THROWS_WITH_AS(parse_family_json(R"({"sets":[]})"), "missing field 'n'", Error);
    CHECK_THROWS_WITH_AS(parse_family_json(R"({"n":2,"sets":[[1,"a"]]})"), "element '\"a\"' is not an integer",
                         Error);
    CHECK_THROWS_WITH_AS(parse_family_json(R"({"n":2,"sets":[[0]]})"), "element '0' outside [1,2]", Error);
    CHECK_THROWS_AS(parse_family_json("{"), Error);
    CHECK_THROWS_AS(parse_weight_fn(R"({"n":1,"values":[1]})"), Error);
    CHECK_THROWS_WITH_AS(parse_weight_fn(R"({"n":1,"values":[1,-2]})"), "weight '-2' is not a natural number",
                         Error);
}

TEST_CASE("weight functions") {
    const WeightFn w = parse_weight_fn(R"({"n":2,"values":[3,1,2,0]})");
    CHECK(w.total() == 6);
    CHECK(w(2) == 2);
    CHECK(parse_weight_fn(weight_fn_to_json(w)) == w);
    const WeightFn chi = parse_weight_fn("n=2\n-\n1\n");
    CHECK(chi == WeightFn(2, {1, 1, 0, 0}));
}

TEST_CASE("matching round trips") {
    WeightedMatching p(2);
    p.add(0, 3, 2);
    p.add(1, 2, 1);
    const std::string text = weighted_matching_to_json(p);
    CHECK(matching_kind(text) == "weighted");
    CHECK(parse_weighted_matching(text) == p);
    CHECK(nlohmann::json::parse(text).at("schema") == std::string(kSchemaVersion));

    const PairMatching m{3, {{0, 7}, {1, 2}}};
    CHECK(matching_kind(pair_matching_to_json(m)) == "self");
    CHECK(parse_pair_matching(pair_matching_to_json(m)) == m);

    Injection phi{2, {{0, 3}, {1, 2}}};
    CHECK(matching_kind(injection_to_json(phi)) == "injection");
    CHECK(parse_injection(injection_to_json(phi)) == phi);
    CHECK_THROWS_WITH_AS(parse_injection(R"({"kind":"injection","n":2,"pairs":[[1,2],[1,0]]})"),
                         "source {1} mapped twice", Error);
    CHECK_THROWS_AS(matching_kind(R"({"n":2})"), Error);
}

TEST_CASE("random families survive both formats") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Family f = brute::random_family(static_cast<int>(rng() % 6), rng);
        CHECK(parse_family_text(family_to_text(f)) == f);
        CHECK(parse_family_json(family_to_json(f)) == f);
    }
}

TEST_CASE("m-table output") {
    MTable t;
    t.add({2, 1, 0, 2});
    t.add({3, 1, 1, 2});
    CHECK(m_table_to_tsv(t) == "n\tt\ts\tvalue\n2\t1\t0\t2\n3\t1\t1\t2\n");
    const auto j = nlohmann::json::parse(m_table_to_json(t));
    CHECK(j.dump().find("\"value\":2") != std::string::npos);
}
