#include <doctest.h>

#include <random>

#include "rigidsep/constructions.hpp"
#include "rigidsep/json_io.hpp"
#include "support/family_gen.hpp"

using namespace rigidsep;
using nlohmann::json;

TEST_CASE("linear families use 1-based one-line notation on the wire") {
    json j = family_to_json(separating_family_6());
    CHECK(j["m"] == 6);
    CHECK(j["kind"] == "linear");
    CHECK(j["members"].size() == 5);
    CHECK(j["members"][0] == json::array({1, 2, 3, 4, 5, 6}));
    CHECK(j["members"][1] == json::array({1, 3, 6, 5, 4, 2}));
}

TEST_CASE("round trips") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 1 + static_cast<int>(rng() % 6);
        int n = static_cast<int>(rng() % 4);
        for (auto fam : {rigidsep::testing::random_linear_family(rng, m, n),
                         rigidsep::testing::random_tournament_family(rng, m, n),
                         rigidsep::testing::random_relation_family(rng, m, n)}) {
            CHECK(family_from_json(family_to_json(fam)) == fam);
        }
    }
    auto empty = Family::of_orders(0, {});
    CHECK(family_from_json(family_to_json(empty)) == empty);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(family_from_json(json::parse(R"({"kind":"linear","members":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_from_json(json::parse(R"({"m":2,"kind":"poset","members":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_from_json(json::parse(R"({"m":2,"kind":"linear","members":[[1,1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_from_json(json::parse(R"({"m":2,"kind":"linear","members":[[1]]})")),
                    std::invalid_argument);
    // tournament matrix must orient each pair exactly once
    CHECK_THROWS_AS(
        family_from_json(json::parse(R"({"m":2,"kind":"tournament","members":[[[0,1],[1,0]]]})")),
        std::invalid_argument);
    // reflexive diagonal must be uniform
    CHECK_THROWS_AS(
        family_from_json(json::parse(R"({"m":2,"kind":"relation","members":[[[1,0],[0,0]]]})")),
        std::invalid_argument);
    // matrix cells are 0/1
    CHECK_THROWS_AS(
        family_from_json(json::parse(R"({"m":2,"kind":"tournament","members":[[[0,2],[0,0]]]})")),
        std::invalid_argument);
}

TEST_CASE("file round trip") {
    auto fam = cyclic_family(4);
    const std::string path = "test_family_roundtrip.json";
    save_family(fam, path);
    CHECK(load_family(path) == fam);
    std::remove(path.c_str());
}
