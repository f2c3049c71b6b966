#include <doctest.h>

#include <random>

#include "rigidsep/relations.hpp"
#include "support/family_gen.hpp"

using namespace rigidsep;

TEST_CASE("linear order basics") {
    LinearOrder ord({2, 0, 1});
    CHECK(ord.size() == 3);
    CHECK(ord.at(0) == 2);
    CHECK(ord.rank(2) == 0);
    CHECK(ord.leq(2, 0));
    CHECK(ord.leq(0, 1));
    CHECK(!ord.leq(1, 0));
    CHECK(ord.leq(1, 1));  // reflexive

    CHECK(LinearOrder::natural(4).perm() == std::vector<int>{0, 1, 2, 3});
    CHECK(ord.reversed().perm() == std::vector<int>{1, 0, 2});

    CHECK_THROWS_AS(LinearOrder({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LinearOrder({0, 3}), std::invalid_argument);
}

TEST_CASE("linear order relabeling") {
    LinearOrder ord({2, 0, 1});
    LinearOrder relabeled = ord.relabeled({1, 2, 0});  // x -> pi[x]
    CHECK(relabeled.perm() == std::vector<int>{0, 1, 2});
}

TEST_CASE("tournament from order and transpose") {
    auto t = Tournament::from_order(LinearOrder({1, 2, 0}));
    CHECK(t.arc(1, 2));
    CHECK(t.arc(1, 0));
    CHECK(t.arc(2, 0));
    CHECK(!t.arc(0, 2));
    CHECK_THROWS_AS(t.arc(1, 1), std::invalid_argument);

    auto tt = t.transposed();
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x != y) CHECK(tt.arc(x, y) == t.arc(y, x));
    CHECK(tt.transposed() == t);
}

TEST_CASE("tournament totality is structural") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto t = rigidsep::testing::random_tournament(rng, 5);
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                if (x != y) CHECK(t.arc(x, y) != t.arc(y, x));
    }
}

TEST_CASE("binary relation diagonal discipline") {
    BinaryRelation refl(3, true);
    CHECK(refl.at(1, 1));
    CHECK_THROWS_AS(refl.set(1, 1, false), std::invalid_argument);

    BinaryRelation irr(3, false);
    CHECK(!irr.at(2, 2));
    irr.set(0, 2, true);
    CHECK(irr.at(0, 2));
    CHECK(irr.transposed().at(2, 0));
    CHECK(irr.transposed().transposed() == irr);

    auto from_ord = BinaryRelation::from_order(LinearOrder::natural(3));
    CHECK(from_ord.reflexive());
    CHECK(from_ord.at(0, 2));
    CHECK(!from_ord.at(2, 0));

    auto from_tour = BinaryRelation::from_tournament(Tournament::from_order(LinearOrder::natural(3)));
    CHECK(!from_tour.reflexive());
    CHECK(from_tour.at(0, 2));
}

TEST_CASE("family construction and dispatch") {
    auto fam = Family::of_orders(3, {LinearOrder::natural(3), LinearOrder({2, 1, 0})});
    CHECK(fam.kind() == Kind::linear);
    CHECK(fam.size() == 2);
    CHECK(fam.ground_size() == 3);
    CHECK(fam.holds(0, 0, 2));
    CHECK(!fam.holds(1, 0, 2));
    CHECK(fam.holds(0, 1, 1));  // orders are reflexive

    auto tfam = fam.as_tournaments();
    CHECK(tfam.kind() == Kind::tournament);
    CHECK(!tfam.holds(0, 1, 1));  // tournaments are not
    CHECK(tfam.holds(0, 0, 2) == fam.holds(0, 0, 2));

    CHECK_THROWS_AS(Family::of_orders(3, {LinearOrder::natural(4)}), std::invalid_argument);
    CHECK_THROWS_AS(fam.tournaments(), std::logic_error);
}

TEST_CASE("order and tournament enumeration") {
    auto orders = all_linear_orders(3);
    CHECK(orders.size() == 6);
    CHECK(orders.front().perm() == std::vector<int>{0, 1, 2});
    CHECK(orders.back().perm() == std::vector<int>{2, 1, 0});
    CHECK(std::is_sorted(orders.begin(), orders.end()));

    CHECK(all_tournaments(3).size() == 8);
    CHECK(all_tournaments(0).size() == 1);
}
