#include <doctest.h>

#include <random>
#include <set>

#include "rigidsep/constructions.hpp"
#include "rigidsep/profiles.hpp"
#include "support/family_gen.hpp"

using namespace rigidsep;

TEST_CASE("lower bound values") {
    CHECK(separation_lower_bound(2) == 1);
    CHECK(separation_lower_bound(3) == 3);
    CHECK(separation_lower_bound(4) == 4);
    CHECK(separation_lower_bound(5) == 5);
    CHECK(separation_lower_bound(6) == 5);
    CHECK(separation_lower_bound(7) == 6);
    CHECK(separation_lower_bound(8) == 6);
    CHECK_THROWS_AS(separation_lower_bound(1), std::invalid_argument);
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("cyclic family") {
    auto fam = cyclic_family(3);
    REQUIRE(fam.size() == 3);
    CHECK(fam.order_at(0).perm() == std::vector<int>{0, 1, 2});
    CHECK(fam.order_at(1).perm() == std::vector<int>{1, 2, 0});
    CHECK(fam.order_at(2).perm() == std::vector<int>{2, 0, 1});
    CHECK(is_separating(fam));

    for (int m = 2; m <= 8; ++m) CHECK(is_separating(cyclic_family(m)));
    CHECK(cyclic_family(2).size() == 2);
    CHECK_THROWS_AS(cyclic_family(1), std::invalid_argument);
}

TEST_CASE("six-point witness") {
    auto fam = separating_family_6();
    CHECK(fam.ground_size() == 6);
    CHECK(fam.size() == 5);
    CHECK(is_separating(fam));
    CHECK(separation_lower_bound(6) == fam.size());  // optimal
}

TEST_CASE("optimal tournament families") {
    auto fam6 = optimal_tournament_family(6);
    CHECK(fam6.size() == 5);
    CHECK(is_separating(fam6));
    CHECK(fam6.tournament_at(0) == Tournament::from_order(LinearOrder::natural(6)));

    auto fam2 = optimal_tournament_family(2);
    CHECK(fam2.size() == 1);
    CHECK(profile(fam2, 0, 1).to_string() == "1");
    CHECK(profile(fam2, 1, 0).to_string() == "0");

    auto fam64 = optimal_tournament_family(64);
    CHECK(fam64.size() == 12);
    CHECK(is_separating(fam64));

    for (int m = 2; m <= 64; ++m)
        CHECK(optimal_tournament_family(m).size() == separation_lower_bound(m));

    CHECK_THROWS_AS(optimal_tournament_family(1), std::invalid_argument);
}

namespace {

/** Insertion codes over members 1..n-1, as the construction defines them. */
std::set<std::vector<bool>> all_insertion_codes(const Family& fam) {
    std::set<std::vector<bool>> codes;
    const int m = fam.ground_size();
    for (int x = 0; x < m; ++x) {
        for (int y = x + 1; y < m; ++y) {
            std::vector<bool> code;
            for (int k = 1; k < fam.size(); ++k) code.push_back(fam.order_at(k).leq(x, y));
            codes.insert(std::move(code));
        }
    }
    return codes;
}

}  // namespace

TEST_CASE("extension: the two-point family") {
    auto base = Family::of_orders(2, {LinearOrder::natural(2), LinearOrder({1, 0})});
    auto ext = extend_family(base);
    CHECK(ext.ground_size() == 3);
    CHECK(ext.size() == 3);
    CHECK(is_separating(ext));
}

TEST_CASE("extension: the six-point witness reaches seven points") {
    auto ext = extend_family(separating_family_6());
    CHECK(ext.ground_size() == 7);
    CHECK(ext.size() == 6);
    CHECK(is_separating(ext));
    CHECK(ext.size() == separation_lower_bound(7));  // pins the exact value at 7
}

TEST_CASE("extension mechanics") {
    auto base = separating_family_6();
    auto ext = extend_family(base);
    const int fresh = 6, old_max = 5;

    // the fresh element is adjacent to the old maximum in every inherited member
    for (int k = 0; k < base.size(); ++k) {
        const auto& o = ext.order_at(k);
        CHECK(std::abs(o.rank(fresh) - o.rank(old_max)) == 1);
    }
    // member 0 keeps it just after, the appended member has it least and old max last
    CHECK(ext.order_at(0).perm() == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    const auto& last = ext.order_at(ext.size() - 1);
    CHECK(last.at(0) == fresh);
    CHECK(last.at(6) == old_max);

    // the chosen insertion code collides with no existing pair code
    auto base_codes = all_insertion_codes(base);
    std::vector<bool> chosen;
    for (int k = 1; k < base.size(); ++k) chosen.push_back(ext.order_at(k).leq(old_max, fresh));
    CHECK(base_codes.find(chosen) == base_codes.end());
}

TEST_CASE("extension grows by exactly one member") {
    for (int m = 3; m <= 6; ++m) {
        auto fam = cyclic_family(m);
        auto ext = extend_family(fam);
        CHECK(ext.size() == fam.size() + 1);
        CHECK(ext.ground_size() == m + 1);
        CHECK(is_separating(ext));
    }
}

TEST_CASE("extension relabels when member 0 is not natural") {
    // cyclic family rotated so member 0 is not the identity
    auto cyc = cyclic_family(4);
    std::vector<LinearOrder> rotated(cyc.orders().rbegin(), cyc.orders().rend());
    auto fam = Family::of_orders(4, std::move(rotated));
    REQUIRE(is_separating(fam));
    auto ext = extend_family(fam);
    CHECK(ext.ground_size() == 5);
    CHECK(ext.size() == 5);
    CHECK(is_separating(ext));
}

TEST_CASE("extension rejects bad inputs") {
    auto not_sep = Family::of_orders(3, {LinearOrder::natural(3)});
    CHECK_THROWS_AS(extend_family(not_sep), std::invalid_argument);

    // m(m-1) = 2^n exactly: the one length-0 code is already taken
    auto tight = Family::of_orders(2, {LinearOrder::natural(2)});
    CHECK_THROWS_AS(extend_family(tight), std::invalid_argument);
}

TEST_CASE("middle level codewords") {
    auto words = middle_level_codewords(2);
    CHECK(words.size() == 6);
    for (auto w : words) CHECK(__builtin_popcount(w) == 2);
    CHECK(std::is_sorted(words.begin(), words.end()));

    for (auto w : middle_level_codewords(3)) {
        auto s = swap_codeword_entries(w, 3);
        CHECK(__builtin_popcount(s) == 3);
        CHECK(swap_codeword_entries(s, 3) == w);
    }
}

TEST_CASE("sperner capacity") {
    auto c2 = sperner_capacity(2);
    CHECK(c2.middle_level == 6);
    CHECK(c2.swap_fixed == 2);
    CHECK(c2.usable_pairs == 2);

    auto c3 = sperner_capacity(3);
    CHECK(c3.middle_level == 20);
    CHECK(c3.swap_fixed == 0);
    CHECK(c3.usable_pairs == 10);

    auto c4 = sperner_capacity(4);
    CHECK(c4.middle_level == 70);
    CHECK(c4.swap_fixed == 6);
    CHECK(c4.usable_pairs == 32);
}

TEST_CASE("sperner rigid families") {
    auto fam53 = sperner_rigid_family(5, 3);
    CHECK(fam53.ground_size() == 5);
    CHECK(fam53.size() == 3);
    for (const auto& r : fam53.relations()) CHECK(!r.reflexive());
    CHECK(is_hereditarily_rigid_antichain(fam53));
    CHECK(is_hereditarily_rigid_definitional(fam53));
    // self-duality surfaces as every double profile sitting on the middle level
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            if (x != y) CHECK(double_profile(fam53, x, y).weight() == 3);

    auto fam84 = sperner_rigid_family(8, 4);
    CHECK(fam84.size() == 4);
    CHECK(is_hereditarily_rigid_antichain(fam84));
    CHECK(is_hereditarily_rigid_definitional(fam84));

    auto fam21 = sperner_rigid_family(2, 1);
    CHECK(is_hereditarily_rigid_definitional(fam21));
}

TEST_CASE("sperner bound violations are rejected") {
    CHECK_THROWS_AS(sperner_rigid_family(6, 3), std::invalid_argument);  // 30 > 20
    CHECK_THROWS_AS(sperner_rigid_family(4, 2), std::invalid_argument);  // 12 > 6
}

TEST_CASE("no rigid pair of relations on three points exists") {
    // Exhaustive: 2 members, each reflexive or irreflexive, on 3 elements.
    // The middle level of the 4-bit lattice is the only 6-antichain and
    // contains entry-swap fixed points, so the double-profile map of any
    // candidate family cannot be injective. This is why (3,2) is rejected
    // although 3*2 <= C(4,2).
    std::vector<BinaryRelation> rels;
    for (int bits = 0; bits < 64; ++bits) {
        for (int refl = 0; refl < 2; ++refl) {
            BinaryRelation r(3, refl == 1);
            int p = 0;
            for (int x = 0; x < 3; ++x)
                for (int y = 0; y < 3; ++y)
                    if (x != y) r.set(x, y, (bits >> p++) & 1);
            rels.push_back(std::move(r));
        }
    }
    for (const auto& a : rels)
        for (const auto& b : rels)
            CHECK(!is_hereditarily_rigid_definitional(Family::of_relations(3, {a, b})));

    CHECK_THROWS_AS(sperner_rigid_family(3, 2), std::invalid_argument);
}
