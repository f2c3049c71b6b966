#include <doctest.h>

#include <sstream>

#include "rigidsep/profiles.hpp"
#include "rigidsep/sat.hpp"
#include "rigidsep/search.hpp"
#include "support/dimacs_solver.hpp"

using namespace rigidsep;
using rigidsep::testing::parse_dimacs;
using rigidsep::testing::solve_dimacs;

TEST_CASE("generated size matches the closed form") {
    for (auto [m, n] : {std::pair{2, 1}, {3, 2}, {4, 3}, {5, 5}, {6, 4}, {6, 5}, {3, 1}}) {
        for (bool fix : {true, false}) {
            CnfInstance inst = encode(m, n, {fix});
            CnfSize predicted = predicted_cnf_size(m, n, {fix});
            CHECK(predicted.vars == static_cast<std::uint64_t>(inst.var_count));
            CHECK(predicted.clauses == inst.clauses.size());
            for (const auto& clause : inst.clauses) CHECK(!clause.empty());
        }
    }
}

TEST_CASE("known clause counts at six points") {
    // 5*15 order vars + 4*105 difference vars
    CHECK(predicted_cnf_size(6, 5) == CnfSize{495, 15 + 200 + 4 * 4 * 105 + 105});
    CnfInstance inst = encode(6, 5);
    CHECK(inst.var_count == 495);
    CHECK(inst.clauses.size() == 2000);
}

TEST_CASE("order literals") {
    CnfInstance inst = encode(3, 2);
    CHECK(inst.order_var(0, 0, 1) == 1);
    CHECK(inst.order_literal(0, 1, 0) == -1);
    CHECK(inst.order_literal(1, 0, 1) == inst.order_var(1, 0, 1));
    CHECK_THROWS_AS(inst.order_var(0, 1, 1), std::invalid_argument);
}

TEST_CASE("trivial instance: one order on two points") {
    CnfInstance inst = encode(2, 1);
    // hand-built model: the single order variable true
    Family fam = decode(inst, {inst.order_var(0, 0, 1)});
    CHECK(fam.order_at(0) == LinearOrder::natural(2));
    CHECK(is_separating(fam));
}

TEST_CASE("decode rejects corrupted and partial models") {
    CnfInstance inst = encode(3, 1, {false});
    const int ab = inst.order_var(0, 0, 1);
    const int bc = inst.order_var(0, 1, 2);
    const int ac = inst.order_var(0, 0, 2);
    // cyclic triple: 0<1, 1<2, 2<0
    CHECK_THROWS_AS(decode(inst, {ab, bc, -ac}), std::domain_error);
    // missing assignment for (1,2)
    CHECK_THROWS_AS(decode(inst, {ab, ac}), std::invalid_argument);
    // literal outside the range
    CHECK_THROWS_AS(decode(inst, {ab, bc, ac, 99999}), std::invalid_argument);
}

TEST_CASE("dimacs writing and re-parsing") {
    CnfInstance inst = encode(6, 5);
    std::ostringstream text;
    write_dimacs(inst, text);
    const std::string s = text.str();
    CHECK(s.find("p cnf 495 2000") != std::string::npos);
    CHECK(s.find("c var 1 = o(0,1,2)") != std::string::npos);
    CHECK(s.find("diff(") != std::string::npos);

    std::istringstream in(s);
    auto cnf = parse_dimacs(in);
    CHECK(cnf.vars == inst.var_count);
    CHECK(cnf.clauses.size() == inst.clauses.size());
    CHECK(cnf.clauses.front() == inst.clauses.front());
    CHECK(cnf.clauses.back() == inst.clauses.back());
}

TEST_CASE("model text parsing") {
    std::istringstream vlines("c comment\ns SATISFIABLE\nv 1 -2 3\nv -4 0\n");
    auto m1 = parse_model_text(vlines);
    CHECK(!m1.unsat_claimed);
    CHECK(m1.literals == std::vector<int>{1, -2, 3, -4});

    std::istringstream bare("SAT\n1 -2 3 -4 0\n");
    auto m2 = parse_model_text(bare);
    CHECK(m2.literals == std::vector<int>{1, -2, 3, -4});

    std::istringstream unsat("s UNSATISFIABLE\n");
    CHECK(parse_model_text(unsat).unsat_claimed);
}

namespace {

SearchStatus sat_status(int m, int n, bool fix_first) {
    CnfInstance inst = encode(m, n, {fix_first});
    std::ostringstream text;
    write_dimacs(inst, text);
    std::istringstream in(text.str());
    auto result = solve_dimacs(in);
    return result.sat ? SearchStatus::found : SearchStatus::exhausted_none;
}

}  // namespace

TEST_CASE("round trip through the reference solver") {
    CnfInstance inst = encode(4, 4);
    std::ostringstream text;
    write_dimacs(inst, text);
    std::istringstream in(text.str());
    auto result = solve_dimacs(in);
    REQUIRE(result.sat);

    // hand the model back through the external text format
    std::istringstream model_text(rigidsep::testing::result_to_text(result));
    auto parsed = parse_model_text(model_text);
    Family fam = decode(inst, parsed.literals);
    CHECK(is_separating(fam));
    CHECK(fam.order_at(0) == LinearOrder::natural(4));  // pinned by the unit clauses
}

TEST_CASE("sat status matches the search on the full small grid, both encodings") {
    for (int m = 2; m <= 5; ++m) {
        for (int n = 1; n <= 5; ++n) {
            const SearchStatus expected = exists_separating_lin(m, n).status;
            CHECK(sat_status(m, n, true) == expected);
            CHECK(sat_status(m, n, false) == expected);
        }
    }
}

TEST_CASE("encode rejects bad parameters") {
    CHECK_THROWS_AS(encode(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(encode(3, 0), std::invalid_argument);
}
