#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rigidsep/relations.hpp"

namespace rigidsep {

struct EncodeOptions {
    /** Fix order 0 to the identity with unit clauses and require distinct
     *  profiles only over orders 1..n-1 for the increasing pairs (the
     *  minimal-profile reduction). When off, all ordered-pair profiles
     *  over all orders are constrained (the reference encoding).
     */
    bool fix_first_identity = true;
};

/** CNF for "do n linear orders on m points give all ordered pairs
 *  distinct profiles?".
 *
 *  Variables o(k,i,j) for i < j mean i before j in order k; the literal
 *  for j,i is the negation, so antisymmetry and totality are free.
 *  Transitivity contributes 2 clauses per order and unordered triple
 *  (the two directed 3-cycles). Profile distinctness goes through one
 *  fresh difference variable per (pair-of-pairs, order) with the
 *  4-clause XOR biconditional, plus one covering clause per
 *  pair-of-pairs. Reversed-pair mates are never constrained against
 *  each other: their profiles are complementary by construction.
 */
class CnfInstance {
public:
    int m = 0;
    int n = 0;
    EncodeOptions options;
    int var_count = 0;
    std::vector<std::vector<int>> clauses;

    struct AuxVar {
        int id;
        int k;
        int x1, y1, x2, y2;  // the two ordered pairs being distinguished
    };
    std::vector<AuxVar> aux_vars;
    int contradiction_var = 0;  // nonzero only for n = 1 with >= 2 pairs

    /** Variable id of o(k, i, j), i < j. */
    int order_var(int k, int i, int j) const;

    /** Signed literal for "i before j in order k", any i != j. */
    int order_literal(int k, int i, int j) const;
};

struct CnfSize {
    std::uint64_t vars = 0;
    std::uint64_t clauses = 0;
    friend bool operator==(const CnfSize&, const CnfSize&) = default;
};

/** Closed-form size of encode(m, n, options); generation drift against
 *  this formula is a bug.
 */
CnfSize predicted_cnf_size(int m, int n, const EncodeOptions& options = {});

CnfInstance encode(int m, int n, const EncodeOptions& options = {});

/** DIMACS text: var-map comment lines, "p cnf <vars> <clauses>", then
 *  one clause per line terminated by 0.
 */
void write_dimacs(const CnfInstance& instance, std::ostream& out);

struct ModelText {
    bool unsat_claimed = false;
    std::vector<int> literals;
};

/** Accepts solver output: "v" lines of literals, bare literal lines,
 *  and s/SAT/UNSAT status markers; comment lines are skipped.
 */
ModelText parse_model_text(std::istream& in);

/** Rebuild the n orders from a model. Throws if some order variable is
 *  unassigned, if the model induces a non-transitive relation (solver or
 *  I/O corruption), or if the decoded family fails separation (an
 *  encoding bug). The returned family is verified separating.
 */
Family decode(const CnfInstance& instance, const std::vector<int>& model_literals);

}  // namespace rigidsep
