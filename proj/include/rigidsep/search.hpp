#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "rigidsep/relations.hpp"

namespace rigidsep {

struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
    int parallel_width = 1;
};

/** Each reduction is individually toggleable so completeness can be
 *  re-validated against the brute-force oracle. The reversal quotient
 *  relies on the other two and is inactive unless both are on.
 */
struct SymmetryOptions {
    bool fix_first = true;         // member 0 is the identity permutation
    bool sorted_members = true;    // members non-decreasing in one-line order
    bool reversal_quotient = true; // keep only lex-leaders under reverse-and-relabel

    static SymmetryOptions none() { return {false, false, false}; }
};

enum class SearchStatus { found, exhausted_none, budget_exceeded };

const char* search_status_name(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted_none;
    std::optional<Family> witness;  // set iff found; re-verified separating
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/** Is there a separating family of n linear orders on m points?
 *
 *  Backtracking over candidate orders placed one at a time. After k
 *  placements the ordered pairs are partitioned by their k-bit partial
 *  profiles; a branch dies as soon as some class exceeds 2^(n-k), since
 *  the remaining members can split a class into at most that many
 *  distinct full profiles. exhausted_none is a completeness certificate
 *  for the symmetry-reduced space.
 */
SearchOutcome exists_separating_lin(int m, int n, const SearchBudget& budget = {},
                                    const SymmetryOptions& sym = {});

/** Plain nested enumeration over all member tuples, no symmetry
 *  reduction and no pruning; validates the pruned search. Guarded to
 *  m <= 5 for orders and m <= 4 for tournaments.
 */
SearchOutcome brute_force_oracle(int m, int n, Kind kind);

struct HValue {
    int m = 0;
    int lower = 0;  // separation_lower_bound(m)
    int upper = 0;  // size of the best verified witness
    std::optional<int> exact;
    Family witness;           // size exact when exact is set, else upper
    std::string certificate;  // how the value (or bracket) was established
    std::uint64_t nodes = 0;
    bool budget_exceeded = false;
};

/** Smallest verified separating family known from constructions alone:
 *  {natural order} for m = 2, the cyclic family for m <= 5, the 6-point
 *  witness, and its extension chain beyond.
 */
Family best_known_upper_family(int m);

/** Exact h value for linear orders: searches n = lower, lower+1, ...;
 *  each exhausted_none level is a complete nonexistence proof. On budget
 *  exhaustion at a level that a verified construction witness matches,
 *  the value is still exact; otherwise the bracket [level, upper] is
 *  reported with budget_exceeded set.
 */
HValue h_lin_exact(int m, const SearchBudget& budget = {});

/** Exact h value for tournaments: the optimal construction meets the
 *  lower bound for every m; for m <= 4 nonexistence one level below is
 *  additionally confirmed by the brute-force oracle.
 */
HValue h_tour_exact(int m, const SearchBudget& budget = {});

}  // namespace rigidsep
