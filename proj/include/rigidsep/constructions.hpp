#pragma once

#include <cstdint>
#include <vector>

#include "rigidsep/relations.hpp"

namespace rigidsep {

/** ceil(log2(m*(m-1))): no separating family of orders or tournaments on
 *  m points can be smaller, since the m(m-1) ordered pairs need distinct
 *  profiles in {0,1}^n. Requires m >= 2.
 */
int separation_lower_bound(int m);

std::uint64_t binomial(int n, int k);

/** The m rotations of the natural order; separating for every m >= 2.
 *  Member k is (k+1, ..., m, 1, ..., k) in 1-based one-line notation.
 */
Family cyclic_family(int m);

/** The known minimum separating family of five orders on six points
 *  (1-based strings 123456, 136542, 216543, 432165, 532146), verified
 *  separating at construction. Together with the lower bound 5 it pins
 *  the exact value for m = 6.
 */
Family separating_family_6();

/** A separating family of exactly ceil(log2(m(m-1))) tournaments on m
 *  points, matching the lower bound. Member 0 is the natural order as a
 *  tournament; member k orients each increasing pair (x,y) as x -> y
 *  exactly when bit k-1 of the pair's lexicographic index is set, and
 *  y -> x otherwise. Verified separating at construction.
 */
Family optimal_tournament_family(int m);

/** Extend a separating family of n orders on m points to one of n+1
 *  orders on m+1 points. The new element is inserted adjacent to the
 *  greatest element of member 0 in every existing member (the side
 *  chosen per member by the lexicographically smallest 0-1 sequence
 *  that differs from the insertion codes of all existing pairs), and
 *  one new order is appended with the new element least and the old
 *  greatest element last. If member 0 is not the natural order the
 *  ground set is relabeled first and relabeled back afterwards.
 *
 *  Throws if the input is not separating, or if no admissible sequence
 *  exists (possible only when m(m-1) = 2^n exactly).
 */
Family extend_family(const Family& fam);

/** Middle level of ({0,1}^2)^kappa: all 2*kappa-bit words of weight
 *  kappa, in increasing numeric order of the word (bit 2u+b of the word
 *  is component b of entry u).
 */
std::vector<std::uint32_t> middle_level_codewords(int kappa);

/** The involution on codewords induced by swapping the two components of
 *  every entry.
 */
std::uint32_t swap_codeword_entries(std::uint32_t word, int kappa);

struct SpernerCapacity {
    std::uint64_t middle_level;  // C(2k, k)
    std::uint64_t swap_fixed;    // codewords fixed by the entry swap
    std::uint64_t usable_pairs;  // (middle_level - swap_fixed) / 2
};
SpernerCapacity sperner_capacity(int kappa);

/** kappa irreflexive relations on mu points whose double-profile map is
 *  injective with antichain range (inside the middle level); passes both
 *  hereditary-rigidity checkers, verified at construction.
 *
 *  Each increasing pair receives a distinct codeword w with w strictly
 *  below its entry-swapped mate, the reversed pair receives the mate
 *  (making the assignment self-dual), and relation u reads component 0
 *  of entry u. Requires mu(mu-1) <= C(2k,k) and, for the self-dual
 *  assignment to exist, mu(mu-1)/2 <= usable_pairs; violations are
 *  rejected with both bounds reported.
 */
Family sperner_rigid_family(int mu, int kappa);

}  // namespace rigidsep
