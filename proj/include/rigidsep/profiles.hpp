#pragma once

#include <optional>
#include <utility>

#include "rigidsep/bitvec.hpp"
#include "rigidsep/relations.hpp"

namespace rigidsep {

/** Bit k is the value of member k at the ordered pair. */
using Profile = BitVec;

/** Entrywise pairs (rho(x,y), rho(y,x)), stored as two parallel bit
 *  vectors of family length.
 */
struct DoubleProfile {
    BitVec fwd;
    BitVec bwd;

    DoubleProfile swapped() const { return {bwd, fwd}; }
    bool leq(const DoubleProfile& o) const {
        return fwd.subset_of(o.fwd) && bwd.subset_of(o.bwd);
    }
    int weight() const { return fwd.count() + bwd.count(); }

    friend bool operator==(const DoubleProfile& a, const DoubleProfile& b) = default;
};

struct DoubleProfileHash {
    std::size_t operator()(const DoubleProfile& d) const {
        return d.fwd.hash() * 0x9e3779b97f4a7c15ull + d.bwd.hash();
    }
};

struct OrderedPair {
    int x = 0;
    int y = 0;
    friend bool operator==(const OrderedPair& a, const OrderedPair& b) = default;
};

Profile profile(const Family& fam, int x, int y);
DoubleProfile double_profile(const Family& fam, int x, int y);

struct SeparationCheck {
    bool separating = false;
    /** First collision found (two distinct ordered pairs with equal
     *  profiles), scanning increasing pairs in lexicographic order and
     *  testing equal before complementary profiles.
     */
    std::optional<std::pair<OrderedPair, OrderedPair>> collision;
};

/** Separation check for order/tournament families: all ordered pairs of
 *  distinct elements must have pairwise distinct profiles. Uses a hash
 *  set over increasing pairs; a decreasing pair's profile is the
 *  complement of its mate's, so only equal and complementary collisions
 *  need testing.
 */
SeparationCheck check_separating(const Family& fam);
bool is_separating(const Family& fam);

/** Hereditary rigidity from the definition: every injective map on a
 *  2-element domain other than the identity restriction must fail to
 *  preserve some member. Preservation is tested on all tuples of
 *  domain x domain.
 */
bool is_hereditarily_rigid_definitional(const Family& fam);

/** Hereditary rigidity via double profiles: the map on off-diagonal
 *  ordered pairs must be injective with an antichain range in the
 *  product order. For tournament-like families the range sits in one
 *  weight level, so only injectivity is ever exercised.
 */
bool is_hereditarily_rigid_antichain(const Family& fam);

/** All ordered pairs inside the reference member have pairwise distinct
 *  profiles with respect to the full family.
 */
bool is_minimal_profile(const Family& fam, int ref_index);

/** Every member of the ambient family coincides with some member of
 *  X union X^-1 on every 2-element set of off-diagonal ordered pairs.
 *  Both families must be tournaments on the same ground set; X nonempty.
 */
bool is_two_dense(const Family& x, const Family& ambient);

/** Transpose every member. */
Family inverse_family(const Family& fam);

/** f preserves member k: every tuple of dom(f)^2 in the relation maps
 *  into the relation.
 */
bool preserves(const PartialUnaryMap& f, const Family& fam, int member);

}  // namespace rigidsep
