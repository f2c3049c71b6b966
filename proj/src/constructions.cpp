#include "rigidsep/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "rigidsep/profiles.hpp"

namespace rigidsep {

int separation_lower_bound(int m) {
    if (m < 2) throw std::invalid_argument("separation_lower_bound: m must be >= 2");
    const std::uint64_t pairs = static_cast<std::uint64_t>(m) * (m - 1);
    int n = 0;
    while ((std::uint64_t{1} << n) < pairs) ++n;
    return n;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

void require_separating(const Family& fam, const char* who) {
    if (!is_separating(fam))
        throw std::logic_error(std::string(who) + ": construction output failed verification");
}

}  // namespace

Family cyclic_family(int m) {
    if (m < 2) throw std::invalid_argument("cyclic_family: m must be >= 2");
    std::vector<LinearOrder> members;
    members.reserve(m);
    for (int k = 0; k < m; ++k) {
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i) perm[i] = (k + i) % m;
        members.emplace_back(std::move(perm));
    }
    Family fam = Family::of_orders(m, std::move(members));
    require_separating(fam, "cyclic_family");
    return fam;
}

Family separating_family_6() {
    const std::vector<std::vector<int>> one_based = {
        {1, 2, 3, 4, 5, 6},
        {1, 3, 6, 5, 4, 2},
        {2, 1, 6, 5, 4, 3},
        {4, 3, 2, 1, 6, 5},
        {5, 3, 2, 1, 4, 6},
    };
    std::vector<LinearOrder> members;
    for (const auto& s : one_based) {
        std::vector<int> perm(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) perm[i] = s[i] - 1;
        members.emplace_back(std::move(perm));
    }
    Family fam = Family::of_orders(6, std::move(members));
    require_separating(fam, "separating_family_6");
    return fam;
}

Family optimal_tournament_family(int m) {
    if (m < 2) throw std::invalid_argument("optimal_tournament_family: m must be >= 2");
    const int n = separation_lower_bound(m);
    const std::uint64_t npairs = static_cast<std::uint64_t>(m) * (m - 1) / 2;
    if (n > 1 && npairs > (std::uint64_t{1} << (n - 1)))
        throw std::logic_error("optimal_tournament_family: code space too small");

    std::vector<Tournament> members;
    members.reserve(n);
    members.push_back(Tournament::from_order(LinearOrder::natural(m)));
    for (int k = 1; k < n; ++k) {
        Tournament t(m);
        std::uint64_t code = 0;  // lexicographic index of the increasing pair
        for (int x = 0; x < m; ++x) {
            for (int y = x + 1; y < m; ++y, ++code) {
                if ((code >> (k - 1)) & 1) t.set_arc(x, y);
                else t.set_arc(y, x);
            }
        }
        members.push_back(std::move(t));
    }
    Family fam = Family::of_tournaments(m, std::move(members));
    require_separating(fam, "optimal_tournament_family");
    return fam;
}

namespace {

/** Insertion code of the increasing pair (x,y) over members 1..n-1:
 *  bit (n-1-k) is set iff x before y in member k, so ascending integers
 *  enumerate the codes in lexicographic sequence order.
 */
std::uint64_t insertion_code(const Family& fam, int x, int y) {
    const int n = fam.size();
    std::uint64_t c = 0;
    for (int k = 1; k < n; ++k)
        if (fam.order_at(k).leq(x, y)) c |= std::uint64_t{1} << (n - 1 - k);
    return c;
}

std::vector<int> insert_adjacent(const std::vector<int>& perm, int anchor, int elt, bool after) {
    std::vector<int> out;
    out.reserve(perm.size() + 1);
    for (int v : perm) {
        if (v == anchor && !after) out.push_back(elt);
        out.push_back(v);
        if (v == anchor && after) out.push_back(elt);
    }
    return out;
}

Family extend_natural(const Family& fam) {
    const int m = fam.ground_size();
    const int n = fam.size();

    std::unordered_set<std::uint64_t> used;
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) used.insert(insertion_code(fam, x, y));

    const std::uint64_t space = n >= 1 ? (std::uint64_t{1} << (n - 1)) : 1;
    std::uint64_t code = 0;
    while (code < space && used.count(code)) ++code;
    if (code == space)
        throw std::invalid_argument(
            "extend_family: no admissible insertion sequence; needs m(m-1) < 2^n");

    const int old_max = m - 1;
    const int fresh = m;
    std::vector<LinearOrder> out;
    out.reserve(n + 1);
    out.push_back(LinearOrder::natural(m + 1));  // fresh element just after old_max
    for (int k = 1; k < n; ++k) {
        const bool after = (code >> (n - 1 - k)) & 1;  // 1: old_max before fresh
        out.emplace_back(insert_adjacent(fam.order_at(k).perm(), old_max, fresh, after));
    }
    // One new order: fresh least, old_max greatest, the rest natural.
    std::vector<int> last;
    last.push_back(fresh);
    for (int v = 0; v < old_max; ++v) last.push_back(v);
    last.push_back(old_max);
    out.emplace_back(std::move(last));

    return Family::of_orders(m + 1, std::move(out));
}

}  // namespace

Family extend_family(const Family& fam) {
    if (fam.kind() != Kind::linear)
        throw std::invalid_argument("extend_family: family must consist of linear orders");
    const int m = fam.ground_size();
    if (m < 2 || fam.size() < 1)
        throw std::invalid_argument("extend_family: need m >= 2 and at least one member");
    if (fam.size() > 62) throw std::invalid_argument("extend_family: families above 62 members are unsupported");
    if (!is_separating(fam)) throw std::invalid_argument("extend_family: family is not separating");

    const LinearOrder& first = fam.order_at(0);
    const bool natural = first == LinearOrder::natural(m);

    Family base = fam;
    if (!natural) {
        // Relabel so member 0 becomes the natural order; undone below.
        std::vector<int> to_rank(m);
        for (int x = 0; x < m; ++x) to_rank[x] = first.rank(x);
        std::vector<LinearOrder> relabeled;
        relabeled.reserve(fam.size());
        for (const auto& o : fam.orders()) relabeled.push_back(o.relabeled(to_rank));
        base = Family::of_orders(m, std::move(relabeled));
    }

    Family extended = extend_natural(base);

    if (!natural) {
        std::vector<int> back(m + 1);
        for (int pos = 0; pos < m; ++pos) back[pos] = first.at(pos);
        back[m] = m;
        std::vector<LinearOrder> restored;
        restored.reserve(extended.size());
        for (const auto& o : extended.orders()) restored.push_back(o.relabeled(back));
        extended = Family::of_orders(m + 1, std::move(restored));
    }

    require_separating(extended, "extend_family");
    return extended;
}

std::vector<std::uint32_t> middle_level_codewords(int kappa) {
    if (kappa < 0 || kappa > 12)
        throw std::invalid_argument("middle_level_codewords: kappa must be in 0..12");
    std::vector<std::uint32_t> out;
    const int bits = 2 * kappa;
    for (std::uint32_t w = 0; w < (std::uint32_t{1} << bits); ++w)
        if (__builtin_popcount(w) == kappa) out.push_back(w);
    if (kappa == 0) out.push_back(0);  // the empty word
    return out;
}

std::uint32_t swap_codeword_entries(std::uint32_t word, int kappa) {
    std::uint32_t r = 0;
    for (int u = 0; u < kappa; ++u) {
        std::uint32_t a = (word >> (2 * u)) & 1;
        std::uint32_t b = (word >> (2 * u + 1)) & 1;
        r |= (b << (2 * u)) | (a << (2 * u + 1));
    }
    return r;
}

SpernerCapacity sperner_capacity(int kappa) {
    SpernerCapacity c{};
    c.middle_level = binomial(2 * kappa, kappa);
    c.swap_fixed = (kappa % 2 == 0) ? binomial(kappa, kappa / 2) : 0;
    c.usable_pairs = (c.middle_level - c.swap_fixed) / 2;
    return c;
}

Family sperner_rigid_family(int mu, int kappa) {
    if (mu < 0 || kappa < 0) throw std::invalid_argument("sperner_rigid_family: negative parameter");
    if (kappa > 12) throw std::invalid_argument("sperner_rigid_family: kappa must be <= 12");
    const std::uint64_t pairs = mu >= 1 ? static_cast<std::uint64_t>(mu) * (mu - 1) : 0;
    const SpernerCapacity cap = sperner_capacity(kappa);
    if (pairs > cap.middle_level)
        throw std::invalid_argument(
            "sperner_rigid_family: mu(mu-1) = " + std::to_string(pairs) +
            " exceeds C(2k,k) = " + std::to_string(cap.middle_level));
    if (pairs / 2 > cap.usable_pairs)
        throw std::invalid_argument(
            "sperner_rigid_family: no hereditarily rigid family exists; mu(mu-1) = " +
            std::to_string(pairs) + " is within C(2k,k) = " + std::to_string(cap.middle_level) +
            " but a self-dual code assignment needs mu(mu-1)/2 <= " +
            std::to_string(cap.usable_pairs) +
            " (middle level minus its " + std::to_string(cap.swap_fixed) +
            " swap-fixed words, halved)");

    // Lexicographically-first representatives of the entry-swap 2-cycles.
    std::vector<std::uint32_t> reps;
    for (std::uint32_t w : middle_level_codewords(kappa)) {
        std::uint32_t s = swap_codeword_entries(w, kappa);
        if (w < s) reps.push_back(w);
    }

    std::vector<BinaryRelation> members;
    members.reserve(kappa);
    for (int u = 0; u < kappa; ++u) members.emplace_back(mu, false);
    std::size_t idx = 0;
    for (int x = 0; x < mu; ++x) {
        for (int y = x + 1; y < mu; ++y) {
            const std::uint32_t w = reps.at(idx++);
            const std::uint32_t sw = swap_codeword_entries(w, kappa);
            for (int u = 0; u < kappa; ++u) {
                members[u].set(x, y, (w >> (2 * u)) & 1);
                members[u].set(y, x, (sw >> (2 * u)) & 1);
            }
        }
    }
    Family fam = Family::of_relations(mu, std::move(members));
    if (!is_hereditarily_rigid_antichain(fam) || !is_hereditarily_rigid_definitional(fam))
        throw std::logic_error("sperner_rigid_family: construction output failed verification");
    return fam;
}

}  // namespace rigidsep
