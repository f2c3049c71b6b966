#include "rigidsep/profiles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace rigidsep {

namespace {

void check_pair(const Family& fam, int x, int y) {
    const int m = fam.ground_size();
    if (x < 0 || x >= m || y < 0 || y >= m)
        throw std::out_of_range("profile: element out of range");
    if (x == y) throw std::invalid_argument("profile: diagonal pair");
}

bool totally_ordered_kind(const Family& fam) {
    return fam.kind() == Kind::linear || fam.kind() == Kind::tournament;
}

}  // namespace

Profile profile(const Family& fam, int x, int y) {
    check_pair(fam, x, y);
    Profile p(fam.size());
    for (int k = 0; k < fam.size(); ++k) p.set(k, fam.holds(k, x, y));
    return p;
}

DoubleProfile double_profile(const Family& fam, int x, int y) {
    check_pair(fam, x, y);
    DoubleProfile d{BitVec(fam.size()), BitVec(fam.size())};
    for (int k = 0; k < fam.size(); ++k) {
        d.fwd.set(k, fam.holds(k, x, y));
        d.bwd.set(k, fam.holds(k, y, x));
    }
    return d;
}

SeparationCheck check_separating(const Family& fam) {
    if (!totally_ordered_kind(fam))
        throw std::invalid_argument("check_separating: family must be linear orders or tournaments");
    const int m = fam.ground_size();
    if (m <= 1) return {true, std::nullopt};
    if (fam.size() == 0)
        return {false, std::make_pair(OrderedPair{0, 1}, OrderedPair{1, 0})};

    std::unordered_map<Profile, OrderedPair, BitVecHash> seen;
    seen.reserve(m * (m - 1) / 2);
    for (int x = 0; x < m; ++x) {
        for (int y = x + 1; y < m; ++y) {
            Profile p = profile(fam, x, y);
            if (auto it = seen.find(p); it != seen.end())
                return {false, std::make_pair(it->second, OrderedPair{x, y})};
            Profile q = p.complemented();
            if (auto it = seen.find(q); it != seen.end())
                // profile(x,y) equals the complement of the stored pair's
                // profile, i.e. the profile of its reversal
                return {false,
                        std::make_pair(OrderedPair{it->second.y, it->second.x}, OrderedPair{x, y})};
            seen.emplace(std::move(p), OrderedPair{x, y});
        }
    }
    return {true, std::nullopt};
}

bool is_separating(const Family& fam) { return check_separating(fam).separating; }

bool preserves(const PartialUnaryMap& f, const Family& fam, int member) {
    for (std::size_t a = 0; a < f.domain.size(); ++a) {
        for (std::size_t b = 0; b < f.domain.size(); ++b) {
            if (fam.holds(member, f.domain[a], f.domain[b]) &&
                !fam.holds(member, f.values[a], f.values[b]))
                return false;
        }
    }
    return true;
}

bool is_hereditarily_rigid_definitional(const Family& fam) {
    const int m = fam.ground_size();
    if (m <= 1) return true;
    for (int x = 0; x < m; ++x) {
        for (int y = x + 1; y < m; ++y) {
            for (int fx = 0; fx < m; ++fx) {
                for (int fy = 0; fy < m; ++fy) {
                    if (fx == fy) continue;
                    if (fx == x && fy == y) continue;  // identity restriction
                    PartialUnaryMap f{{x, y}, {fx, fy}};
                    bool all = true;
                    for (int k = 0; k < fam.size() && all; ++k)
                        all = preserves(f, fam, k);
                    if (all) return false;
                }
            }
        }
    }
    return true;
}

bool is_hereditarily_rigid_antichain(const Family& fam) {
    const int m = fam.ground_size();
    if (m <= 1) return true;

    std::vector<DoubleProfile> all;
    all.reserve(m * (m - 1));
    std::unordered_set<DoubleProfile, DoubleProfileHash> distinct;
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            if (x == y) continue;
            DoubleProfile d = double_profile(fam, x, y);
            if (!distinct.insert(d).second) return false;  // not injective
            all.push_back(std::move(d));
        }
    }

    // Strict comparabilities can only cross weight levels.
    std::map<int, std::vector<const DoubleProfile*>> by_weight;
    for (const auto& d : all) by_weight[d.weight()].push_back(&d);
    for (auto lo = by_weight.begin(); lo != by_weight.end(); ++lo) {
        for (auto hi = std::next(lo); hi != by_weight.end(); ++hi) {
            for (const auto* u : lo->second)
                for (const auto* v : hi->second)
                    if (u->leq(*v)) return false;
        }
    }
    return true;
}

bool is_minimal_profile(const Family& fam, int ref_index) {
    if (ref_index < 0 || ref_index >= fam.size())
        throw std::out_of_range("is_minimal_profile: bad reference index");
    if (!totally_ordered_kind(fam))
        throw std::invalid_argument("is_minimal_profile: reference member must be an order or tournament");
    const int m = fam.ground_size();
    if (m <= 1) return true;

    std::unordered_set<Profile, BitVecHash> seen;
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            if (x == y || !fam.holds(ref_index, x, y)) continue;
            if (!seen.insert(profile(fam, x, y)).second) return false;
        }
    }
    return true;
}

bool is_two_dense(const Family& x, const Family& ambient) {
    if (x.kind() != Kind::tournament || ambient.kind() != Kind::tournament)
        throw std::invalid_argument("is_two_dense: both families must be tournaments");
    if (x.ground_size() != ambient.ground_size())
        throw std::invalid_argument("is_two_dense: ground-set mismatch");
    if (x.size() == 0) throw std::invalid_argument("is_two_dense: X must be non-empty");
    const int m = x.ground_size();
    if (m <= 1) return true;

    std::vector<Tournament> pool = x.tournaments();
    for (const auto& t : x.tournaments()) pool.push_back(t.transposed());

    std::vector<OrderedPair> pairs;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b) pairs.push_back({a, b});
    const int np = static_cast<int>(pairs.size());

    // For each 2-set of ordered pairs, the set of (value,value) patterns
    // realized over X union X^-1, as a 4-bit mask.
    std::vector<std::uint8_t> realized(static_cast<std::size_t>(np) * np, 0);
    for (int i = 0; i < np; ++i) {
        for (int j = i + 1; j < np; ++j) {
            std::uint8_t mask = 0;
            for (const auto& t : pool) {
                int u = t.arc(pairs[i].x, pairs[i].y) ? 1 : 0;
                int v = t.arc(pairs[j].x, pairs[j].y) ? 1 : 0;
                mask |= static_cast<std::uint8_t>(1u << (u * 2 + v));
            }
            realized[static_cast<std::size_t>(i) * np + j] = mask;
        }
    }

    for (const auto& rho : ambient.tournaments()) {
        std::vector<std::uint8_t> val(np);
        for (int i = 0; i < np; ++i) val[i] = rho.arc(pairs[i].x, pairs[i].y) ? 1 : 0;
        for (int i = 0; i < np; ++i)
            for (int j = i + 1; j < np; ++j)
                if (!(realized[static_cast<std::size_t>(i) * np + j] >> (val[i] * 2 + val[j]) & 1))
                    return false;
    }
    return true;
}

Family inverse_family(const Family& fam) {
    switch (fam.kind()) {
        case Kind::linear: {
            std::vector<LinearOrder> out;
            out.reserve(fam.size());
            for (const auto& o : fam.orders()) out.push_back(o.reversed());
            return Family::of_orders(fam.ground_size(), std::move(out));
        }
        case Kind::tournament: {
            std::vector<Tournament> out;
            out.reserve(fam.size());
            for (const auto& t : fam.tournaments()) out.push_back(t.transposed());
            return Family::of_tournaments(fam.ground_size(), std::move(out));
        }
        case Kind::relation: {
            std::vector<BinaryRelation> out;
            out.reserve(fam.size());
            for (const auto& r : fam.relations()) out.push_back(r.transposed());
            return Family::of_relations(fam.ground_size(), std::move(out));
        }
    }
    throw std::logic_error("inverse_family: bad kind");
}

}  // namespace rigidsep
