#include "rigidsep/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rigidsep/constructions.hpp"
#include "rigidsep/profiles.hpp"

namespace rigidsep {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void validate_budget(const SearchBudget& b) {
    if (b.max_nodes == 0 || !(b.max_seconds > 0) || b.parallel_width < 1)
        throw std::invalid_argument("SearchBudget: all fields must be positive");
}

/** Flat open-addressing profile->count table, reusable across nodes. */
class ClassCounter {
public:
    explicit ClassCounter(int capacity_hint) {
        int cap = 16;
        while (cap < 4 * capacity_hint) cap <<= 1;
        mask_ = cap - 1;
        keys_.assign(cap, 0);
        counts_.assign(cap, 0);
        used_.reserve(capacity_hint);
    }

    void clear() {
        for (int slot : used_) counts_[slot] = 0;
        used_.clear();
    }

    int add(std::uint64_t key) {
        int slot = find(key);
        if (counts_[slot] == 0) {
            keys_[slot] = key;
            used_.push_back(slot);
        }
        return ++counts_[slot];
    }

    int get(std::uint64_t key) const {
        int slot = find(key);
        return counts_[slot];
    }

    const std::vector<int>& used() const { return used_; }
    std::uint64_t key_at(int slot) const { return keys_[slot]; }
    int count_at(int slot) const { return counts_[slot]; }

private:
    int find(std::uint64_t key) const {
        int slot = static_cast<int>((key * 0x9e3779b97f4a7c15ull) >> 32) & mask_;
        while (counts_[slot] != 0 && keys_[slot] != key) slot = (slot + 1) & mask_;
        return slot;
    }

    int mask_ = 0;
    std::vector<std::uint64_t> keys_;
    mutable std::vector<int> counts_;
    std::vector<int> used_;
};

/** All candidate orders on m points with per-pair bit masks and the
 *  index of each candidate's reverse-and-relabel image.
 */
struct CandidateTable {
    int m = 0;
    int pairs = 0;  // C(m,2)
    std::vector<LinearOrder> orders;      // lexicographic
    std::vector<std::uint64_t> masks;     // bit p: increasing pair p satisfied
    std::vector<int> reversal_image;      // index of x -> m-1 - perm[m-1-i]
};

CandidateTable build_candidates(int m) {
    CandidateTable t;
    t.m = m;
    t.pairs = m * (m - 1) / 2;
    t.orders = all_linear_orders(m);
    t.masks.reserve(t.orders.size());
    for (const auto& o : t.orders) {
        std::uint64_t mask = 0;
        int p = 0;
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y, ++p)
                if (o.leq(x, y)) mask |= std::uint64_t{1} << p;
        t.masks.push_back(mask);
    }
    t.reversal_image.reserve(t.orders.size());
    for (const auto& o : t.orders) {
        std::vector<int> img(m);
        for (int i = 0; i < m; ++i) img[i] = m - 1 - o.at(m - 1 - i);
        LinearOrder r(std::move(img));
        auto it = std::lower_bound(t.orders.begin(), t.orders.end(), r);
        t.reversal_image.push_back(static_cast<int>(it - t.orders.begin()));
    }
    return t;
}

struct SharedSearchState {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::mutex witness_mutex;
    std::optional<std::vector<int>> witness_indices;
    Clock::time_point start = Clock::now();
    std::uint64_t max_nodes = 0;
    double max_seconds = 0;

    bool charge_node() {
        std::uint64_t used = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (used > max_nodes) {
            budget_hit.store(true, std::memory_order_relaxed);
            stop.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    void check_time(std::uint64_t local_counter) {
        if ((local_counter & 1023) == 0 && elapsed_seconds(start) > max_seconds) {
            budget_hit.store(true, std::memory_order_relaxed);
            stop.store(true, std::memory_order_relaxed);
        }
    }

    void record_witness(const std::vector<int>& chosen) {
        std::lock_guard<std::mutex> lock(witness_mutex);
        if (!witness_indices) {
            witness_indices = chosen;
            stop.store(true, std::memory_order_relaxed);
        }
    }
};

class BranchExplorer {
public:
    BranchExplorer(const CandidateTable& table, int n, const SymmetryOptions& sym,
                   SharedSearchState& shared)
        : table_(table), n_(n), sym_(sym), shared_(shared) {
        profiles_.assign(static_cast<std::size_t>(n + 1) * table.pairs, 0);
        chosen_.assign(n, -1);
        counters_.reserve(n);
        for (int d = 0; d < n; ++d) counters_.emplace_back(std::max(table.pairs, 2));
        use_reversal_ = sym.reversal_quotient && sym.fix_first && sym.sorted_members;
    }

    /** Place candidate `cand` as member `depth` over the current prefix
     *  profiles; false when the class bound 2^(n-k) is violated.
     */
    bool place(int depth, int cand) {
        const std::uint64_t mask = table_.masks[cand];
        const std::uint64_t* prev = &profiles_[static_cast<std::size_t>(depth) * table_.pairs];
        std::uint64_t* cur = &profiles_[static_cast<std::size_t>(depth + 1) * table_.pairs];
        for (int p = 0; p < table_.pairs; ++p)
            cur[p] = prev[p] | (((mask >> p) & 1) << depth);
        chosen_[depth] = cand;

        const int placed = depth + 1;
        const std::uint64_t bound = std::uint64_t{1} << (n_ - placed);
        const std::uint64_t bitmask = (placed == 64) ? ~std::uint64_t{0}
                                                     : (std::uint64_t{1} << placed) - 1;
        ClassCounter& counter = counters_[depth];
        counter.clear();
        for (int p = 0; p < table_.pairs; ++p) counter.add(cur[p]);
        for (int slot : counter.used()) {
            const std::uint64_t key = counter.key_at(slot);
            const int total = counter.count_at(slot) + counter.get(~key & bitmask);
            if (static_cast<std::uint64_t>(total) > bound) return false;
        }
        return true;
    }

    /** Lex-leader test under reverse-and-relabel of all free members. */
    bool reversal_leader(int depth) const {
        int img[64];
        const int count = depth;  // members 1..depth
        for (int i = 1; i <= depth; ++i) img[i - 1] = table_.reversal_image[chosen_[i]];
        std::sort(img, img + count);
        return !std::lexicographical_compare(img, img + count, chosen_.begin() + 1,
                                             chosen_.begin() + 1 + count);
    }

    void explore(int depth, int lo) {
        const int ncand = static_cast<int>(table_.orders.size());
        for (int cand = lo; cand < ncand; ++cand) {
            if (shared_.stop.load(std::memory_order_relaxed)) return;
            if (!shared_.charge_node()) return;
            shared_.check_time(++local_nodes_);
            if (!place(depth, cand)) continue;
            if (use_reversal_ && depth >= 1 && !reversal_leader(depth)) continue;
            if (depth + 1 == n_) {
                shared_.record_witness(chosen_);
                return;
            }
            explore(depth + 1, sym_.sorted_members ? cand : 0);
            if (shared_.stop.load(std::memory_order_relaxed)) return;
        }
    }

    /** Run one top-level work item: candidate `cand` at `depth`. */
    void run_item(int depth, int cand) {
        if (shared_.stop.load(std::memory_order_relaxed)) return;
        if (!shared_.charge_node()) return;
        shared_.check_time(++local_nodes_);
        if (!place(depth, cand)) return;
        if (use_reversal_ && depth >= 1 && !reversal_leader(depth)) return;
        if (depth + 1 == n_) {
            shared_.record_witness(chosen_);
            return;
        }
        explore(depth + 1, sym_.sorted_members ? cand : 0);
    }

    void seed_prefix(const std::vector<std::uint64_t>& prefix_profiles,
                     const std::vector<int>& prefix_chosen) {
        std::copy(prefix_profiles.begin(), prefix_profiles.end(), profiles_.begin());
        std::copy(prefix_chosen.begin(), prefix_chosen.end(), chosen_.begin());
    }

private:
    const CandidateTable& table_;
    int n_;
    SymmetryOptions sym_;
    SharedSearchState& shared_;
    bool use_reversal_ = false;
    std::vector<std::uint64_t> profiles_;  // (n+1) x pairs, row d = after d members
    std::vector<int> chosen_;
    std::vector<ClassCounter> counters_;
    std::uint64_t local_nodes_ = 0;
};

}  // namespace

const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted_none: return "exhausted_none";
        case SearchStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

SearchOutcome exists_separating_lin(int m, int n, const SearchBudget& budget,
                                    const SymmetryOptions& sym) {
    if (m < 2) throw std::invalid_argument("exists_separating_lin: m must be >= 2");
    if (m > 10) throw std::invalid_argument("exists_separating_lin: m must be <= 10");
    if (n < 1 || n > 62) throw std::invalid_argument("exists_separating_lin: n must be in 1..62");
    validate_budget(budget);

    const auto start = Clock::now();

    // Root pigeonhole: m(m-1) ordered pairs need distinct n-bit profiles.
    if (static_cast<std::uint64_t>(m) * (m - 1) > (std::uint64_t{1} << n))
        return {SearchStatus::exhausted_none, std::nullopt, 0, elapsed_seconds(start)};

    const CandidateTable table = build_candidates(m);
    SharedSearchState shared;
    shared.start = start;
    shared.max_nodes = budget.max_nodes;
    shared.max_seconds = budget.max_seconds;

    // With the first member fixed, precompute its placement once.
    std::vector<std::uint64_t> prefix_profiles(
        static_cast<std::size_t>(n + 1) * table.pairs, 0);
    std::vector<int> prefix_chosen(n, -1);
    int split_depth = 0;
    bool prefix_alive = true;
    if (sym.fix_first) {
        BranchExplorer seeder(table, n, sym, shared);
        if (!shared.charge_node() || !seeder.place(0, 0)) {  // index 0 is the identity
            prefix_alive = false;
        } else if (n == 1) {
            shared.record_witness({0});
            prefix_alive = false;
        } else {
            // row 1 after placing the identity: bit 0 set on every pair
            for (int p = 0; p < table.pairs; ++p)
                prefix_profiles[static_cast<std::size_t>(table.pairs) + p] = 1;
            prefix_chosen[0] = 0;
            split_depth = 1;
        }
    }

    if (prefix_alive && !shared.stop.load()) {
        const int ncand = static_cast<int>(table.orders.size());
        std::atomic<int> next_item{0};
        auto worker = [&]() {
            BranchExplorer explorer(table, n, sym, shared);
            explorer.seed_prefix(prefix_profiles, prefix_chosen);
            while (!shared.stop.load(std::memory_order_relaxed)) {
                int item = next_item.fetch_add(1, std::memory_order_relaxed);
                if (item >= ncand) break;
                explorer.run_item(split_depth, item);
            }
        };
        const int width = std::max(1, budget.parallel_width);
        if (width == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(width);
            for (int t = 0; t < width; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
    }

    SearchOutcome out;
    out.nodes = std::min(shared.nodes.load(), shared.max_nodes);
    out.seconds = elapsed_seconds(start);
    if (shared.witness_indices) {
        std::vector<LinearOrder> members;
        members.reserve(n);
        for (int idx : *shared.witness_indices) members.push_back(table.orders.at(idx));
        Family fam = Family::of_orders(m, std::move(members));
        if (!is_separating(fam))
            throw std::logic_error("exists_separating_lin: witness failed re-verification");
        out.status = SearchStatus::found;
        out.witness = std::move(fam);
    } else if (shared.budget_hit.load()) {
        out.status = SearchStatus::budget_exceeded;
    } else {
        out.status = SearchStatus::exhausted_none;
    }
    return out;
}

namespace {

struct OracleTable {
    int pairs = 0;
    std::vector<std::uint64_t> masks;
};

SearchOutcome oracle_run(int m, int n, Kind kind, const OracleTable& table,
                         const std::vector<LinearOrder>* orders,
                         const std::vector<Tournament>* tours) {
    const auto start = Clock::now();
    SearchOutcome out;
    if (n == 0) {
        out.status = m <= 1 ? SearchStatus::found : SearchStatus::exhausted_none;
        if (out.status == SearchStatus::found)
            out.witness = kind == Kind::linear ? Family::of_orders(m, {})
                                               : Family::of_tournaments(m, {});
        out.seconds = elapsed_seconds(start);
        return out;
    }

    const int ncand = static_cast<int>(table.masks.size());
    std::vector<std::uint64_t> profiles(static_cast<std::size_t>(n + 1) * table.pairs, 0);
    std::vector<int> chosen(n, 0);
    std::uint64_t nodes = 0;
    const bool small = n <= 6;
    ClassCounter counter(std::max(table.pairs, 2));
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;

    // Plain nested loops over all member tuples, leaf check only.
    auto leaf_separating = [&]() {
        const std::uint64_t* prof = &profiles[static_cast<std::size_t>(n) * table.pairs];
        if (small) {
            std::uint64_t occupied = 0;
            for (int p = 0; p < table.pairs; ++p) {
                const std::uint64_t v = prof[p];
                const std::uint64_t both =
                    (std::uint64_t{1} << v) | (std::uint64_t{1} << (~v & full));
                if (occupied & both) return false;
                occupied |= std::uint64_t{1} << v;
            }
            return true;
        }
        counter.clear();
        for (int p = 0; p < table.pairs; ++p) counter.add(prof[p]);
        for (int slot : counter.used()) {
            const std::uint64_t key = counter.key_at(slot);
            if (counter.count_at(slot) + counter.get(~key & full) > 1) return false;
        }
        return true;
    };

    std::optional<std::vector<int>> witness;
    auto dfs = [&](auto&& self, int depth) -> bool {
        const std::uint64_t* prev = &profiles[static_cast<std::size_t>(depth) * table.pairs];
        std::uint64_t* cur = &profiles[static_cast<std::size_t>(depth + 1) * table.pairs];
        for (int cand = 0; cand < ncand; ++cand) {
            ++nodes;
            const std::uint64_t mask = table.masks[cand];
            for (int p = 0; p < table.pairs; ++p)
                cur[p] = prev[p] | (((mask >> p) & 1) << depth);
            chosen[depth] = cand;
            if (depth + 1 == n) {
                if (leaf_separating()) {
                    witness = chosen;
                    return true;
                }
            } else if (self(self, depth + 1)) {
                return true;
            }
        }
        return false;
    };

    dfs(dfs, 0);

    out.nodes = nodes;
    out.seconds = elapsed_seconds(start);
    if (witness) {
        Family fam = kind == Kind::linear
                         ? Family::of_orders(m, [&] {
                               std::vector<LinearOrder> v;
                               for (int i : *witness) v.push_back(orders->at(i));
                               return v;
                           }())
                         : Family::of_tournaments(m, [&] {
                               std::vector<Tournament> v;
                               for (int i : *witness) v.push_back(tours->at(i));
                               return v;
                           }());
        if (!is_separating(fam))
            throw std::logic_error("brute_force_oracle: witness failed re-verification");
        out.status = SearchStatus::found;
        out.witness = std::move(fam);
    } else {
        out.status = SearchStatus::exhausted_none;
    }
    return out;
}

}  // namespace

SearchOutcome brute_force_oracle(int m, int n, Kind kind) {
    if (m < 2) throw std::invalid_argument("brute_force_oracle: m must be >= 2");
    if (n < 0 || n > 62) throw std::invalid_argument("brute_force_oracle: n must be in 0..62");
    OracleTable table;
    table.pairs = m * (m - 1) / 2;

    if (kind == Kind::linear) {
        if (m > 5) throw std::invalid_argument("brute_force_oracle: linear orders need m <= 5");
        const auto orders = all_linear_orders(m);
        for (const auto& o : orders) {
            std::uint64_t mask = 0;
            int p = 0;
            for (int x = 0; x < m; ++x)
                for (int y = x + 1; y < m; ++y, ++p)
                    if (o.leq(x, y)) mask |= std::uint64_t{1} << p;
            table.masks.push_back(mask);
        }
        return oracle_run(m, n, kind, table, &orders, nullptr);
    }
    if (kind == Kind::tournament) {
        if (m > 4) throw std::invalid_argument("brute_force_oracle: tournaments need m <= 4");
        const auto tours = all_tournaments(m);
        for (const auto& t : tours) {
            std::uint64_t mask = 0;
            int p = 0;
            for (int x = 0; x < m; ++x)
                for (int y = x + 1; y < m; ++y, ++p)
                    if (t.arc(x, y)) mask |= std::uint64_t{1} << p;
            table.masks.push_back(mask);
        }
        return oracle_run(m, n, kind, table, nullptr, &tours);
    }
    throw std::invalid_argument("brute_force_oracle: kind must be linear or tournament");
}

Family best_known_upper_family(int m) {
    if (m < 2) throw std::invalid_argument("best_known_upper_family: m must be >= 2");
    if (m == 2) {
        Family fam = Family::of_orders(2, {LinearOrder::natural(2)});
        if (!is_separating(fam)) throw std::logic_error("best_known_upper_family: bad base");
        return fam;
    }
    if (m <= 5) return cyclic_family(m);
    Family fam = separating_family_6();
    for (int cur = 6; cur < m; ++cur) fam = extend_family(fam);
    return fam;
}

namespace {

struct BudgetTracker {
    const SearchBudget& budget;
    Clock::time_point start = Clock::now();
    std::uint64_t used_nodes = 0;

    std::optional<SearchBudget> remaining() const {
        if (used_nodes >= budget.max_nodes) return std::nullopt;
        const double left = budget.max_seconds - elapsed_seconds(start);
        if (!(left > 0)) return std::nullopt;
        SearchBudget r = budget;
        r.max_nodes = budget.max_nodes - used_nodes;
        r.max_seconds = left;
        return r;
    }
};

}  // namespace

HValue h_lin_exact(int m, const SearchBudget& budget) {
    if (m < 2) throw std::invalid_argument("h_lin_exact: m must be >= 2");
    validate_budget(budget);
    const int lower = separation_lower_bound(m);
    Family upper_fam = best_known_upper_family(m);
    const int upper = upper_fam.size();
    BudgetTracker tracker{budget};

    HValue result{m, lower, upper, std::nullopt, upper_fam, "", 0, false};

    for (int n = lower; n <= upper; ++n) {
        auto rem = tracker.remaining();
        if (!rem) {
            result.budget_exceeded = true;
            if (n == upper) {
                // everything below n was exhausted by complete search
                result.exact = upper;
                result.certificate = n == lower ? "construction+lower-bound"
                                                : "search+construction";
            } else {
                result.lower = n;
                result.certificate = "bracket";
            }
            result.nodes = tracker.used_nodes;
            return result;
        }
        SearchOutcome out = exists_separating_lin(m, n, *rem);
        tracker.used_nodes += out.nodes;
        if (out.status == SearchStatus::found) {
            result.exact = n;
            result.upper = n;
            result.witness = std::move(*out.witness);
            result.certificate = "search";
            result.nodes = tracker.used_nodes;
            return result;
        }
        if (out.status == SearchStatus::exhausted_none) {
            if (n == upper)
                throw std::logic_error("h_lin_exact: exhaustion contradicts a verified witness");
            continue;
        }
        // budget exceeded inside the search
        result.budget_exceeded = true;
        if (n == upper) {
            result.exact = upper;
            result.certificate = n == lower ? "construction+lower-bound" : "search+construction";
        } else {
            result.lower = n;
            result.certificate = "bracket";
        }
        result.nodes = tracker.used_nodes;
        return result;
    }
    throw std::logic_error("h_lin_exact: unreachable");
}

HValue h_tour_exact(int m, const SearchBudget& budget) {
    if (m < 2) throw std::invalid_argument("h_tour_exact: m must be >= 2");
    validate_budget(budget);
    const int value = separation_lower_bound(m);
    Family witness = optimal_tournament_family(m);
    HValue result{m, value, value, value, std::move(witness), "construction+lower-bound", 0, false};
    if (m <= 4) {
        SearchOutcome confirm = brute_force_oracle(m, value - 1, Kind::tournament);
        result.nodes = confirm.nodes;
        if (confirm.status != SearchStatus::exhausted_none)
            throw std::logic_error("h_tour_exact: oracle contradicts the lower bound");
        result.certificate = "construction+oracle";
    }
    return result;
}

}  // namespace rigidsep
