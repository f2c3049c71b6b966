#include "rigidsep/sat.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rigidsep/constructions.hpp"
#include "rigidsep/profiles.hpp"

namespace rigidsep {

namespace {

int pair_count(int m) { return m * (m - 1) / 2; }

int pair_index(int m, int x, int y) {  // x < y
    return x * (2 * m - x - 1) / 2 + (y - x - 1);
}

struct OrderedPairRef {
    int x, y;
};

std::vector<OrderedPairRef> increasing_pairs(int m) {
    std::vector<OrderedPairRef> v;
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) v.push_back({x, y});
    return v;
}

std::vector<OrderedPairRef> all_ordered_pairs(int m) {
    std::vector<OrderedPairRef> v;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (x != y) v.push_back({x, y});
    return v;
}

}  // namespace

int CnfInstance::order_var(int k, int i, int j) const {
    if (i >= j) throw std::invalid_argument("order_var: need i < j");
    return k * pair_count(m) + pair_index(m, i, j) + 1;
}

int CnfInstance::order_literal(int k, int i, int j) const {
    if (i == j) throw std::invalid_argument("order_literal: diagonal");
    return i < j ? order_var(k, i, j) : -order_var(k, j, i);
}

CnfSize predicted_cnf_size(int m, int n, const EncodeOptions& options) {
    if (m < 2 || n < 1) throw std::invalid_argument("predicted_cnf_size: need m >= 2, n >= 1");
    const std::uint64_t p2 = pair_count(m);
    const std::uint64_t triples = binomial(m, 3);
    CnfSize s;
    if (options.fix_first_identity) {
        const std::uint64_t pairpairs = p2 * (p2 - 1) / 2;
        s.vars = static_cast<std::uint64_t>(n) * p2 + static_cast<std::uint64_t>(n - 1) * pairpairs;
        s.clauses = p2                                   // identity units
                    + 2 * static_cast<std::uint64_t>(n) * triples
                    + 4 * static_cast<std::uint64_t>(n - 1) * pairpairs;
        if (n >= 2) {
            s.clauses += pairpairs;  // coverings
        } else if (pairpairs > 0) {
            s.vars += 1;  // contradiction marker
            s.clauses += 2;
        }
    } else {
        const std::uint64_t p = static_cast<std::uint64_t>(m) * (m - 1);
        const std::uint64_t constrained = p * (p - 1) / 2 - p2;  // minus reverse mates
        s.vars = static_cast<std::uint64_t>(n) * p2 + static_cast<std::uint64_t>(n) * constrained;
        s.clauses = 2 * static_cast<std::uint64_t>(n) * triples
                    + 4 * static_cast<std::uint64_t>(n) * constrained + constrained;
    }
    return s;
}

CnfInstance encode(int m, int n, const EncodeOptions& options) {
    if (m < 2 || n < 1) throw std::invalid_argument("encode: need m >= 2, n >= 1");
    const int p2 = pair_count(m);
    CnfInstance inst;
    inst.m = m;
    inst.n = n;
    inst.options = options;
    inst.var_count = n * p2;

    auto fresh = [&]() { return ++inst.var_count; };

    // identity units
    if (options.fix_first_identity)
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y)
                inst.clauses.push_back({inst.order_var(0, x, y)});

    // transitivity: forbid both directed 3-cycles of every triple
    for (int k = 0; k < n; ++k) {
        for (int a = 0; a < m; ++a) {
            for (int b = a + 1; b < m; ++b) {
                for (int c = b + 1; c < m; ++c) {
                    const int x = inst.order_var(k, a, b);
                    const int y = inst.order_var(k, b, c);
                    const int z = inst.order_var(k, a, c);
                    inst.clauses.push_back({-x, -y, z});
                    inst.clauses.push_back({x, y, -z});
                }
            }
        }
    }

    auto add_xor = [&](int k, const OrderedPairRef& u, const OrderedPairRef& w) {
        const int la = inst.order_literal(k, u.x, u.y);
        const int lb = inst.order_literal(k, w.x, w.y);
        const int d = fresh();
        inst.aux_vars.push_back({d, k, u.x, u.y, w.x, w.y});
        inst.clauses.push_back({-d, la, lb});
        inst.clauses.push_back({-d, -la, -lb});
        inst.clauses.push_back({d, -la, lb});
        inst.clauses.push_back({d, la, -lb});
        return d;
    };

    if (options.fix_first_identity) {
        // order 0 pinned: increasing pairs all carry bit 1 there, so
        // distinctness reduces to orders 1..n-1
        const auto pairs = increasing_pairs(m);
        bool need_contradiction = false;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                if (n == 1) {
                    need_contradiction = true;
                    continue;
                }
                std::vector<int> covering;
                covering.reserve(n - 1);
                for (int k = 1; k < n; ++k) covering.push_back(add_xor(k, pairs[i], pairs[j]));
                inst.clauses.push_back(std::move(covering));
            }
        }
        if (need_contradiction) {
            inst.contradiction_var = fresh();
            inst.clauses.push_back({inst.contradiction_var});
            inst.clauses.push_back({-inst.contradiction_var});
        }
    } else {
        const auto pairs = all_ordered_pairs(m);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                if (pairs[i].x == pairs[j].y && pairs[i].y == pairs[j].x)
                    continue;  // reverse mates: profiles complementary by construction
                std::vector<int> covering;
                covering.reserve(n);
                for (int k = 0; k < n; ++k) covering.push_back(add_xor(k, pairs[i], pairs[j]));
                inst.clauses.push_back(std::move(covering));
            }
        }
    }

    const CnfSize expected = predicted_cnf_size(m, n, options);
    if (expected.vars != static_cast<std::uint64_t>(inst.var_count) ||
        expected.clauses != inst.clauses.size())
        throw std::logic_error("encode: generated size disagrees with the closed form");
    return inst;
}

void write_dimacs(const CnfInstance& inst, std::ostream& out) {
    out << "c separating linear orders: m=" << inst.m << " n=" << inst.n
        << " mode=" << (inst.options.fix_first_identity ? "fixed-first" : "full") << "\n";
    out << "c elements are 1-based; o(k,i,j) true means i before j in order k\n";
    for (int k = 0; k < inst.n; ++k)
        for (int x = 0; x < inst.m; ++x)
            for (int y = x + 1; y < inst.m; ++y)
                out << "c var " << inst.order_var(k, x, y) << " = o(" << k << "," << x + 1 << ","
                    << y + 1 << ")\n";
    for (const auto& a : inst.aux_vars)
        out << "c var " << a.id << " = diff(k=" << a.k << ",(" << a.x1 + 1 << "," << a.y1 + 1
            << "),(" << a.x2 + 1 << "," << a.y2 + 1 << "))\n";
    if (inst.contradiction_var != 0)
        out << "c var " << inst.contradiction_var << " = false_marker\n";
    out << "p cnf " << inst.var_count << " " << inst.clauses.size() << "\n";
    for (const auto& clause : inst.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
}

ModelText parse_model_text(std::istream& in) {
    ModelText result;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        std::string rest_first = first;
        if (first == "s" || first == "v") {
            if (first == "s") {
                std::string status;
                ls >> status;
                if (status.find("UNSAT") != std::string::npos) result.unsat_claimed = true;
                continue;
            }
            if (!(ls >> rest_first)) continue;
        }
        if (rest_first.find("UNSAT") != std::string::npos) {
            result.unsat_claimed = true;
            continue;
        }
        if (rest_first == "SAT" || rest_first == "SATISFIABLE") continue;
        // literal tokens
        try {
            int lit = std::stoi(rest_first);
            if (lit != 0) result.literals.push_back(lit);
        } catch (const std::exception&) {
            continue;  // unknown token, skip line remainder
        }
        int lit;
        while (ls >> lit)
            if (lit != 0) result.literals.push_back(lit);
    }
    return result;
}

Family decode(const CnfInstance& inst, const std::vector<int>& model_literals) {
    std::vector<signed char> value(inst.var_count + 1, -1);
    for (int lit : model_literals) {
        const int v = lit > 0 ? lit : -lit;
        if (v == 0 || v > inst.var_count)
            throw std::invalid_argument("decode: literal outside the variable range");
        value[v] = lit > 0 ? 1 : 0;
    }

    const int m = inst.m;
    std::vector<LinearOrder> orders;
    orders.reserve(inst.n);
    for (int k = 0; k < inst.n; ++k) {
        std::vector<std::vector<bool>> before(m, std::vector<bool>(m, false));
        for (int x = 0; x < m; ++x) {
            for (int y = x + 1; y < m; ++y) {
                const signed char v = value[inst.order_var(k, x, y)];
                if (v < 0)
                    throw std::invalid_argument("decode: model does not assign every order variable");
                before[x][y] = v == 1;
                before[y][x] = v == 0;
            }
        }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c)
                    if (a != b && b != c && a != c && before[a][b] && before[b][c] &&
                        !before[a][c])
                        throw std::domain_error(
                            "decode: model induces a non-transitive relation");
        // a transitive tournament has distinct out-degrees m-1 .. 0
        std::vector<int> perm(m, -1);
        for (int x = 0; x < m; ++x) {
            int wins = 0;
            for (int y = 0; y < m; ++y) wins += (x != y && before[x][y]) ? 1 : 0;
            perm[m - 1 - wins] = x;
        }
        orders.emplace_back(std::move(perm));
    }

    Family fam = Family::of_orders(m, std::move(orders));
    if (!is_separating(fam))
        throw std::logic_error("decode: decoded family fails separation (encoding bug)");
    return fam;
}

}  // namespace rigidsep
