#include "rigidsep/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace rigidsep {

using nlohmann::json;

nlohmann::json family_to_json(const Family& fam) {
    json j;
    j["m"] = fam.ground_size();
    j["kind"] = kind_name(fam.kind());
    json members = json::array();
    const int m = fam.ground_size();
    switch (fam.kind()) {
        case Kind::linear:
            for (const auto& o : fam.orders()) {
                json arr = json::array();
                for (int i = 0; i < m; ++i) arr.push_back(o.at(i) + 1);  // 1-based
                members.push_back(std::move(arr));
            }
            break;
        case Kind::tournament:
            for (const auto& t : fam.tournaments()) {
                json rows = json::array();
                for (int x = 0; x < m; ++x) {
                    json row = json::array();
                    for (int y = 0; y < m; ++y) row.push_back(x != y && t.arc(x, y) ? 1 : 0);
                    rows.push_back(std::move(row));
                }
                members.push_back(std::move(rows));
            }
            break;
        case Kind::relation:
            for (const auto& r : fam.relations()) {
                json rows = json::array();
                for (int x = 0; x < m; ++x) {
                    json row = json::array();
                    for (int y = 0; y < m; ++y) row.push_back(r.at(x, y) ? 1 : 0);
                    rows.push_back(std::move(row));
                }
                members.push_back(std::move(rows));
            }
            break;
    }
    j["members"] = std::move(members);
    return j;
}

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("family json: " + what);
}

int get_cell(const json& row, int y) {
    const auto& c = row.at(y);
    if (!c.is_number_integer()) fail("matrix cell must be an integer");
    int v = c.get<int>();
    if (v != 0 && v != 1) fail("matrix cell must be 0 or 1");
    return v;
}

std::vector<std::vector<int>> get_matrix(const json& member, int m) {
    if (!member.is_array() || static_cast<int>(member.size()) != m)
        fail("matrix member must have m rows");
    std::vector<std::vector<int>> mat(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x) {
        const auto& row = member.at(x);
        if (!row.is_array() || static_cast<int>(row.size()) != m)
            fail("matrix row must have m entries");
        for (int y = 0; y < m; ++y) mat[x][y] = get_cell(row, y);
    }
    return mat;
}

}  // namespace

Family family_from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail("document must be an object");
    if (!j.contains("m") || !j.at("m").is_number_integer()) fail("missing integer field \"m\"");
    const int m = j.at("m").get<int>();
    if (m < 0) fail("\"m\" must be non-negative");
    if (!j.contains("kind") || !j.at("kind").is_string()) fail("missing string field \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (!j.contains("members") || !j.at("members").is_array())
        fail("missing array field \"members\"");
    const auto& members = j.at("members");

    if (kind == "linear") {
        std::vector<LinearOrder> orders;
        orders.reserve(members.size());
        for (const auto& mem : members) {
            if (!mem.is_array() || static_cast<int>(mem.size()) != m)
                fail("linear member must be a length-m array");
            std::vector<int> perm(m);
            for (int i = 0; i < m; ++i) {
                if (!mem.at(i).is_number_integer()) fail("linear member entries must be integers");
                perm[i] = mem.at(i).get<int>() - 1;  // 1-based on the wire
            }
            try {
                orders.emplace_back(std::move(perm));
            } catch (const std::invalid_argument& e) {
                fail(std::string("linear member is not a permutation of 1..m (") + e.what() + ")");
            }
        }
        return Family::of_orders(m, std::move(orders));
    }

    if (kind == "tournament") {
        std::vector<Tournament> tours;
        tours.reserve(members.size());
        for (const auto& mem : members) {
            auto mat = get_matrix(mem, m);
            Tournament t(m);
            for (int x = 0; x < m; ++x) {
                if (mat[x][x] != 0) fail("tournament matrix must be irreflexive");
                for (int y = x + 1; y < m; ++y) {
                    if (mat[x][y] + mat[y][x] != 1)
                        fail("tournament matrix must orient every pair exactly once");
                    if (mat[x][y]) t.set_arc(x, y);
                    else t.set_arc(y, x);
                }
            }
            tours.push_back(std::move(t));
        }
        return Family::of_tournaments(m, std::move(tours));
    }

    if (kind == "relation") {
        std::vector<BinaryRelation> rels;
        rels.reserve(members.size());
        for (const auto& mem : members) {
            auto mat = get_matrix(mem, m);
            bool reflexive = m > 0 && mat[0][0] == 1;
            for (int x = 0; x < m; ++x)
                if (mat[x][x] != (reflexive ? 1 : 0))
                    fail("relation diagonal must be uniformly 0 or uniformly 1");
            BinaryRelation r(m, reflexive);
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y)
                    if (x != y) r.set(x, y, mat[x][y] == 1);
            rels.push_back(std::move(r));
        }
        return Family::of_relations(m, std::move(rels));
    }

    fail("\"kind\" must be \"linear\", \"tournament\" or \"relation\"");
}

Family load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("json parse error: ") + e.what());
    }
    return family_from_json(j);
}

void save_family(const Family& fam, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << family_to_json(fam).dump(2) << '\n';
}

}  // namespace rigidsep
