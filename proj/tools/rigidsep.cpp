#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigidsep/constructions.hpp"
#include "rigidsep/json_io.hpp"
#include "rigidsep/profiles.hpp"
#include "rigidsep/relations.hpp"
#include "rigidsep/sat.hpp"
#include "rigidsep/search.hpp"

namespace {

using nlohmann::json;
using namespace rigidsep;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitMalformedInput = 2;
constexpr int kExitBudgetExhausted = 3;

int default_threads() {
    if (const char* env = std::getenv("RIGIDSEP_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

void emit(const std::string& text, const std::optional<std::string>& path) {
    if (path) {
        std::ofstream out(*path);
        if (!out) throw std::invalid_argument("cannot open output file: " + *path);
        out << text;
    } else {
        std::cout << text;
    }
}

struct VerifyReport {
    bool separation_applicable = false;
    bool separating = false;
    std::optional<std::pair<OrderedPair, OrderedPair>> collision;
    bool rigid_definitional = false;
    bool rigid_antichain = false;
    int checkers = 0;
    int agreeing = 0;
    bool ok = false;
};

VerifyReport run_checks(const Family& fam) {
    VerifyReport r;
    r.rigid_definitional = is_hereditarily_rigid_definitional(fam);
    r.rigid_antichain = is_hereditarily_rigid_antichain(fam);
    if (fam.kind() == Kind::relation) {
        r.checkers = 2;
        r.agreeing = r.rigid_definitional == r.rigid_antichain ? 2 : 1;
        r.ok = r.rigid_definitional && r.rigid_antichain && r.agreeing == 2;
        return r;
    }
    r.separation_applicable = true;
    SeparationCheck sep = check_separating(fam);
    r.separating = sep.separating;
    r.collision = sep.collision;
    r.checkers = 3;
    const bool all_equal =
        r.separating == r.rigid_definitional && r.separating == r.rigid_antichain;
    r.agreeing = all_equal ? 3 : (r.rigid_definitional == r.rigid_antichain ||
                                          r.separating == r.rigid_definitional ||
                                          r.separating == r.rigid_antichain
                                      ? 2
                                      : 1);
    r.ok = r.separating && all_equal;
    return r;
}

std::string profile_string(const Family& fam, int x, int y) {
    return profile(fam, x, y).to_string();
}

int cmd_verify(const std::string& file, bool as_json) {
    Family fam = load_family(file);
    VerifyReport r = run_checks(fam);
    const bool rigid = r.rigid_definitional && r.rigid_antichain;
    if (as_json) {
        json j;
        j["kind"] = kind_name(fam.kind());
        j["m"] = fam.ground_size();
        j["members"] = fam.size();
        j["separating"] = r.separation_applicable ? json(r.separating) : json(nullptr);
        if (r.collision) {
            const auto& [a, b] = *r.collision;
            j["collision"] = {{a.x + 1, a.y + 1}, {b.x + 1, b.y + 1}};
        } else {
            j["collision"] = nullptr;
        }
        j["hereditarily_rigid"] = rigid;
        j["checkers"] = {{"definitional", r.rigid_definitional},
                         {"antichain", r.rigid_antichain}};
        if (r.separation_applicable) j["checkers"]["separating"] = r.separating;
        j["checkers_agree"] = r.agreeing == r.checkers;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "kind: " << kind_name(fam.kind()) << "\n";
        std::cout << "m: " << fam.ground_size() << "\n";
        std::cout << "members: " << fam.size() << "\n";
        if (r.separation_applicable) {
            std::cout << "separating: " << (r.separating ? "true" : "false")
                      << "; hereditarily rigid: " << (rigid ? "true" : "false") << " ("
                      << r.agreeing << "/" << r.checkers << " checkers agree)\n";
            if (r.collision) {
                const auto& [a, b] = *r.collision;
                std::cout << "collision: pairs (" << a.x + 1 << "," << a.y + 1 << ") and ("
                          << b.x + 1 << "," << b.y + 1 << ") share profile "
                          << profile_string(fam, a.x, a.y) << "\n";
            }
        } else {
            std::cout << "separating: n/a (general relations)\n";
            std::cout << "hereditarily rigid: " << (rigid ? "true" : "false") << " ("
                      << r.agreeing << "/" << r.checkers << " checkers agree)\n";
        }
    }
    return r.ok || (!r.separation_applicable && rigid) ? kExitOk : kExitVerificationFailure;
}

int cmd_construct(const std::string& kind, int m, int mu, int kappa, bool verify,
                  const std::optional<std::string>& out_path) {
    std::optional<Family> fam;
    if (kind == "cyclic") fam = cyclic_family(m);
    else if (kind == "witness6") fam = separating_family_6();
    else if (kind == "tournament-optimal") fam = optimal_tournament_family(m);
    else if (kind == "sperner") fam = sperner_rigid_family(mu, kappa);
    else throw std::invalid_argument("unknown construction kind: " + kind);

    emit(family_to_json(*fam).dump(2) + "\n", out_path);
    if (verify) {
        std::ostream& cert = out_path ? std::cout : std::cerr;
        if (fam->kind() == Kind::relation) {
            const bool rigid = is_hereditarily_rigid_definitional(*fam) &&
                               is_hereditarily_rigid_antichain(*fam);
            cert << "hereditarily rigid: " << (rigid ? "true" : "false")
                 << " (2/2 checkers agree)\n";
            if (!rigid) return kExitVerificationFailure;
        } else {
            const bool sep = is_separating(*fam);
            cert << "separating: " << (sep ? "true" : "false") << "\n";
            if (!sep) return kExitVerificationFailure;
        }
    }
    return kExitOk;
}

int cmd_extend(const std::string& file, bool verify,
               const std::optional<std::string>& out_path) {
    Family fam = load_family(file);
    Family extended = extend_family(fam);
    emit(family_to_json(extended).dump(2) + "\n", out_path);
    if (verify) {
        std::ostream& cert = out_path ? std::cout : std::cerr;
        const bool sep = is_separating(extended);
        cert << "separating: " << (sep ? "true" : "false") << "\n";
        if (!sep) return kExitVerificationFailure;
    }
    return kExitOk;
}

json outcome_to_json(const SearchOutcome& out) {
    json j;
    j["status"] = search_status_name(out.status);
    if (out.witness) j["witness"] = family_to_json(*out.witness);
    j["nodes"] = out.nodes;
    j["seconds"] = out.seconds;
    return j;
}

json hvalue_to_json(const HValue& h) {
    json j;
    j["m"] = h.m;
    j["status"] = h.exact ? "exact" : "bracket";
    j["lower"] = h.lower;
    j["upper"] = h.upper;
    if (h.exact) j["value"] = *h.exact;
    j["witness"] = family_to_json(h.witness);
    j["certificate"] = h.certificate;
    j["nodes"] = h.nodes;
    j["budget_exceeded"] = h.budget_exceeded;
    return j;
}

int cmd_search(int m, std::optional<int> n, const SearchBudget& budget, bool oracle,
               bool no_symmetry, const std::string& kind_str) {
    Kind kind = Kind::linear;
    if (kind_str == "tournament") kind = Kind::tournament;
    else if (kind_str != "linear") throw std::invalid_argument("search: kind must be linear or tournament");

    if (n) {
        SearchOutcome out;
        if (oracle) {
            out = brute_force_oracle(m, *n, kind);
        } else if (kind == Kind::tournament) {
            throw std::invalid_argument(
                "search: tournament existence queries run through --oracle");
        } else {
            SymmetryOptions sym = no_symmetry ? SymmetryOptions::none() : SymmetryOptions{};
            out = exists_separating_lin(m, *n, budget, sym);
        }
        std::cout << outcome_to_json(out).dump(2) << '\n';
        return out.status == SearchStatus::budget_exceeded ? kExitBudgetExhausted : kExitOk;
    }

    const auto start = std::chrono::steady_clock::now();
    HValue h = kind == Kind::linear ? h_lin_exact(m, budget) : h_tour_exact(m, budget);
    json j = hvalue_to_json(h);
    j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << j.dump(2) << '\n';
    return h.exact ? kExitOk : kExitBudgetExhausted;
}

int cmd_encode(int m, int n, bool full, const std::optional<std::string>& out_path) {
    CnfInstance inst = encode(m, n, EncodeOptions{!full});
    std::ostringstream text;
    write_dimacs(inst, text);
    emit(text.str(), out_path);
    return kExitOk;
}

int cmd_decode(int m, int n, bool full, const std::string& model_path,
               const std::optional<std::string>& out_path) {
    CnfInstance inst = encode(m, n, EncodeOptions{!full});
    std::ifstream in(model_path);
    if (!in) throw std::invalid_argument("cannot open model file: " + model_path);
    ModelText model = parse_model_text(in);
    if (model.unsat_claimed)
        throw std::invalid_argument("model file reports UNSAT; nothing to decode");
    Family fam = decode(inst, model.literals);
    emit(family_to_json(fam).dump(2) + "\n", out_path);
    if (!out_path) std::cerr << "separating: true\n";
    else std::cout << "separating: true\n";
    return kExitOk;
}

int cmd_table(int max_m, bool as_json, const SearchBudget& budget) {
    json rows = json::array();
    std::ostringstream text;
    text << "  m  lower  upper  exact\n";
    for (int m = 2; m <= max_m; ++m) {
        HValue h = h_lin_exact(m, budget);
        json row;
        row["m"] = m;
        row["lower"] = h.lower;
        row["upper"] = h.upper;
        row["exact"] = h.exact ? json(*h.exact) : json(nullptr);
        row["certificate"] = h.certificate;
        rows.push_back(std::move(row));
        char buf[64];
        if (h.exact)
            std::snprintf(buf, sizeof buf, "%3d  %5d  %5d  %5d\n", m, h.lower, h.upper, *h.exact);
        else
            std::snprintf(buf, sizeof buf, "%3d  %5d  %5d  open [%d,%d]\n", m, h.lower, h.upper,
                          h.lower, h.upper);
        text << buf;
    }
    if (as_json) std::cout << rows.dump(2) << '\n';
    else std::cout << text.str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separating families of linear orders and tournaments"};
    app.require_subcommand(1);

    // verify
    std::string verify_file;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "check separation and hereditary rigidity");
    verify->add_option("file", verify_file, "family JSON file")->required();
    verify->add_flag("--json", verify_json, "machine-readable output");

    // construct
    std::string construct_kind;
    int construct_m = 0, construct_mu = 0, construct_kappa = 0;
    bool construct_verify = false;
    std::optional<std::string> construct_out;
    auto* construct = app.add_subcommand("construct", "emit a certified family");
    construct->add_option("kind", construct_kind,
                          "cyclic | witness6 | tournament-optimal | sperner")
        ->required();
    construct->add_option("--m", construct_m, "ground-set size (cyclic, tournament-optimal)");
    construct->add_option("--mu", construct_mu, "ground-set size (sperner)");
    construct->add_option("--kappa", construct_kappa, "number of relations (sperner)");
    construct->add_flag("--verify", construct_verify, "re-check and print a certificate line");
    construct->add_option("-o,--output", construct_out, "write family here instead of stdout");

    // extend
    std::string extend_file;
    bool extend_verify = false;
    std::optional<std::string> extend_out;
    auto* extend = app.add_subcommand("extend", "extend a separating family to m+1 points");
    extend->add_option("file", extend_file, "family JSON file")->required();
    extend->add_flag("--verify", extend_verify, "re-check and print a certificate line");
    extend->add_option("-o,--output", extend_out, "write family here instead of stdout");

    // search
    int search_m = 0;
    std::optional<int> search_n;
    SearchBudget search_budget;
    bool search_oracle = false, search_nosym = false;
    std::string search_kind = "linear";
    double search_seconds = 0;
    std::uint64_t search_nodes = 0;
    int search_threads = default_threads();
    auto* search = app.add_subcommand("search", "exact existence / h-value search");
    search->add_option("--m", search_m, "ground-set size")->required();
    search->add_option("--n", search_n, "family size (omit to compute the h-value)");
    search->add_option("--budget-nodes", search_nodes, "node budget (default unlimited)");
    search->add_option("--budget-seconds", search_seconds, "time budget (default unlimited)");
    search->add_option("--threads", search_threads,
                       "worker threads (default RIGIDSEP_THREADS or 1)");
    search->add_flag("--oracle", search_oracle, "force the plain brute-force oracle");
    search->add_flag("--no-symmetry", search_nosym, "disable all symmetry reductions");
    search->add_option("--kind", search_kind, "linear (default) or tournament");

    // encode
    int encode_m = 0, encode_n = 0;
    bool encode_full = false;
    std::optional<std::string> encode_out;
    auto* enc = app.add_subcommand("encode", "export the existence question as DIMACS CNF");
    enc->add_option("--m", encode_m, "ground-set size")->required();
    enc->add_option("--n", encode_n, "family size")->required();
    enc->add_flag("--full", encode_full, "unrestricted encoding (no fixed first order)");
    enc->add_option("-o,--output", encode_out, "write DIMACS here instead of stdout");

    // decode
    int decode_m = 0, decode_n = 0;
    bool decode_full = false;
    std::string decode_model;
    std::optional<std::string> decode_out;
    auto* dec = app.add_subcommand("decode", "decode and certify a solver model");
    dec->add_option("--m", decode_m, "ground-set size")->required();
    dec->add_option("--n", decode_n, "family size")->required();
    dec->add_flag("--full", decode_full, "model solves the unrestricted encoding");
    dec->add_option("--model", decode_model, "solver output file (v-lines or literals)")
        ->required();
    dec->add_option("-o,--output", decode_out, "write family here instead of stdout");

    // table
    int table_max = 0;
    bool table_json = false;
    std::uint64_t table_nodes = 1000000;
    double table_seconds = 0;
    int table_threads = default_threads();
    auto* table = app.add_subcommand("table", "lower/upper/exact h values for m = 2..max");
    table->add_option("max_m", table_max, "largest ground-set size")->required();
    table->add_flag("--json", table_json, "machine-readable output");
    table->add_option("--budget-nodes", table_nodes, "per-m search node budget");
    table->add_option("--budget-seconds", table_seconds, "per-m search time budget");
    table->add_option("--threads", table_threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(verify_file, verify_json);
        if (*construct)
            return cmd_construct(construct_kind, construct_m, construct_mu, construct_kappa,
                                 construct_verify, construct_out);
        if (*extend) return cmd_extend(extend_file, extend_verify, extend_out);
        if (*search) {
            if (search_nodes > 0) search_budget.max_nodes = search_nodes;
            if (search_seconds > 0) search_budget.max_seconds = search_seconds;
            search_budget.parallel_width = search_threads;
            return cmd_search(search_m, search_n, search_budget, search_oracle, search_nosym,
                              search_kind);
        }
        if (*enc) return cmd_encode(encode_m, encode_n, encode_full, encode_out);
        if (*dec) return cmd_decode(decode_m, decode_n, decode_full, decode_model, decode_out);
        if (*table) {
            SearchBudget budget;
            if (table_nodes > 0) budget.max_nodes = table_nodes;
            if (table_seconds > 0) budget.max_seconds = table_seconds;
            budget.parallel_width = table_threads;
            return cmd_table(table_max, table_json, budget);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformedInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformedInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformedInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    return kExitOk;
}
