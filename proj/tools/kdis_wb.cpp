// kdis-wb: command-line front end of the k-DIS workbench.
//
// Talks to the core exclusively through the C API (kdis/kdis_c.h).
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parse error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kdis/kdis_c.h"

namespace {

using nlohmann::json;

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { kdisw_string_free(s); }
};

struct GraphGuard {
    kdisw_graph* g = nullptr;
    ~GraphGuard() { kdisw_graph_free(g); }
};

int report_error(kdisw_status st) {
    std::cerr << "error (" << kdisw_status_name(st) << "): " << kdisw_last_error();
    if (st == KDISW_ERR_PARSE && kdisw_last_error_offset() >= 0)
        std::cerr << " [byte offset " << kdisw_last_error_offset() << "]";
    std::cerr << "\n";
    return st == KDISW_ERR_PARSE || st == KDISW_ERR_INVALID_ARGUMENT ? 2 : 1;
}

std::string set_to_string(uint64_t set) {
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < 64; ++v)
        if ((set >> v) & 1) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
    return out + "}";
}

int count_one(const std::string& g6, int k, bool list, bool as_json) {
    GraphGuard g;
    kdisw_status st = kdisw_graph_from_g6(g6.c_str(), &g.g);
    if (st != KDISW_OK) return report_error(st);
    long long count = 0;
    st = kdisw_count_kdis(g.g, k, &count);
    if (st != KDISW_OK) return report_error(st);
    if (as_json) {
        json j;
        j["graph6"] = g6;
        j["k"] = k;
        j["count"] = count;
        if (list) {
            uint64_t* sets = nullptr;
            size_t n = 0;
            st = kdisw_enumerate_kdis(g.g, k, &sets, &n);
            if (st != KDISW_OK) return report_error(st);
            json arr = json::array();
            for (size_t i = 0; i < n; ++i) arr.push_back(set_to_string(sets[i]));
            kdisw_sets_free(sets);
            j["sets"] = arr;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << g6 << " " << count << "\n";
        if (list) {
            uint64_t* sets = nullptr;
            size_t n = 0;
            st = kdisw_enumerate_kdis(g.g, k, &sets, &n);
            if (st != KDISW_OK) return report_error(st);
            for (size_t i = 0; i < n; ++i) std::cout << "  " << set_to_string(sets[i]) << "\n";
            kdisw_sets_free(sets);
        }
    }
    return 0;
}

void emit_line(const char* g6, void*) { std::cout << g6 << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kdis-wb: exact computation with k-dominating independent sets"};
    app.require_subcommand(1);

    // count
    std::string count_g6;
    int count_k = 1;
    bool count_list = false, count_json = false;
    auto* cmd_count = app.add_subcommand("count", "count the k-DISes of a graph6 graph ('-' reads lines from stdin)");
    cmd_count->add_option("graph6", count_g6, "graph6 string or '-'")->required();
    cmd_count->add_option("--k", count_k, "domination parameter")->check(CLI::PositiveNumber);
    cmd_count->add_flag("--list", count_list, "also print every set");
    cmd_count->add_flag("--json", count_json, "machine-readable output");

    // search
    int search_n = 0, search_k = 1, search_jobs = 0;
    std::string search_family = "all";
    bool search_json = false;
    auto* cmd_search = app.add_subcommand("search", "exhaustive per-order maximum of the k-DIS count");
    cmd_search->add_option("--n", search_n, "order")->required();
    cmd_search->add_option("--k", search_k, "domination parameter")->check(CLI::PositiveNumber);
    cmd_search->add_option("--family", search_family, "all|connected|triangle-free|tree");
    cmd_search->add_option("--jobs", search_jobs, "worker threads (0 = auto)");
    cmd_search->add_flag("--json", search_json, "machine-readable output");

    // m
    int m_k = 0, m_t = 0, m_budget = 9, m_jobs = 0;
    bool m_json = false;
    auto* cmd_m = app.add_subcommand("m", "smallest order with at least t k-DISes");
    cmd_m->add_option("--k", m_k, "domination parameter")->required();
    cmd_m->add_option("--t", m_t, "target k-DIS count")->required();
    cmd_m->add_option("--n-budget", m_budget, "largest order to search");
    cmd_m->add_option("--jobs", m_jobs, "worker threads (0 = auto)");
    cmd_m->add_flag("--json", m_json, "machine-readable output");

    // product
    std::string prod_kind, prod_a, prod_b;
    bool prod_json = false;
    auto* cmd_product = app.add_subcommand("product", "lexicographic or tensor product of two graphs");
    cmd_product->add_option("kind", prod_kind, "lex|tensor")->required();
    cmd_product->add_option("a", prod_a, "first graph (graph6)")->required();
    cmd_product->add_option("b", prod_b, "second graph (graph6)")->required();
    cmd_product->add_flag("--json", prod_json, "machine-readable output");

    // generate
    int gen_n = 0;
    std::string gen_family = "all";
    auto* cmd_generate = app.add_subcommand("generate", "stream one graph6 line per isomorphism class");
    cmd_generate->add_option("--n", gen_n, "order")->required();
    cmd_generate->add_option("--family", gen_family, "all|connected|triangle-free|tree");

    // sweep
    std::string sweep_fn;
    long long sweep_lo = 3, sweep_hi = 1000;
    double sweep_eps = 0.053, sweep_beta = 0.8;
    int sweep_jobs = 0;
    bool sweep_json = false, sweep_csv = false;
    auto* cmd_sweep = app.add_subcommand("sweep", "evaluate a bound function on an integer k range");
    cmd_sweep->add_option("--fn", sweep_fn, "f0|f1|f2|f3")->required();
    cmd_sweep->add_option("--k-lo", sweep_lo, "first k");
    cmd_sweep->add_option("--k-hi", sweep_hi, "last k");
    cmd_sweep->add_option("--eps", sweep_eps, "epsilon");
    cmd_sweep->add_option("--beta", sweep_beta, "beta");
    cmd_sweep->add_option("--jobs", sweep_jobs, "worker threads (0 = auto)");
    cmd_sweep->add_flag("--json", sweep_json, "machine-readable report");
    cmd_sweep->add_flag("--csv", sweep_csv, "per-k CSV instead of the summary");

    // verify
    std::string verify_suite;
    int verify_n_max = -1, verify_budget = -1, verify_jobs = 0;
    bool verify_json = false;
    auto* cmd_verify = app.add_subcommand("verify", "run a named verification suite");
    cmd_verify->add_option("suite", verify_suite, "suite name or 'all'")->required();
    cmd_verify->add_option("--n-max", verify_n_max, "order cap for exhaustive searches");
    cmd_verify->add_option("--n-budget", verify_budget, "order budget for m(k,t)");
    cmd_verify->add_option("--jobs", verify_jobs, "worker threads (0 = auto)");
    cmd_verify->add_flag("--json", verify_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    if (cmd_count->parsed()) {
        if (count_g6 == "-") {
            std::string line;
            int rc = 0;
            while (std::getline(std::cin, line)) {
                if (line.empty()) continue;
                int r = count_one(line, count_k, count_list, count_json);
                if (r != 0) rc = r;
            }
            return rc;
        }
        return count_one(count_g6, count_k, count_list, count_json);
    }

    if (cmd_search->parsed()) {
        StringGuard out;
        kdisw_status st = kdisw_search_json(search_n, search_k, search_family.c_str(), search_jobs, &out.s);
        if (st != KDISW_OK) return report_error(st);
        if (search_json) {
            std::cout << out.s << "\n";
        } else {
            json j = json::parse(out.s);
            std::cout << "mi_" << search_k << "(" << search_n << ", " << search_family
                      << ") = " << j["optimum"] << "  [" << j["graphs_examined"]
                      << " classes examined]\n";
            for (const auto& w : j["witnesses"]) std::cout << "  witness " << w.get<std::string>() << "\n";
            if (j["witnesses_total"].get<long long>() > static_cast<long long>(j["witnesses"].size()))
                std::cout << "  (" << j["witnesses_total"] << " witnesses total, list truncated)\n";
        }
        return 0;
    }

    if (cmd_m->parsed()) {
        StringGuard out;
        kdisw_status st = kdisw_m_value_json(m_k, m_t, m_budget, m_jobs, &out.s);
        if (st != KDISW_OK) return report_error(st);
        if (m_json) {
            std::cout << out.s << "\n";
            return 0;
        }
        json j = json::parse(out.s);
        if (j["status"] == "ok") {
            std::cout << "m(" << m_k << "," << m_t << ") = " << j["m_value"] << "  witness "
                      << j["witness"].get<std::string>() << "\n";
        } else {
            std::cout << "m(" << m_k << "," << m_t << ") > " << j["searched_up_to"]
                      << " (inconclusive within budget)\n";
        }
        return 0;
    }

    if (cmd_product->parsed()) {
        GraphGuard a, b, p;
        kdisw_status st = kdisw_graph_from_g6(prod_a.c_str(), &a.g);
        if (st != KDISW_OK) return report_error(st);
        st = kdisw_graph_from_g6(prod_b.c_str(), &b.g);
        if (st != KDISW_OK) return report_error(st);
        if (prod_kind == "lex")
            st = kdisw_graph_lexicographic_product(a.g, b.g, &p.g);
        else if (prod_kind == "tensor")
            st = kdisw_graph_tensor_product(a.g, b.g, &p.g);
        else {
            std::cerr << "error: product kind must be lex or tensor\n";
            return 2;
        }
        if (st != KDISW_OK) return report_error(st);
        StringGuard g6;
        st = kdisw_graph_to_g6(p.g, &g6.s);
        if (st != KDISW_OK) return report_error(st);
        if (prod_json) {
            int n = 0;
            long long edges = 0;
            kdisw_graph_order(p.g, &n);
            kdisw_graph_edge_count(p.g, &edges);
            json j;
            j["kind"] = prod_kind;
            j["graph6"] = g6.s;
            j["n"] = n;
            j["edges"] = edges;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << g6.s << "\n";
        }
        return 0;
    }

    if (cmd_generate->parsed()) {
        kdisw_status st = kdisw_generate(gen_n, gen_family.c_str(), emit_line, nullptr);
        if (st != KDISW_OK) return report_error(st);
        return 0;
    }

    if (cmd_sweep->parsed()) {
        if (sweep_csv) {
            StringGuard out;
            kdisw_status st =
                kdisw_sweep_csv(sweep_fn.c_str(), sweep_lo, sweep_hi, sweep_eps, sweep_beta, &out.s);
            if (st != KDISW_OK) return report_error(st);
            std::cout << out.s;
            return 0;
        }
        StringGuard out;
        kdisw_status st = kdisw_sweep_json(sweep_fn.c_str(), sweep_lo, sweep_hi, sweep_eps, sweep_beta,
                                           sweep_jobs, &out.s);
        if (st != KDISW_OK) return report_error(st);
        if (sweep_json) {
            std::cout << out.s << "\n";
        } else {
            json j = json::parse(out.s);
            std::cout << j["fn"].get<std::string>() << " on [" << j["k_lo"] << "," << j["k_hi"]
                      << "]: min " << j["min_value"] << " at k=" << j["argmin_k"] << ", "
                      << (j["all_positive"].get<bool>() ? "all positive" : "NOT all positive") << "\n";
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        kdisw_verify_options opts{verify_jobs, verify_n_max, verify_budget};
        StringGuard out;
        int ok = 0;
        kdisw_status st = kdisw_verify_json(verify_suite.c_str(), &opts, &out.s, &ok);
        if (st != KDISW_OK) return report_error(st);
        if (verify_json) {
            std::cout << out.s << "\n";
        } else {
            json j = json::parse(out.s);
            std::size_t widest = 4;
            for (const auto& c : j["checks"])
                widest = std::max(widest, c["name"].get<std::string>().size());
            for (const auto& c : j["checks"]) {
                std::string name = c["name"].get<std::string>();
                std::printf("%-6s %-*s expected %-14s got %s\n",
                            c["pass"].get<bool>() ? "PASS" : "FAIL", static_cast<int>(widest),
                            name.c_str(), c["expected"].get<std::string>().c_str(),
                            c["actual"].get<std::string>().c_str());
            }
            std::printf("%lld of %lld checks passed\n", j["passed"].get<long long>(),
                        j["passed"].get<long long>() + j["failed"].get<long long>());
        }
        return ok ? 0 : 1;
    }

    return 2;
}
