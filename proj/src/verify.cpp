#include "kdis/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "kdis/bounds.hpp"
#include "kdis/canon.hpp"
#include "kdis/enumeration.hpp"
#include "kdis/generate.hpp"
#include "kdis/products.hpp"
#include "kdis/search.hpp"
#include "kdis/twins.hpp"

namespace kdis::verify {

namespace {

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void add(SuiteReport& rep, const std::string& name, const std::string& expected,
         const std::string& actual, bool pass) {
    rep.checks.push_back(Check{name, expected, actual, pass});
}

void add_eq(SuiteReport& rep, const std::string& name, long long expected, long long actual) {
    add(rep, name, std::to_string(expected), std::to_string(actual), expected == actual);
}

void add_true(SuiteReport& rep, const std::string& name, bool value, const std::string& actual = "") {
    add(rep, name, "true", actual.empty() ? (value ? "true" : "false") : actual, value);
}

std::multiset<std::vector<std::uint64_t>> canon_codes(const std::vector<std::string>& g6s) {
    std::multiset<std::vector<std::uint64_t>> out;
    for (const auto& s : g6s) out.insert(canonical_code(graph6_decode(s)));
    return out;
}

std::multiset<std::vector<std::uint64_t>> canon_codes(const std::vector<Graph>& gs) {
    std::multiset<std::vector<std::uint64_t>> out;
    for (const auto& g : gs) out.insert(canonical_code(g));
    return out;
}

// Deterministic random graphs (raw engine draws, no distribution objects).
Graph random_graph(std::mt19937& rng, int n, double p) {
    auto threshold = static_cast<std::uint32_t>(p * 4294967296.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

SuiteReport suite_moon_moser(const Options& o) {
    SuiteReport rep{"moon-moser", {}};
    for (int n = 1; n <= o.moon_n_max; ++n) {
        SearchReport r = compute_mi_table(n, 1, Family::All, o.jobs);
        long long expected = n == 1 ? 1 : moon_moser_formula(n);
        add_eq(rep, "mi_1(" + std::to_string(n) + ") search vs formula", expected, r.optimum);
        if (n == 5) {
            bool found = false;
            auto want = canonical_code(disjoint_union(Graph::complete(3), Graph::complete(2)));
            for (const auto& w : r.witnesses)
                if (canonical_code(graph6_decode(w)) == want) found = true;
            add_true(rep, "n=5 witnesses include K3+K2", found);
        }
        if (n == 6) {
            auto want =
                canon_codes(std::vector<Graph>{disjoint_union(Graph::complete(3), Graph::complete(3))});
            add_true(rep, "n=6 witnesses are exactly {K3+K3}", canon_codes(r.witnesses) == want);
        }
        if (n == 7) {
            Graph two_k2 = disjoint_union(Graph::complete(2), Graph::complete(2));
            auto want = canon_codes(
                std::vector<Graph>{disjoint_union(Graph::complete(3), Graph::complete(4)),
                                   disjoint_union(Graph::complete(3), two_k2)});
            add_true(rep, "n=7 witnesses are exactly {K3+K4, K3+2K2}", canon_codes(r.witnesses) == want);
        }
        if (n == 9) {
            Graph three_k3 =
                disjoint_union(disjoint_union(Graph::complete(3), Graph::complete(3)), Graph::complete(3));
            add_true(rep, "n=9 witnesses are exactly {3K3}",
                     canon_codes(r.witnesses) == canon_codes(std::vector<Graph>{three_k3}));
        }
    }
    return rep;
}

SuiteReport suite_trees(const Options& o) {
    SuiteReport rep{"trees", {}};
    for (int n = 1; n <= o.trees_n_max; ++n) {
        SearchReport r = compute_mi_table(n, 1, Family::Tree, o.jobs);
        add_eq(rep, "mi_1(" + std::to_string(n) + ", trees) search vs formula", tree_formula(n),
               r.optimum);
    }
    return rep;
}

SuiteReport suite_triangle_free(const Options& o) {
    SuiteReport rep{"triangle-free", {}};
    for (int n = 4; n <= o.triangle_free_n_max; ++n) {
        SearchReport r = compute_mi_table(n, 1, Family::TriangleFree, o.jobs);
        add_eq(rep, "mi_1(" + std::to_string(n) + ", triangle-free) search vs formula",
               triangle_free_formula(n), r.optimum);
    }
    return rep;
}

SuiteReport suite_connected(const Options& o) {
    SuiteReport rep{"connected", {}};
    for (int n = 4; n <= o.connected_n_max; ++n) {
        SearchReport r = compute_mi_table(n, 1, Family::Connected, o.jobs);
        Rational printed = connected_formula_printed(n);
        std::string label = "mi_1(" + std::to_string(n) + ", connected)";
        if (n % 3 == 0) {
            add(rep, label + " matches printed formula", printed.str(), std::to_string(r.optimum),
                printed.integral() && printed.num == r.optimum);
        } else if (n % 3 == 1) {
            // the printed case evaluates to a non-integer; the deliverable is
            // the flag, with the search optimum reported alongside
            add(rep, label + " printed formula flagged non-integral", "non-integral",
                printed.str() + " (search optimum " + std::to_string(r.optimum) + ")",
                !printed.integral());
        } else {
            add(rep, label + " reported (printed case sums identical terms)", "reported",
                "optimum " + std::to_string(r.optimum) + ", printed " + printed.str(), true);
        }
    }
    return rep;
}

SuiteReport suite_m_values(const Options& o) {
    SuiteReport rep{"m-values", {}};
    struct Item {
        int k, t, expected;
    };
    for (Item it : {Item{1, 2, 2}, Item{1, 3, 3}, Item{2, 2, 4}, Item{2, 3, 6}, Item{2, 4, 8},
                    Item{2, 6, 9}}) {
        if (it.expected > o.m_n_budget) continue;
        MResult m = compute_m(it.k, it.t, o.m_n_budget, o.jobs);
        std::string label = "m(" + std::to_string(it.k) + "," + std::to_string(it.t) + ")";
        add(rep, label, std::to_string(it.expected),
            m.conclusive ? std::to_string(m.m_value) : "inconclusive",
            m.conclusive && m.m_value == it.expected);
        if (it.k == 2 && it.t == 2 && m.conclusive)
            add_true(rep, "m(2,2) witness isomorphic to K_{2,2}",
                     is_isomorphic(graph6_decode(m.witness), Graph::complete_multipartite({2, 2})));
        if (it.k == 2 && it.t == 6 && m.conclusive) {
            Graph t33 = tensor_product(Graph::complete(3), Graph::complete(3));
            add_true(rep, "m(2,6) witness class contains K3xK3",
                     count_kdis(t33, 2) >= 6 && m.m_value == 9 &&
                         is_isomorphic(graph6_decode(m.witness), t33));
        }
    }
    for (int k = 1; k <= 5; ++k) {
        add_eq(rep, "mi_" + std::to_string(k) + "(K_{k,k}) direct count", 2,
               count_kdis(Graph::complete_multipartite({k, k}), k));
        add_eq(rep, "mi_" + std::to_string(k) + "(K_{k,k,k}) direct count", 3,
               count_kdis(Graph::complete_multipartite({k, k, k}), k));
    }
    return rep;
}

SuiteReport suite_products(const Options&) {
    SuiteReport rep{"products", {}};
    // blow-up law: lifting a k-DIS of G into G.E_l gives a (k*l)-DIS
    long long lifted = 0, valid = 0;
    for (int n = 1; n <= 6; ++n) {
        generate_graphs(n, Family::All, [&](const Graph& g) {
            for (int k = 1; k <= 2; ++k) {
                KDisList dis = enumerate_kdis(g, k);
                for (int l = 1; l <= 3; ++l) {
                    Graph host = lexicographic_product(g, Graph::empty_graph(l));
                    for (VertexSet s : dis.sets) {
                        ++lifted;
                        if (is_k_dominating_independent(host, lift_kdis(g, s, l), k * l)) ++valid;
                    }
                }
            }
        });
    }
    add(rep, "blow-up law on all graphs n<=6, k<=2, l<=3", "all lifted sets valid",
        std::to_string(valid) + " valid of " + std::to_string(lifted), lifted == valid && lifted > 0);

    Graph t33 = tensor_product(Graph::complete(3), Graph::complete(3));
    add_eq(rep, "K3xK3 2-DIS count", 6, count_kdis(t33, 2));
    add_eq(rep, "K3xK3 edges", 18, t33.edge_count());

    Graph host18 = lexicographic_product(t33, Graph::empty_graph(2));
    KDisList dis2 = enumerate_kdis(t33, 2);
    std::set<VertexSet> lifts;
    long long verified = 0;
    for (VertexSet s : dis2.sets) {
        VertexSet up = lift_kdis(t33, s, 2);
        if (is_k_dominating_independent(host18, up, 4)) ++verified;
        lifts.insert(up);
    }
    add(rep, "blow-up of K3xK3: six 4-DISes on 18 vertices", "6 verified, 6 distinct",
        std::to_string(verified) + " verified, " + std::to_string(lifts.size()) + " distinct",
        verified == 6 && lifts.size() == 6);
    add_eq(rep, "mi_4 of the 18-vertex blow-up", 6, count_kdis(host18, 4));

    add_true(rep, "K3.E2 is K_{2,2,2}",
             is_isomorphic(lexicographic_product(Graph::complete(3), Graph::empty_graph(2)),
                           Graph::complete_multipartite({2, 2, 2})));
    return rep;
}

SuiteReport suite_twins(const Options& o) {
    SuiteReport rep{"twins", {}};
    // component membership sweep: all graphs up to order 7
    long long cases = 0, good = 0;
    for (int n = 1; n <= 7; ++n) {
        generate_graphs(n, Family::All, [&](const Graph& g) {
            for (int k = 2; k <= 3; ++k)
                for (int v = 0; v < g.order(); ++v) {
                    ++cases;
                    if (same_component_same_kdis(g, v, k)) ++good;
                }
        });
    }
    add(rep, "twin components share k-DIS membership (all n<=7, k=2,3)", "all",
        std::to_string(good) + " of " + std::to_string(cases), cases == good);

    // plus random graphs of orders 8 and 9
    std::mt19937 rng(20250810);
    long long rcases = 0, rgood = 0;
    const double probs[] = {0.3, 0.5, 0.7};
    for (int i = 0; i < o.prop31_samples; ++i) {
        Graph g = random_graph(rng, 8 + i % 2, probs[i % 3]);
        for (int k = 2; k <= 3; ++k)
            for (int v = 0; v < g.order(); ++v) {
                ++rcases;
                if (same_component_same_kdis(g, v, k)) ++rgood;
            }
    }
    add(rep,
        "twin components share k-DIS membership (" + std::to_string(o.prop31_samples) +
            " random n=8,9)",
        "all", std::to_string(rgood) + " of " + std::to_string(rcases), rcases == rgood);

    // pair accounting: C(delta,2) = sum C(s_i,2) + cross-component pairs
    long long pcases = 0, pgood = 0;
    for (int n = 1; n <= 6; ++n) {
        generate_graphs(n, Family::All, [&](const Graph& g) {
            for (int v = 0; v < g.order(); ++v) {
                TwinProfile p = twin_profile(g, v, 2, 0.8);
                long long sum_c2 = 0, cross = 0, total = 0;
                for (std::size_t i = 0; i < p.component_sizes.size(); ++i) {
                    long long si = p.component_sizes[i];
                    sum_c2 += si * (si - 1) / 2;
                    total += si;
                    for (std::size_t j = i + 1; j < p.component_sizes.size(); ++j)
                        cross += si * p.component_sizes[j];
                }
                ++pcases;
                long long d = p.delta;
                if (total == d && sum_c2 + cross == d * (d - 1) / 2) ++pgood;
            }
        });
    }
    add(rep, "pair accounting identity on twin profiles (all n<=6)", "all",
        std::to_string(pgood) + " of " + std::to_string(pcases), pcases == pgood);
    return rep;
}

SuiteReport suite_recurrence(const Options& o) {
    SuiteReport rep{"recurrence", {}};
    const int k = 2;
    std::map<int, long long> mi_table;
    for (int m = 0; m < o.recurrence_n_max; ++m)
        mi_table[m] = compute_mi_table(m, k, Family::All, o.jobs).optimum;

    long long cases = 0, good = 0;
    for (int n = 2; n <= o.recurrence_n_max; ++n) {
        generate_graphs(n, Family::All, [&](const Graph& g) {
            int delta = g.min_degree();
            if (delta < k) return;
            for (int v = 0; v < g.order(); ++v) {
                if (g.degree(v) != delta) continue;
                ++cases;
                if (check_recurrence_bound(g, v, k, mi_table).holds) ++good;
            }
        });
    }
    add(rep,
        "counting recurrence at k=2 (all n<=" + std::to_string(o.recurrence_n_max) +
            ", min-degree vertices)",
        "all", std::to_string(good) + " of " + std::to_string(cases), cases == good && cases > 0);
    return rep;
}

SuiteReport suite_sweeps(const Options& o) {
    SuiteReport rep{"sweeps", {}};
    const double eps = 0.053, beta = 0.8;

    SweepReport s0 = sweep_positivity(SweepFn::F0, 3, o.f0_k_hi, eps, beta, o.jobs);
    add(rep, "f0 positive on [3," + std::to_string(o.f0_k_hi) + "]", "all positive",
        "min " + fmt_double(s0.min_value) + " at k=" + std::to_string(s0.argmin_k), s0.all_positive);

    SweepReport s2 = sweep_positivity(SweepFn::F2, 3, o.f2_k_hi, eps, beta, o.jobs);
    add(rep, "f2 positive on [3," + std::to_string(o.f2_k_hi) + "]", "all positive",
        "min " + fmt_double(s2.min_value) + " at k=" + std::to_string(s2.argmin_k), s2.all_positive);

    for (long long k : {1001LL, 2000LL, 10000LL, 1000000LL})
        add_true(rep, "f1(" + std::to_string(k) + ") > 0", f1(k, eps, beta) > kPositivitySlack,
                 fmt_double(f1(k, eps, beta)));
    for (long long k : {1000001LL, 2000000LL, 10000000LL})
        add_true(rep, "f3(" + std::to_string(k) + ") > 0", f3(k, eps, beta) > kPositivitySlack,
                 fmt_double(f3(k, eps, beta)));

    // c^k stays below 1.9801 and increases in k
    bool below = true, increasing = true;
    double prev = 0.0, worst = 0.0;
    for (long long k = 3; k <= 1000000; ++k) {
        double v = c_pow_k(k, eps);
        if (v > 1.9801) below = false;
        if (k > 3 && v + 1e-15 < prev) increasing = false;
        prev = v;
        worst = std::max(worst, v);
    }
    add(rep, "c^k <= 1.9801 on [3,1000000]", "max <= 1.9801", "max " + fmt_double(worst), below);
    add_true(rep, "c^k increasing in k", increasing);

    add_true(rep, "rearranged remark inequality at (eps=0.053, k=3)", remark_inequality(0.053, 3));

    bool appendix_ok = true;
    for (long long k = 3; k <= 100; ++k)
        for (int i = 0; i <= 10000; ++i)
            if (!appendix_condition(10.0 * i / 10000.0, k)) appendix_ok = false;
    add_true(rep, "appendix condition on eps in [0,10] x k in [3,100]", appendix_ok);

    const double grid[] = {0.0, 0.05, 0.1, 0.5, 1.0, 5.0};
    bool mono = true;
    for (long long k : {3LL, 4LL, 10LL, 100LL})
        if (!f_eps_monotone(k, grid)) mono = false;
    add_true(rep, "(2+eps)^(1/(1+eps+1/k)) non-increasing in eps", mono);
    return rep;
}

SuiteReport suite_rates(const Options&) {
    SuiteReport rep{"rates", {}};
    // 36^(1/9), frozen at quad precision
    const double root9_36 = 1.4890953247181091;
    double rate = construction_rate(2, 6, 9);
    add(rep, "rate(2,6,9) = 36^(1/9)", fmt_double(root9_36), fmt_double(rate),
        std::abs(rate - root9_36) <= 1e-9);
    add_true(rep, "rate(2,6,9)^9 = 36", std::abs(std::pow(rate, 9.0) - 36.0) <= 1e-6,
             fmt_double(std::pow(rate, 9.0)));
    bool sqrt2_ok = true;
    for (long long k : {2LL, 3LL, 10LL})
        if (std::abs(construction_rate(k, 2, 2 * k) - std::sqrt(2.0)) > 1e-15) sqrt2_ok = false;
    add_true(rep, "rate(k,2,2k) = sqrt(2)", sqrt2_ok);
    add_true(rep, "rate(2,6,9) beats rate(k,2,2k)", rate > construction_rate(3, 2, 6),
             fmt_double(rate) + " > " + fmt_double(construction_rate(3, 2, 6)));
    const double two_to_53 = 3.1748021039363988; // 2^(5/3)
    add(rep, "degree bound at (k=2, delta=2, n=5)", fmt_double(two_to_53),
        fmt_double(nagy_degree_bound(2, 2, 5)),
        std::abs(nagy_degree_bound(2, 2, 5) - two_to_53) <= 1e-9);
    return rep;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"moon-moser", "trees",      "triangle-free", "connected", "m-values",
            "products",   "twins",      "recurrence",    "sweeps",    "rates"};
}

SuiteReport run_suite(const std::string& name, const Options& options) {
    if (name == "moon-moser") return suite_moon_moser(options);
    if (name == "trees") return suite_trees(options);
    if (name == "triangle-free") return suite_triangle_free(options);
    if (name == "connected") return suite_connected(options);
    if (name == "m-values") return suite_m_values(options);
    if (name == "products") return suite_products(options);
    if (name == "twins") return suite_twins(options);
    if (name == "recurrence") return suite_recurrence(options);
    if (name == "sweeps") return suite_sweeps(options);
    if (name == "rates") return suite_rates(options);
    if (name == "all") {
        SuiteReport all{"all", {}};
        for (const auto& s : suite_names()) {
            SuiteReport r = run_suite(s, options);
            for (auto& c : r.checks) {
                c.name = s + ": " + c.name;
                all.checks.push_back(std::move(c));
            }
        }
        return all;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown suite: " + name);
}

nlohmann::ordered_json to_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    int passed = 0;
    for (const auto& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["pass"] = c.pass;
        checks.push_back(std::move(jc));
        if (c.pass) ++passed;
    }
    j["checks"] = std::move(checks);
    j["passed"] = passed;
    j["failed"] = static_cast<int>(report.checks.size()) - passed;
    j["ok"] = report.ok();
    return j;
}

} // namespace kdis::verify
