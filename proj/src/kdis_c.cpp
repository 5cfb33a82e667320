#include "kdis/kdis_c.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "kdis/bounds.hpp"
#include "kdis/canon.hpp"
#include "kdis/enumeration.hpp"
#include "kdis/generate.hpp"
#include "kdis/graph.hpp"
#include "kdis/products.hpp"
#include "kdis/search.hpp"
#include "kdis/verify.hpp"

struct kdisw_graph {
    kdis::Graph g;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_offset = -1;

kdisw_status map_code(kdis::ErrorCode code) {
    switch (code) {
        case kdis::ErrorCode::Parse: return KDISW_ERR_PARSE;
        case kdis::ErrorCode::Size: return KDISW_ERR_SIZE;
        case kdis::ErrorCode::Domain: return KDISW_ERR_DOMAIN;
        case kdis::ErrorCode::Budget: return KDISW_ERR_BUDGET;
        case kdis::ErrorCode::Dependency: return KDISW_ERR_DEPENDENCY;
        case kdis::ErrorCode::Contract: return KDISW_ERR_CONTRACT;
        case kdis::ErrorCode::InvalidArgument: return KDISW_ERR_INVALID_ARGUMENT;
    }
    return KDISW_ERR_UNKNOWN;
}

kdisw_status fail_null_arg() {
    g_last_error = "null argument";
    g_last_offset = -1;
    return KDISW_ERR_INVALID_ARGUMENT;
}

template <typename Fn>
kdisw_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        g_last_offset = -1;
        fn();
        return KDISW_OK;
    } catch (const kdis::Error& e) {
        g_last_error = e.what();
        g_last_offset = e.offset();
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return KDISW_ERR_NOMEM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return KDISW_ERR_UNKNOWN;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* kdisw_status_name(kdisw_status status) {
    switch (status) {
        case KDISW_OK: return "ok";
        case KDISW_ERR_PARSE: return "parse-error";
        case KDISW_ERR_SIZE: return "size-error";
        case KDISW_ERR_DOMAIN: return "domain-error";
        case KDISW_ERR_BUDGET: return "budget-error";
        case KDISW_ERR_DEPENDENCY: return "dependency-error";
        case KDISW_ERR_CONTRACT: return "contract-error";
        case KDISW_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case KDISW_ERR_NOMEM: return "out-of-memory";
        case KDISW_ERR_UNKNOWN: return "unknown-error";
    }
    return "unknown-error";
}

const char* kdisw_version(void) { return "1.0.0"; }

const char* kdisw_last_error(void) { return g_last_error.c_str(); }

long kdisw_last_error_offset(void) { return g_last_offset; }

kdisw_status kdisw_graph_from_g6(const char* line, kdisw_graph** out) {
    if (!line || !out) return fail_null_arg();
    return guarded([&] { *out = new kdisw_graph{kdis::graph6_decode(line)}; });
}

kdisw_status kdisw_graph_to_g6(const kdisw_graph* g, char** out) {
    if (!g || !out) return fail_null_arg();
    return guarded([&] { *out = dup_string(kdis::graph6_encode(g->g)); });
}

void kdisw_graph_free(kdisw_graph* g) { delete g; }

kdisw_status kdisw_graph_complete_multipartite(const int* part_sizes, int parts, kdisw_graph** out) {
    if (!part_sizes || !out || parts < 1) return fail_null_arg();
    return guarded([&] {
        std::vector<int> sizes(part_sizes, part_sizes + parts);
        *out = new kdisw_graph{kdis::Graph::complete_multipartite(sizes)};
    });
}

kdisw_status kdisw_graph_disjoint_union(const kdisw_graph* a, const kdisw_graph* b, kdisw_graph** out) {
    if (!a || !b || !out) return fail_null_arg();
    return guarded([&] { *out = new kdisw_graph{kdis::disjoint_union(a->g, b->g)}; });
}

kdisw_status kdisw_graph_lexicographic_product(const kdisw_graph* a, const kdisw_graph* b,
                                               kdisw_graph** out) {
    if (!a || !b || !out) return fail_null_arg();
    return guarded([&] { *out = new kdisw_graph{kdis::lexicographic_product(a->g, b->g)}; });
}

kdisw_status kdisw_graph_tensor_product(const kdisw_graph* a, const kdisw_graph* b, kdisw_graph** out) {
    if (!a || !b || !out) return fail_null_arg();
    return guarded([&] { *out = new kdisw_graph{kdis::tensor_product(a->g, b->g)}; });
}

kdisw_status kdisw_graph_order(const kdisw_graph* g, int* out) {
    if (!g || !out) return fail_null_arg();
    *out = g->g.order();
    return KDISW_OK;
}

kdisw_status kdisw_graph_edge_count(const kdisw_graph* g, long long* out) {
    if (!g || !out) return fail_null_arg();
    *out = g->g.edge_count();
    return KDISW_OK;
}

kdisw_status kdisw_graph_min_degree(const kdisw_graph* g, int* out) {
    if (!g || !out) return fail_null_arg();
    return guarded([&] { *out = g->g.min_degree(); });
}

kdisw_status kdisw_graph_degree(const kdisw_graph* g, int v, int* out) {
    if (!g || !out) return fail_null_arg();
    return guarded([&] {
        if (v < 0 || v >= g->g.order()) kdis::throw_domain("vertex out of range");
        *out = g->g.degree(v);
    });
}

kdisw_status kdisw_graph_neighborhood(const kdisw_graph* g, int v, uint64_t* out) {
    if (!g || !out) return fail_null_arg();
    return guarded([&] {
        if (v < 0 || v >= g->g.order()) kdis::throw_domain("vertex out of range");
        *out = g->g.neighborhood(v);
    });
}

kdisw_status kdisw_graph_is_connected(const kdisw_graph* g, int* out) {
    if (!g || !out) return fail_null_arg();
    *out = g->g.is_connected() ? 1 : 0;
    return KDISW_OK;
}

kdisw_status kdisw_graph_is_tree(const kdisw_graph* g, int* out) {
    if (!g || !out) return fail_null_arg();
    *out = g->g.is_tree() ? 1 : 0;
    return KDISW_OK;
}

kdisw_status kdisw_graph_is_triangle_free(const kdisw_graph* g, int* out) {
    if (!g || !out) return fail_null_arg();
    *out = g->g.is_triangle_free() ? 1 : 0;
    return KDISW_OK;
}

kdisw_status kdisw_graph_is_isomorphic(const kdisw_graph* a, const kdisw_graph* b, int* out) {
    if (!a || !b || !out) return fail_null_arg();
    return guarded([&] { *out = kdis::is_isomorphic(a->g, b->g) ? 1 : 0; });
}

kdisw_status kdisw_is_independent(const kdisw_graph* g, uint64_t set, int* out) {
    if (!g || !out) return fail_null_arg();
    *out = kdis::is_independent(g->g, set) ? 1 : 0;
    return KDISW_OK;
}

kdisw_status kdisw_is_kdis(const kdisw_graph* g, uint64_t set, int k, int* out) {
    if (!g || !out) return fail_null_arg();
    return guarded([&] {
        if (k < 1) kdis::throw_domain("k must be positive");
        *out = kdis::is_k_dominating_independent(g->g, set, k) ? 1 : 0;
    });
}

kdisw_status kdisw_count_kdis(const kdisw_graph* g, int k, long long* out) {
    if (!g || !out) return fail_null_arg();
    return guarded([&] { *out = kdis::count_kdis(g->g, k); });
}

kdisw_status kdisw_enumerate_kdis(const kdisw_graph* g, int k, uint64_t** sets, size_t* count) {
    if (!g || !sets || !count) return fail_null_arg();
    return guarded([&] {
        kdis::KDisList list = kdis::enumerate_kdis(g->g, k);
        auto* out = new uint64_t[list.sets.size()];
        std::memcpy(out, list.sets.data(), list.sets.size() * sizeof(uint64_t));
        *sets = out;
        *count = list.sets.size();
    });
}

void kdisw_sets_free(uint64_t* sets) { delete[] sets; }

kdisw_status kdisw_lift_kdis(const kdisw_graph* g, uint64_t set, int l, uint64_t* out) {
    if (!g || !out) return fail_null_arg();
    return guarded([&] { *out = kdis::lift_kdis(g->g, set, l); });
}

kdisw_status kdisw_search_json(int n, int k, const char* family, int jobs, char** json_out) {
    if (!family || !json_out) return fail_null_arg();
    return guarded([&] {
        kdis::SearchReport r = kdis::compute_mi_table(n, k, kdis::family_from_string(family), jobs);
        *json_out = dup_string(kdis::to_json(r).dump(2));
    });
}

kdisw_status kdisw_m_value_json(int k, int t, int n_budget, int jobs, char** json_out) {
    if (!json_out) return fail_null_arg();
    return guarded([&] {
        kdis::MResult r = kdis::compute_m(k, t, n_budget, jobs);
        *json_out = dup_string(kdis::to_json(r).dump(2));
    });
}

kdisw_status kdisw_generate(int n, const char* family, kdisw_graph6_callback cb, void* user) {
    if (!family || !cb) return fail_null_arg();
    return guarded([&] {
        kdis::generate_graphs(n, kdis::family_from_string(family), [&](const kdis::Graph& g) {
            cb(kdis::graph6_encode(g).c_str(), user);
        });
    });
}

kdisw_status kdisw_sweep_json(const char* fn, long long k_lo, long long k_hi, double epsilon,
                              double beta, int jobs, char** json_out) {
    if (!fn || !json_out) return fail_null_arg();
    return guarded([&] {
        kdis::SweepReport r =
            kdis::sweep_positivity(kdis::sweep_fn_from_string(fn), k_lo, k_hi, epsilon, beta, jobs);
        nlohmann::ordered_json j;
        j["fn"] = r.fn;
        j["k_lo"] = r.k_lo;
        j["k_hi"] = r.k_hi;
        j["epsilon"] = r.epsilon;
        j["beta"] = r.beta;
        j["min_value"] = r.min_value;
        j["argmin_k"] = r.argmin_k;
        j["all_positive"] = r.all_positive;
        *json_out = dup_string(j.dump(2));
    });
}

kdisw_status kdisw_sweep_csv(const char* fn, long long k_lo, long long k_hi, double epsilon,
                             double beta, char** csv_out) {
    if (!fn || !csv_out) return fail_null_arg();
    return guarded([&] {
        *csv_out =
            dup_string(kdis::sweep_csv(kdis::sweep_fn_from_string(fn), k_lo, k_hi, epsilon, beta));
    });
}

kdisw_status kdisw_verify_json(const char* suite, const kdisw_verify_options* options,
                               char** json_out, int* ok_out) {
    if (!suite || !json_out || !ok_out) return fail_null_arg();
    return guarded([&] {
        kdis::verify::Options o;
        if (options) {
            if (options->jobs > 0) o.jobs = options->jobs;
            if (options->n_max >= 0) {
                o.moon_n_max = options->n_max;
                o.trees_n_max = std::min(options->n_max + 1, 12);
                o.triangle_free_n_max = options->n_max;
                o.connected_n_max = options->n_max;
            }
            if (options->n_budget >= 0) o.m_n_budget = options->n_budget;
        }
        kdis::verify::SuiteReport r = kdis::verify::run_suite(suite, o);
        *json_out = dup_string(kdis::verify::to_json(r).dump(2));
        *ok_out = r.ok() ? 1 : 0;
    });
}

kdisw_status kdisw_verify_suites(char** json_out) {
    if (!json_out) return fail_null_arg();
    return guarded([&] {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& s : kdis::verify::suite_names()) j.push_back(s);
        j.push_back("all");
        *json_out = dup_string(j.dump(2));
    });
}

void kdisw_string_free(char* s) { delete[] s; }

} // extern "C"
