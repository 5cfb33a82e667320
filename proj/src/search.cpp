#include "kdis/search.hpp"

#include <algorithm>
#include <chrono>

#include "kdis/enumeration.hpp"
#include "parallel.hpp"

namespace kdis {

namespace {

struct Partial {
    long long best = -1;
    std::vector<std::string> witnesses; // capped
    long long witnesses_total = 0;
    long long examined = 0;
    // first graph meeting an external threshold (used by compute_m)
    bool has_hit = false;
    std::string first_hit;
};

void score_graph(const Graph& g, int k, long long threshold, Partial& p) {
    long long c = count_kdis(g, k);
    ++p.examined;
    if (c > p.best) {
        p.best = c;
        p.witnesses.clear();
        p.witnesses_total = 0;
    }
    if (c == p.best) {
        ++p.witnesses_total;
        if (p.witnesses.size() < kWitnessCap) p.witnesses.push_back(graph6_encode(g));
    }
    if (threshold > 0 && !p.has_hit && c >= threshold) {
        p.has_hit = true;
        p.first_hit = graph6_encode(g);
    }
}

void merge(Partial& into, const Partial& from) {
    into.examined += from.examined;
    if (from.best > into.best) {
        into.best = from.best;
        into.witnesses = from.witnesses;
        into.witnesses_total = from.witnesses_total;
    } else if (from.best == into.best && from.best >= 0) {
        into.witnesses_total += from.witnesses_total;
        for (const auto& w : from.witnesses) {
            if (into.witnesses.size() >= kWitnessCap) break;
            into.witnesses.push_back(w);
        }
    }
    if (!into.has_hit && from.has_hit) {
        into.has_hit = true;
        into.first_hit = from.first_hit;
    }
}

// Exhaustive scoring of one order of a family.  threshold, when positive,
// additionally records the first graph with count >= threshold.
Partial scan_order(int n, int k, Family family, long long threshold, int jobs) {
    Partial total;
    if (family == Family::Tree) {
        for (const auto& rec : gen::tree_level(n)) score_graph(rec.graph, k, threshold, total);
        return total;
    }
    bool tf = family == Family::TriangleFree;
    if (n <= 1) {
        generate_graphs(n, family, [&](const Graph& g) { score_graph(g, k, threshold, total); });
        return total;
    }

    // one work unit per parent class; merging in parent order keeps the
    // result independent of the worker count
    const auto& parents = gen::level(n - 1, tf);
    int workers = resolve_jobs(jobs);
    std::vector<Partial> parts(parents.size());
    parallel_for_index(parents.size(), workers, [&](std::size_t i) {
        gen::expand(parents[i], tf, [&](const Graph& child, const CanonResult&) {
            if (family == Family::Connected && !child.is_connected()) return;
            score_graph(child, k, threshold, parts[i]);
        });
    });
    for (const auto& p : parts) merge(total, p);
    return total;
}

} // namespace

SearchReport compute_mi_table(int n, int k, Family family, int jobs) {
    if (k < 1) throw_domain("k must be positive");
    if (n < 0 || (family == Family::Tree && n < 1)) throw_domain("order out of range for the family");
    if (n > family_order_budget(family))
        throw_budget("order " + std::to_string(n) + " exceeds the " + to_string(family) + " budget");
    auto start = std::chrono::steady_clock::now();
    Partial p = scan_order(n, k, family, 0, jobs);
    SearchReport rep;
    rep.n = n;
    rep.k = k;
    rep.family = family;
    rep.optimum = p.best < 0 ? 0 : p.best;
    rep.witnesses = std::move(p.witnesses);
    rep.witnesses_total = p.witnesses_total;
    rep.graphs_examined = p.examined;
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

MResult compute_m(int k, int t, int n_budget, int jobs) {
    if (k < 1) throw_domain("k must be positive");
    if (t < 2) throw_domain("t must be at least 2");
    MResult res;
    res.k = k;
    res.t = t;
    int cap = std::min(n_budget, family_order_budget(Family::All));
    for (int n = k + 1; n <= cap; ++n) {
        Partial p = scan_order(n, k, Family::All, t, jobs);
        res.searched_up_to = n;
        if (p.has_hit) {
            res.conclusive = true;
            res.m_value = n;
            res.witness = p.first_hit;
            return res;
        }
    }
    return res;
}

nlohmann::ordered_json to_json(const SearchReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["family"] = to_string(r.family);
    j["optimum"] = r.optimum;
    j["witnesses"] = r.witnesses;
    j["witnesses_total"] = r.witnesses_total;
    j["graphs_examined"] = r.graphs_examined;
    return j;
}

nlohmann::ordered_json to_json(const MResult& r) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["t"] = r.t;
    j["status"] = r.conclusive ? "ok" : "inconclusive";
    if (r.conclusive) {
        j["m_value"] = r.m_value;
        j["witness"] = r.witness;
    } else {
        j["m_value"] = nullptr;
        j["witness"] = nullptr;
        j["searched_up_to"] = r.searched_up_to;
    }
    return j;
}

} // namespace kdis
