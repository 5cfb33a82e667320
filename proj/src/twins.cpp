#include "kdis/twins.hpp"

#include <algorithm>
#include <numeric>

#include "kdis/enumeration.hpp"

namespace kdis {

bool are_almost_twins(const Graph& g, int x, int y, int k) {
    if (x == y) throw_domain("almost-twin test needs two distinct vertices");
    if (g.has_edge(x, y)) return false;
    VertexSet nx = g.neighborhood(x), ny = g.neighborhood(y);
    return vcount(nx & ~ny) < k && vcount(ny & ~nx) < k;
}

TwinGraph twin_graph(const Graph& g, int v, int k) {
    std::vector<int> verts = vertices_of(g.neighborhood(v));
    int m = static_cast<int>(verts.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (are_almost_twins(g, verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)], k))
                edges.emplace_back(i, j);
    return TwinGraph{Graph::from_edges(m, edges), std::move(verts)};
}

TwinProfile twin_profile(const Graph& g, int v, int k, double beta) {
    TwinGraph tg = twin_graph(g, v, k);
    TwinProfile p;
    p.v = v;
    p.delta = g.degree(v);
    p.b_threshold = beta * k;
    for (VertexSet comp : components(tg.graph)) p.component_sizes.push_back(vcount(comp));
    std::sort(p.component_sizes.begin(), p.component_sizes.end());
    return p;
}

bool same_component_same_kdis(const Graph& g, int v, int k) {
    TwinGraph tg = twin_graph(g, v, k);
    std::vector<VertexSet> comps_host;
    for (VertexSet comp : components(tg.graph)) {
        VertexSet host = 0;
        for (VertexSet t = comp; t; t &= t - 1)
            host |= vbit(tg.vertices[static_cast<std::size_t>(vfirst(t))]);
        comps_host.push_back(host);
    }
    // no host edge inside a component
    for (VertexSet comp : comps_host)
        if (!is_independent(g, comp)) return false;
    // all-or-nothing membership in every k-DIS
    KDisList all = enumerate_kdis(g, k);
    for (VertexSet set : all.sets)
        for (VertexSet comp : comps_host) {
            VertexSet inter = set & comp;
            if (inter != 0 && inter != comp) return false;
        }
    return true;
}

namespace {

long long choose2(long long m) { return m < 2 ? 0 : m * (m - 1) / 2; }

} // namespace

RecurrenceCheck check_recurrence_bound(const Graph& g, int v, int k,
                                       const std::map<int, long long>& mi_table) {
    if (k < 2) throw_domain("the counting recurrence needs k >= 2");
    int n = g.order();
    int delta = g.degree(v);
    TwinProfile prof = twin_profile(g, v, k, 0.8);

    auto mi = [&](int m) -> long long {
        if (m < 0) return 0; // no graph exists, no set can be counted there
        auto it = mi_table.find(m);
        if (it == mi_table.end())
            throw Error(ErrorCode::Dependency, "mi table entry missing for order " + std::to_string(m));
        return it->second;
    };

    long long ck2 = choose2(k);
    long long sum_pairs = 0;
    long long sum_terms = 0;
    for (int s : prof.component_sizes) {
        sum_pairs += choose2(s);
        sum_terms += choose2(s) * mi(n - delta - s);
    }
    long long cross = choose2(delta) - sum_pairs;
    long long rhs_num = ck2 * mi(n - delta - 1) + sum_terms + cross * mi(n - delta - k);

    RecurrenceCheck out;
    out.count = count_kdis(g, k);
    long long gcd = std::gcd(rhs_num, ck2);
    out.rhs_num = rhs_num / gcd;
    out.rhs_den = ck2 / gcd;
    // count <= rhs_num/rhs_den, compared exactly in integers
    out.holds = out.count * out.rhs_den <= out.rhs_num;
    return out;
}

} // namespace kdis
