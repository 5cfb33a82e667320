#include "kdis/enumeration.hpp"

#include <algorithm>
#include <functional>

namespace kdis {

bool is_independent(const Graph& g, VertexSet s) {
    s &= g.vertex_mask();
    for (VertexSet t = s; t; t &= t - 1)
        if (g.neighborhood(vfirst(t)) & s) return false;
    return true;
}

bool is_k_dominating_independent(const Graph& g, VertexSet s, int k) {
    s &= g.vertex_mask();
    VertexSet outside = g.vertex_mask() & ~s;
    for (VertexSet t = s; t; t &= t - 1)
        if (g.neighborhood(vfirst(t)) & s) return false;
    for (VertexSet t = outside; t; t &= t - 1)
        if (vcount(g.neighborhood(vfirst(t)) & s) < k) return false;
    return true;
}

namespace {

// Degeneracy order: repeatedly remove a vertex of minimum degree among the
// remaining ones (ties broken by smallest index).
std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.order();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    VertexSet remaining = g.vertex_mask();
    while (remaining) {
        int best = -1, best_deg = kMaxVertices + 1;
        for (VertexSet t = remaining; t; t &= t - 1) {
            int v = vfirst(t);
            int d = vcount(g.neighborhood(v) & remaining);
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        order.push_back(best);
        remaining &= ~vbit(best);
    }
    return order;
}

template <typename Sink>
void scan_all(const Graph& g, int k, Sink&& sink) {
    int n = g.order();
    if (n > 25) throw_domain("full scan limited to 25 vertices");
    VertexSet limit = VertexSet{1} << n;
    for (VertexSet s = 0; s < limit; ++s)
        if (is_k_dominating_independent(g, s, k)) sink(s);
}

// Branch and bound over vertices in degeneracy order.  potential[w] counts
// the neighbors of w that are chosen or still undecided; excluding a vertex
// is feasible only while every excluded vertex keeps potential >= k.  At the
// leaves potential equals |N(w) & chosen|, so surviving branches are exactly
// the k-DISes.
template <typename Sink>
void branch_bound(const Graph& g, int k, Sink&& sink) {
    int n = g.order();
    std::vector<int> order = degeneracy_order(g);
    std::vector<int> potential(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) potential[static_cast<std::size_t>(v)] = g.degree(v);

    VertexSet chosen = 0, out = 0;

    std::function<void(int)> rec = [&](int idx) {
        if (idx == n) {
            sink(chosen);
            return;
        }
        int u = order[static_cast<std::size_t>(idx)];
        VertexSet nu = g.neighborhood(u);

        // branch: u joins the set (independence permitting)
        if (!(nu & chosen)) {
            chosen |= vbit(u);
            rec(idx + 1);
            chosen &= ~vbit(u);
        }

        // branch: u stays out; u must still be dominable and no already
        // excluded neighbor may drop below k reachable dominators
        bool feasible = potential[static_cast<std::size_t>(u)] >= k;
        for (VertexSet t = nu; t; t &= t - 1) {
            int w = vfirst(t);
            if (--potential[static_cast<std::size_t>(w)] < k && vcontains(out, w)) feasible = false;
        }
        if (feasible) {
            out |= vbit(u);
            rec(idx + 1);
            out &= ~vbit(u);
        }
        for (VertexSet t = nu; t; t &= t - 1) ++potential[static_cast<std::size_t>(vfirst(t))];
    };
    rec(0);
}

} // namespace

KDisList enumerate_kdis(const Graph& g, int k, EnumStrategy strategy) {
    if (k < 1) throw_domain("k must be positive");
    KDisList out;
    out.k = k;
    if (strategy == EnumStrategy::Auto)
        strategy = g.order() <= 20 ? EnumStrategy::FullScan : EnumStrategy::BranchBound;
    auto sink = [&](VertexSet s) { out.sets.push_back(s); };
    if (strategy == EnumStrategy::FullScan)
        scan_all(g, k, sink);
    else
        branch_bound(g, k, sink);
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

long long count_kdis(const Graph& g, int k, EnumStrategy strategy) {
    if (k < 1) throw_domain("k must be positive");
    if (strategy == EnumStrategy::Auto)
        strategy = g.order() <= 20 ? EnumStrategy::FullScan : EnumStrategy::BranchBound;
    long long count = 0;
    auto sink = [&](VertexSet) { ++count; };
    if (strategy == EnumStrategy::FullScan)
        scan_all(g, k, sink);
    else
        branch_bound(g, k, sink);
    return count;
}

} // namespace kdis
