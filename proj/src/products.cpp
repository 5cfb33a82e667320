#include "kdis/products.hpp"

#include "kdis/enumeration.hpp"

namespace kdis {

namespace {

void check_product_capacity(const Graph& g, const Graph& h) {
    long long total = static_cast<long long>(g.order()) * h.order();
    if (total > kMaxVertices)
        throw_size("product order " + std::to_string(total) + " exceeds 64");
}

} // namespace

Graph lexicographic_product(const Graph& g, const Graph& h) {
    check_product_capacity(g, h);
    int gn = g.order(), hn = h.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < gn; ++u)
        for (int v = 0; v < hn; ++v)
            for (int x = u; x < gn; ++x)
                for (int y = 0; y < hn; ++y) {
                    if (u == x && y <= v) continue;
                    bool adj = g.has_edge(u, x) || (u == x && h.has_edge(v, y));
                    if (adj) edges.emplace_back(u * hn + v, x * hn + y);
                }
    return Graph::from_edges(gn * hn, edges);
}

Graph tensor_product(const Graph& g, const Graph& h) {
    check_product_capacity(g, h);
    int gn = g.order(), hn = h.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < gn; ++u)
        for (int v = 0; v < hn; ++v)
            for (int x = u; x < gn; ++x)
                for (int y = 0; y < hn; ++y) {
                    if (u == x && y <= v) continue;
                    if (g.has_edge(u, x) && h.has_edge(v, y)) edges.emplace_back(u * hn + v, x * hn + y);
                }
    return Graph::from_edges(gn * hn, edges);
}

VertexSet lift_kdis(const Graph& g, VertexSet independent_set, int l) {
    if (l < 1) throw_domain("blow-up factor must be positive");
    if (static_cast<long long>(g.order()) * l > kMaxVertices)
        throw_size("blow-up exceeds 64 vertices");
    if (!is_independent(g, independent_set))
        throw Error(ErrorCode::Contract, "lift_kdis requires an independent set");
    VertexSet fiber = (l == 64) ? ~VertexSet{0} : (VertexSet{1} << l) - 1;
    VertexSet out = 0;
    for (VertexSet t = independent_set & g.vertex_mask(); t; t &= t - 1)
        out |= fiber << (vfirst(t) * l);
    return out;
}

} // namespace kdis
