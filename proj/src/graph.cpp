#include "kdis/graph.hpp"

#include <algorithm>
#include <numeric>

namespace kdis {

std::vector<int> vertices_of(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(vcount(s)));
    while (s) {
        int v = vfirst(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

std::string vertexset_to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : vertices_of(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

void Graph::validate() const {
    if (n_ < 0 || n_ > kMaxVertices)
        throw_size("graph order " + std::to_string(n_) + " exceeds " + std::to_string(kMaxVertices));
    if (static_cast<int>(adj_.size()) != n_)
        throw Error(ErrorCode::InvalidArgument, "adjacency row count does not match order");
    VertexSet all = vertex_mask();
    for (int v = 0; v < n_; ++v) {
        VertexSet row = adj_[static_cast<std::size_t>(v)];
        if (row & ~all)
            throw Error(ErrorCode::InvalidArgument, "adjacency bits above vertex range");
        if (vcontains(row, v))
            throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(v));
        for (VertexSet s = row; s; s &= s - 1) {
            int u = vfirst(s);
            if (!vcontains(adj_[static_cast<std::size_t>(u)], v))
                throw Error(ErrorCode::InvalidArgument, "asymmetric adjacency between " +
                                                            std::to_string(v) + " and " + std::to_string(u));
        }
    }
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> rows) {
    int n = static_cast<int>(rows.size());
    Graph g(n, std::move(rows));
    g.validate();
    return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0 || n > kMaxVertices) throw_size("graph order exceeds " + std::to_string(kMaxVertices));
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
        if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop not allowed");
        adj[static_cast<std::size_t>(u)] |= vbit(v);
        adj[static_cast<std::size_t>(v)] |= vbit(u);
    }
    Graph g(n, std::move(adj));
    g.validate();
    return g;
}

Graph Graph::empty_graph(int n) {
    if (n < 0 || n > kMaxVertices) throw_size("graph order exceeds " + std::to_string(kMaxVertices));
    return Graph(n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
}

Graph Graph::complete(int n) {
    if (n < 0 || n > kMaxVertices) throw_size("graph order exceeds " + std::to_string(kMaxVertices));
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    VertexSet all = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = all & ~vbit(v);
    return Graph(n, std::move(adj));
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return from_edges(n, e);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw_domain("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return from_edges(n, e);
}

Graph Graph::complete_multipartite(const std::vector<int>& part_sizes) {
    long long total = 0;
    for (int s : part_sizes) {
        if (s <= 0) throw Error(ErrorCode::InvalidArgument, "part sizes must be positive");
        total += s;
    }
    if (total > kMaxVertices) throw_size("multipartite order " + std::to_string(total) + " exceeds 64");
    int n = static_cast<int>(total);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    int base = 0;
    VertexSet all = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
    for (int s : part_sizes) {
        VertexSet part = ((s == 64 ? ~VertexSet{0} : (VertexSet{1} << s) - 1)) << base;
        for (int v = base; v < base + s; ++v) adj[static_cast<std::size_t>(v)] = all & ~part;
        base += s;
    }
    Graph g(n, std::move(adj));
    g.validate();
    return g;
}

int Graph::min_degree() const {
    if (n_ == 0) throw_domain("min_degree of the empty graph is undefined");
    int best = kMaxVertices + 1;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    VertexSet seen = vbit(0);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet s = frontier; s; s &= s - 1) next |= adj_[static_cast<std::size_t>(vfirst(s))];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == vertex_mask();
}

bool Graph::is_triangle_free() const {
    for (int v = 0; v < n_; ++v) {
        VertexSet nv = adj_[static_cast<std::size_t>(v)];
        for (VertexSet s = nv; s; s &= s - 1) {
            int u = vfirst(s);
            if (u > v && (adj_[static_cast<std::size_t>(u)] & nv)) return false;
        }
    }
    return true;
}

bool Graph::is_tree() const {
    // connected and acyclic; acyclicity via edge count of a connected graph
    // is checked independently in tests, here we detect cycles by DFS.
    if (!is_connected()) return false;
    std::vector<int> parent(static_cast<std::size_t>(n_), -1);
    std::vector<int> stack = {0};
    VertexSet seen = vbit(0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (VertexSet s = adj_[static_cast<std::size_t>(v)]; s; s &= s - 1) {
            int u = vfirst(s);
            if (u == parent[static_cast<std::size_t>(v)]) continue;
            if (vcontains(seen, u)) return false;
            seen |= vbit(u);
            parent[static_cast<std::size_t>(u)] = v;
            stack.push_back(u);
        }
    }
    return true;
}

Graph Graph::add_vertex(VertexSet nbrs) const {
    if (n_ + 1 > kMaxVertices) throw_size("add_vertex exceeds 64 vertices");
    if (nbrs & ~vertex_mask()) throw Error(ErrorCode::InvalidArgument, "neighbor set out of range");
    std::vector<std::uint64_t> adj = adj_;
    adj.push_back(nbrs);
    for (VertexSet s = nbrs; s; s &= s - 1) adj[static_cast<std::size_t>(vfirst(s))] |= vbit(n_);
    return Graph(n_ + 1, std::move(adj));
}

Graph Graph::induced_subgraph(VertexSet keep) const {
    keep &= vertex_mask();
    std::vector<int> verts = vertices_of(keep);
    int m = static_cast<int>(verts.size());
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        VertexSet row = adj_[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] & keep;
        for (VertexSet s = row; s; s &= s - 1) {
            int u = vfirst(s);
            int j = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), u) - verts.begin());
            adj[static_cast<std::size_t>(i)] |= vbit(j);
        }
    }
    return Graph(m, std::move(adj));
}

Graph Graph::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
        VertexSet row = 0;
        for (VertexSet s = adj_[static_cast<std::size_t>(v)]; s; s &= s - 1)
            row |= vbit(perm[static_cast<std::size_t>(vfirst(s))]);
        adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = row;
    }
    Graph g(n_, std::move(adj));
    g.validate();
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > kMaxVertices)
        throw_size("disjoint union exceeds 64 vertices");
    std::vector<std::uint64_t> adj;
    adj.reserve(static_cast<std::size_t>(a.order() + b.order()));
    for (int v = 0; v < a.order(); ++v) adj.push_back(a.neighborhood(v));
    for (int v = 0; v < b.order(); ++v) adj.push_back(b.neighborhood(v) << a.order());
    return Graph::from_adjacency(std::move(adj));
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet remaining = g.vertex_mask();
    while (remaining) {
        VertexSet comp = vbit(vfirst(remaining));
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighborhood(vfirst(s));
            frontier = next & ~comp;
            comp |= frontier;
        }
        out.push_back(comp);
        remaining &= ~comp;
    }
    return out;
}

namespace {

// graph6 packs the upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
// Six bits per output byte, most significant first, biased by 63.
constexpr int kG6Bias = 63;

} // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Bias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Bias));
        out.push_back(static_cast<char>((n & 63) + kG6Bias));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Bias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Bias));
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view marker = ">>graph6<<";
    if (text.substr(0, marker.size()) == marker) pos = marker.size();
    if (pos >= text.size()) throw_parse("graph6: empty input", static_cast<long>(pos));

    auto byte_at = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw_parse("graph6: byte out of printable range", static_cast<long>(i));
        return c - kG6Bias;
    };

    long long n;
    if (static_cast<unsigned char>(text[pos]) == 126) {
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126)
            throw_parse("graph6: orders above 258047 unsupported", static_cast<long>(pos + 1));
        if (pos + 3 >= text.size())
            throw_parse("graph6: truncated extended order header", static_cast<long>(text.size()));
        n = (static_cast<long long>(byte_at(pos + 1)) << 12) |
            (static_cast<long long>(byte_at(pos + 2)) << 6) | byte_at(pos + 3);
        pos += 4;
    } else {
        n = byte_at(pos);
        pos += 1;
    }
    if (n > kMaxVertices)
        throw_parse("graph6: order " + std::to_string(n) + " exceeds 64", static_cast<long>(pos - 1));

    long long pair_bits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((pair_bits + 5) / 6);
    if (text.size() - pos < nbytes)
        throw_parse("graph6: truncated adjacency bits", static_cast<long>(text.size()));
    if (text.size() - pos > nbytes)
        throw_parse("graph6: trailing garbage", static_cast<long>(pos + nbytes));

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    long long bitidx = 0;
    auto next_bit = [&]() -> int {
        std::size_t b = static_cast<std::size_t>(bitidx / 6);
        int k = 5 - static_cast<int>(bitidx % 6);
        ++bitidx;
        return (byte_at(pos + b) >> k) & 1;
    };
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (next_bit()) {
                adj[static_cast<std::size_t>(i)] |= vbit(j);
                adj[static_cast<std::size_t>(j)] |= vbit(i);
            }
        }
    }
    while (bitidx < static_cast<long long>(nbytes) * 6) {
        std::size_t b = static_cast<std::size_t>(bitidx / 6);
        if (next_bit()) throw_parse("graph6: nonzero padding bits", static_cast<long>(pos + b));
    }
    return Graph::from_adjacency(std::move(adj));
}

} // namespace kdis
