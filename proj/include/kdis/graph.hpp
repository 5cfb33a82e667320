#ifndef KDIS_GRAPH_HPP
#define KDIS_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kdis/errors.hpp"

namespace kdis {

/// Hard cap on the number of vertices so a vertex subset fits in one word.
inline constexpr int kMaxVertices = 64;

/// A subset of vertices of some host graph, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
inline constexpr bool vcontains(VertexSet s, int v) { return (s >> v) & 1; }
inline int vcount(VertexSet s) { return std::popcount(s); }

/// Lowest set bit as a vertex index; undefined on the empty set.
inline int vfirst(VertexSet s) { return std::countr_zero(s); }

std::vector<int> vertices_of(VertexSet s);
std::string vertexset_to_string(VertexSet s);

/// Immutable simple graph on at most 64 vertices.  Adjacency is stored as one
/// bitmask row per vertex: adj(v) = open neighborhood N(v).  All constructors
/// validate symmetry, irreflexivity and that no bit above n-1 is set.
class Graph {
public:
    Graph() = default; // the empty graph (n = 0)

    static Graph from_adjacency(std::vector<std::uint64_t> rows);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph empty_graph(int n);
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);

    /// Complete multipartite graph; vertices of distinct parts adjacent,
    /// vertices of the same part not.  A single part yields an empty graph.
    static Graph complete_multipartite(const std::vector<int>& part_sizes);

    int order() const { return n_; }
    VertexSet neighborhood(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return vcount(adj_[static_cast<std::size_t>(v)]); }
    int min_degree() const;
    long long edge_count() const;
    bool has_edge(int u, int v) const { return vcontains(adj_[static_cast<std::size_t>(u)], v); }

    /// All n vertices as a set.
    VertexSet vertex_mask() const { return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1; }

    bool is_connected() const;
    bool is_triangle_free() const;
    bool is_tree() const;

    /// New graph with one extra vertex (index n) adjacent to `nbrs`.
    Graph add_vertex(VertexSet nbrs) const;

    /// Induced subgraph on `keep`, relabeled to 0..|keep|-1 in ascending order.
    Graph induced_subgraph(VertexSet keep) const;

    /// Relabel: vertex v becomes perm[v].
    Graph permuted(std::span<const int> perm) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    Graph(int n, std::vector<std::uint64_t> adj) : n_(n), adj_(std::move(adj)) {}
    void validate() const;
};

/// Disjoint union; vertices of `b` are relabeled above those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// graph6 text form (short form for n <= 62, extended 3-byte header above).
std::string graph6_encode(const Graph& g);

/// Parse one graph6 line.  A leading ">>graph6<<" marker is tolerated.
/// Throws Error(Parse) with the byte offset on malformed input.
Graph graph6_decode(std::string_view text);

} // namespace kdis

#endif
