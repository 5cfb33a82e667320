// Shared test helpers: deterministic random graphs and independent oracle
// implementations (brute-force canonical forms, automorphism counting by
// permutation scan, Prufer trees, pivoting clique enumeration).  Everything
// here is deliberately written against the definitions, not against the
// library code it checks.
#ifndef KDIS_TESTS_TEST_UTIL_HPP
#define KDIS_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "kdis/graph.hpp"

namespace testutil {

using kdis::Graph;
using kdis::VertexSet;

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    auto threshold = static_cast<std::uint32_t>(p * 4294967296.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[rng() % (i + 1)]);
    return p;
}

// Upper-triangle bit string of a relabeled graph, for lexicographic
// comparison; perm[v] = new label.
inline std::vector<int> relabel_bits(const Graph& g, const std::vector<int>& perm) {
    int n = g.order();
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = v;
    std::vector<int> bits;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            bits.push_back(g.has_edge(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]) ? 1 : 0);
    return bits;
}

// Brute-force canonical form: the lexicographically largest relabeled bit
// string over all n! permutations.
inline std::vector<int> brute_canonical_bits(const Graph& g) {
    int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    bool first = true;
    do {
        std::vector<int> bits = relabel_bits(g, perm);
        if (first || bits > best) {
            best = std::move(bits);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All automorphisms by permutation scan.
inline std::vector<std::vector<int>> brute_automorphisms(const Graph& g) {
    int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool auto_ = true;
        for (int u = 0; u < n && auto_; ++u)
            for (int v = u + 1; v < n && auto_; ++v)
                if (g.has_edge(u, v) !=
                    g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    auto_ = false;
        if (auto_) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Order of the group generated by `gens` (closure enumeration; fine for the
// small orders the tests use).
inline std::size_t group_order_from_generators(int n, const std::vector<std::vector<int>>& gens) {
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> group{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier)
            for (const auto& gperm : gens) {
                std::vector<int> q(static_cast<std::size_t>(n));
                for (int v = 0; v < n; ++v)
                    q[static_cast<std::size_t>(v)] = gperm[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])];
                if (group.insert(q).second) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return group.size();
}

// Vertex orbits under the full automorphism group, smallest member as
// representative.
inline std::vector<int> brute_orbits(const Graph& g) {
    int n = g.order();
    std::vector<int> rep(static_cast<std::size_t>(n));
    std::iota(rep.begin(), rep.end(), 0);
    for (const auto& sigma : brute_automorphisms(g))
        for (int v = 0; v < n; ++v) {
            int a = v, b = sigma[static_cast<std::size_t>(v)];
            int ra = rep[static_cast<std::size_t>(a)], rb = rep[static_cast<std::size_t>(b)];
            if (ra == rb) continue;
            int lo = std::min(ra, rb), hi = std::max(ra, rb);
            for (int u = 0; u < n; ++u)
                if (rep[static_cast<std::size_t>(u)] == hi) rep[static_cast<std::size_t>(u)] = lo;
        }
    // stabilize (rep chains may need another pass after merges)
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            int r = rep[static_cast<std::size_t>(v)];
            if (rep[static_cast<std::size_t>(r)] != r) {
                rep[static_cast<std::size_t>(v)] = rep[static_cast<std::size_t>(r)];
                changed = true;
            }
        }
    }
    return rep;
}

// Tree from a Prufer sequence over vertex labels 0..n-1 (n >= 2; the
// sequence has n-2 entries).
inline Graph prufer_tree(int n, const std::vector<int>& seq) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    std::vector<int> work = seq;
    for (int s : work) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, s);
        if (--degree[static_cast<std::size_t>(s)] == 1) leaves.insert(s);
    }
    auto it = leaves.begin();
    int a = *it++;
    int b = *it;
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

// Maximal independent sets by pivoting clique enumeration on the complement
// (Bron-Kerbosch with pivot), independent of the library's enumerators.
inline std::vector<VertexSet> mis_bron_kerbosch(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> comp(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        comp[static_cast<std::size_t>(v)] = g.vertex_mask() & ~g.neighborhood(v) & ~kdis::vbit(v);

    std::vector<VertexSet> out;
    auto bk = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
        if (!p && !x) {
            out.push_back(r);
            return;
        }
        // pivot: vertex of p|x with the most neighbors in p
        int pivot = -1, best = -1;
        for (VertexSet t = p | x; t; t &= t - 1) {
            int u = kdis::vfirst(t);
            int c = kdis::vcount(comp[static_cast<std::size_t>(u)] & p);
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        VertexSet candidates = p & ~comp[static_cast<std::size_t>(pivot)];
        for (VertexSet t = candidates; t; t &= t - 1) {
            int v = kdis::vfirst(t);
            self(self, r | kdis::vbit(v), p & comp[static_cast<std::size_t>(v)],
                 x & comp[static_cast<std::size_t>(v)]);
            p &= ~kdis::vbit(v);
            x |= kdis::vbit(v);
        }
    };
    if (n == 0) {
        out.push_back(0);
        return out;
    }
    bk(bk, 0, g.vertex_mask(), 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Definition-level k-DIS test, independent of the library's.
inline bool naive_is_kdis(const Graph& g, VertexSet s, int k) {
    for (int u = 0; u < g.order(); ++u) {
        if (kdis::vcontains(s, u)) {
            for (int v = u + 1; v < g.order(); ++v)
                if (kdis::vcontains(s, v) && g.has_edge(u, v)) return false;
        } else {
            int cnt = 0;
            for (int v = 0; v < g.order(); ++v)
                if (kdis::vcontains(s, v) && g.has_edge(u, v)) ++cnt;
            if (cnt < k) return false;
        }
    }
    return true;
}

inline std::vector<VertexSet> naive_kdis_list(const Graph& g, int k) {
    std::vector<VertexSet> out;
    VertexSet limit = VertexSet{1} << g.order();
    for (VertexSet s = 0; s < limit; ++s)
        if (naive_is_kdis(g, s, k)) out.push_back(s);
    return out;
}

} // namespace testutil

#endif
