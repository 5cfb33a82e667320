#include "kdis/generate.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace kdis {

std::string to_string(Family f) {
    switch (f) {
        case Family::All: return "all";
        case Family::Connected: return "connected";
        case Family::TriangleFree: return "triangle-free";
        case Family::Tree: return "tree";
    }
    return "?";
}

Family family_from_string(std::string_view s) {
    if (s == "all") return Family::All;
    if (s == "connected") return Family::Connected;
    if (s == "triangle-free" || s == "trianglefree") return Family::TriangleFree;
    if (s == "tree" || s == "trees") return Family::Tree;
    throw Error(ErrorCode::InvalidArgument, "unknown family: " + std::string(s));
}

bool family_contains(Family f, const Graph& g) {
    switch (f) {
        case Family::All: return true;
        case Family::Connected: return g.is_connected();
        case Family::TriangleFree: return g.is_triangle_free();
        case Family::Tree: return g.is_tree();
    }
    return false;
}

int family_order_budget(Family f) { return f == Family::Tree ? 12 : 10; }

namespace gen {

namespace {

// Orbit representatives (smallest mask per orbit) of the subsets of
// {0..m-1} under the group generated by `gens`.
std::vector<std::uint32_t> subset_orbit_reps(int m, const std::vector<std::vector<int>>& gens) {
    std::uint32_t count = std::uint32_t{1} << m;
    std::vector<std::uint32_t> uf(count);
    for (std::uint32_t i = 0; i < count; ++i) uf[i] = i;
    auto find = [&](std::uint32_t x) {
        while (uf[x] != x) {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        return x;
    };
    auto unite = [&](std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        uf[b] = a; // smallest mask stays the root
    };
    for (const auto& sigma : gens) {
        for (std::uint32_t mask = 0; mask < count; ++mask) {
            std::uint32_t image = 0;
            std::uint32_t rest = mask;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                image |= std::uint32_t{1} << sigma[static_cast<std::size_t>(v)];
            }
            unite(mask, image);
        }
    }
    std::vector<std::uint32_t> reps;
    for (std::uint32_t mask = 0; mask < count; ++mask)
        if (find(mask) == mask) reps.push_back(mask);
    return reps;
}

// True when joining the new vertex to `nbrs` creates a triangle through it.
bool extension_makes_triangle(const Graph& parent, VertexSet nbrs) {
    for (VertexSet s = nbrs; s; s &= s - 1)
        if (parent.neighborhood(vfirst(s)) & nbrs) return true;
    return false;
}

std::mutex cache_mutex;

} // namespace

void expand(const ClassRec& parent, bool triangle_free,
            const std::function<void(const Graph&, const CanonResult&)>& yield) {
    int pn = parent.graph.order();
    auto reps = subset_orbit_reps(pn, parent.aut_gens);
    for (std::uint32_t mask : reps) {
        VertexSet nbrs = mask;
        if (triangle_free && extension_makes_triangle(parent.graph, nbrs)) continue;
        Graph child = parent.graph.add_vertex(nbrs);
        CanonResult cr = canonical_form(child);
        // canonical augmentation: accept only when the new vertex is in the
        // orbit of the vertex holding the last canonical position
        int last = -1;
        for (int v = 0; v <= pn; ++v)
            if (cr.labeling[static_cast<std::size_t>(v)] == pn) {
                last = v;
                break;
            }
        if (cr.orbit[static_cast<std::size_t>(last)] != cr.orbit[static_cast<std::size_t>(pn)]) continue;
        yield(child, cr);
    }
}

const std::vector<ClassRec>& level(int n, bool triangle_free) {
    if (n < 0 || n > 9) throw_budget("cached generation level out of range: " + std::to_string(n));
    static std::array<std::vector<ClassRec>, 10> all_cache;
    static std::array<std::vector<ClassRec>, 10> tf_cache;
    static std::array<bool, 10> all_done{}, tf_done{};
    std::scoped_lock lock(cache_mutex);
    auto& cache = triangle_free ? tf_cache : all_cache;
    auto& done = triangle_free ? tf_done : all_done;
    if (done[static_cast<std::size_t>(n)]) return cache[static_cast<std::size_t>(n)];
    for (int m = 0; m <= n; ++m) {
        if (done[static_cast<std::size_t>(m)]) continue;
        std::vector<ClassRec> out;
        if (m == 0) {
            out.push_back(ClassRec{Graph(), {}});
        } else {
            for (const ClassRec& parent : cache[static_cast<std::size_t>(m - 1)]) {
                expand(parent, triangle_free, [&](const Graph& child, const CanonResult& cr) {
                    out.push_back(ClassRec{child, cr.generators});
                });
            }
        }
        cache[static_cast<std::size_t>(m)] = std::move(out);
        done[static_cast<std::size_t>(m)] = true;
    }
    return cache[static_cast<std::size_t>(n)];
}

const std::vector<ClassRec>& tree_level(int n) {
    if (n < 1 || n > 12) throw_budget("tree generation level out of range: " + std::to_string(n));
    static std::array<std::vector<ClassRec>, 13> cache;
    static std::array<bool, 13> done{};
    std::scoped_lock lock(cache_mutex);
    if (done[static_cast<std::size_t>(n)]) return cache[static_cast<std::size_t>(n)];
    for (int m = 1; m <= n; ++m) {
        if (done[static_cast<std::size_t>(m)]) continue;
        std::vector<ClassRec> out;
        if (m == 1) {
            out.push_back(ClassRec{Graph::empty_graph(1), {}});
        } else {
            for (const ClassRec& parent : cache[static_cast<std::size_t>(m - 1)]) {
                int pn = parent.graph.order();
                // attach the new leaf to one vertex per orbit of the parent
                std::vector<int> vert_uf(static_cast<std::size_t>(pn));
                for (int v = 0; v < pn; ++v) vert_uf[static_cast<std::size_t>(v)] = v;
                auto find = [&](int x) {
                    while (vert_uf[static_cast<std::size_t>(x)] != x) x = vert_uf[static_cast<std::size_t>(x)];
                    return x;
                };
                for (const auto& sigma : parent.aut_gens)
                    for (int v = 0; v < pn; ++v) {
                        int a = find(v), b = find(sigma[static_cast<std::size_t>(v)]);
                        if (a != b) vert_uf[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
                    }
                for (int a = 0; a < pn; ++a) {
                    if (find(a) != a) continue;
                    Graph child = parent.graph.add_vertex(vbit(a));
                    CanonResult cr = canonical_form(child);
                    // accept only when the new leaf is in the orbit of the
                    // leaf with the largest canonical position
                    int best_leaf = -1, best_pos = -1;
                    for (int v = 0; v <= pn; ++v) {
                        if (child.degree(v) != 1) continue;
                        if (cr.labeling[static_cast<std::size_t>(v)] > best_pos) {
                            best_pos = cr.labeling[static_cast<std::size_t>(v)];
                            best_leaf = v;
                        }
                    }
                    if (cr.orbit[static_cast<std::size_t>(best_leaf)] != cr.orbit[static_cast<std::size_t>(pn)])
                        continue;
                    out.push_back(ClassRec{child, cr.generators});
                }
            }
        }
        cache[static_cast<std::size_t>(m)] = std::move(out);
        done[static_cast<std::size_t>(m)] = true;
    }
    return cache[static_cast<std::size_t>(n)];
}

} // namespace gen

void generate_graphs(int n, Family f, const std::function<void(const Graph&)>& yield) {
    if (n < 0) throw_domain("order must be non-negative");
    if (f == Family::Tree) {
        generate_trees(n, yield);
        return;
    }
    if (n > family_order_budget(f))
        throw_budget("generation for order " + std::to_string(n) + " exceeds the budget of " +
                     std::to_string(family_order_budget(f)));
    bool tf = f == Family::TriangleFree;
    if (n <= 9) {
        for (const auto& rec : gen::level(n, tf))
            if (family_contains(f, rec.graph)) yield(rec.graph);
        return;
    }
    // n == 10: stream children of the cached level-9 classes
    for (const auto& parent : gen::level(9, tf)) {
        gen::expand(parent, tf, [&](const Graph& child, const CanonResult&) {
            if (family_contains(f, child)) yield(child);
        });
    }
}

void generate_trees(int n, const std::function<void(const Graph&)>& yield) {
    if (n < 1) throw_domain("trees need at least one vertex");
    if (n > 12) throw_budget("tree generation for order " + std::to_string(n) + " exceeds the budget of 12");
    for (const auto& rec : gen::tree_level(n)) yield(rec.graph);
}

} // namespace kdis
