#include "kdis/canon.hpp"

#include <algorithm>
#include <cassert>

namespace kdis {

namespace {

// The partition of vertices is kept as `lab` (vertices in cell order) and
// `cend` (cend[i] != 0 iff position i closes its cell).

struct Canonizer {
    const Graph& g;
    int n;

    std::vector<std::vector<int>> gens;
    std::vector<int> orbit_uf;

    bool have_first = false;
    std::vector<std::uint64_t> first_code, best_code;
    std::vector<int> first_perm, best_perm; // vertex -> position

    std::vector<int> path; // individualized vertices on the current branch

    explicit Canonizer(const Graph& graph) : g(graph), n(graph.order()) {
        orbit_uf.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) orbit_uf[static_cast<std::size_t>(v)] = v;
    }

    int find(std::vector<int>& uf, int x) const {
        while (uf[static_cast<std::size_t>(x)] != x) {
            uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
            x = uf[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(std::vector<int>& uf, int a, int b) const {
        a = find(uf, a);
        b = find(uf, b);
        if (a == b) return;
        if (a > b) std::swap(a, b); // smallest vertex stays the representative
        uf[static_cast<std::size_t>(b)] = a;
    }

    bool is_automorphism(const std::vector<int>& sigma) const {
        for (int v = 0; v < n; ++v) {
            VertexSet mapped = 0;
            for (VertexSet s = g.neighborhood(v); s; s &= s - 1)
                mapped |= vbit(sigma[static_cast<std::size_t>(vfirst(s))]);
            if (mapped != g.neighborhood(sigma[static_cast<std::size_t>(v)])) return false;
        }
        return true;
    }

    void record_automorphism(const std::vector<int>& prior, const std::vector<int>& perm) {
        // prior and perm map vertices to equal codes, so prior^-1 . perm is
        // an automorphism.
        std::vector<int> inv(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(prior[static_cast<std::size_t>(v)])] = v;
        std::vector<int> sigma(static_cast<std::size_t>(n));
        bool identity = true;
        for (int v = 0; v < n; ++v) {
            sigma[static_cast<std::size_t>(v)] = inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
            if (sigma[static_cast<std::size_t>(v)] != v) identity = false;
        }
        if (identity) return;
        assert(is_automorphism(sigma));
        for (int v = 0; v < n; ++v) unite(orbit_uf, v, sigma[static_cast<std::size_t>(v)]);
        gens.push_back(std::move(sigma));
    }

    std::vector<std::uint64_t> pack(const std::vector<int>& perm) const {
        std::vector<int> inv(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = v;
        long long pairs = static_cast<long long>(n) * (n - 1) / 2;
        std::vector<std::uint64_t> code(static_cast<std::size_t>((pairs + 63) / 64), 0);
        long long b = 0;
        for (int i = 0; i < n; ++i) {
            VertexSet row = 0;
            for (VertexSet s = g.neighborhood(inv[static_cast<std::size_t>(i)]); s; s &= s - 1)
                row |= vbit(perm[static_cast<std::size_t>(vfirst(s))]);
            for (int j = i + 1; j < n; ++j, ++b)
                if (vcontains(row, j)) code[static_cast<std::size_t>(b >> 6)] |= std::uint64_t{1} << (63 - (b & 63));
        }
        return code;
    }

    // Equitable refinement: split cells by neighbor counts into other cells
    // until a full pass produces no change.  Subcells are ordered by
    // ascending count, which keeps the procedure isomorphism-invariant.
    void refine(std::vector<int>& lab, std::vector<char>& cend) const {
        std::vector<int> cnt(static_cast<std::size_t>(n));
        bool changed = true;
        while (changed) {
            changed = false;
            int a = 0;
            while (a < n) {
                int b = a;
                while (!cend[static_cast<std::size_t>(b)]) ++b;
                VertexSet w = 0;
                for (int i = a; i <= b; ++i) w |= vbit(lab[static_cast<std::size_t>(i)]);

                int c = 0;
                while (c < n) {
                    int d = c;
                    while (!cend[static_cast<std::size_t>(d)]) ++d;
                    if (d > c) {
                        bool uniform = true;
                        int c0 = vcount(g.neighborhood(lab[static_cast<std::size_t>(c)]) & w);
                        for (int i = c; i <= d; ++i) {
                            cnt[static_cast<std::size_t>(i)] =
                                vcount(g.neighborhood(lab[static_cast<std::size_t>(i)]) & w);
                            if (cnt[static_cast<std::size_t>(i)] != c0) uniform = false;
                        }
                        if (!uniform) {
                            std::stable_sort(lab.begin() + c, lab.begin() + d + 1, [&](int x, int y) {
                                return vcount(g.neighborhood(x) & w) < vcount(g.neighborhood(y) & w);
                            });
                            for (int i = c; i < d; ++i)
                                cend[static_cast<std::size_t>(i)] =
                                    vcount(g.neighborhood(lab[static_cast<std::size_t>(i)]) & w) !=
                                    vcount(g.neighborhood(lab[static_cast<std::size_t>(i + 1)]) & w);
                            changed = true;
                        }
                    }
                    c = d + 1;
                }
                a = b + 1;
            }
        }
    }

    bool tried_equivalent(const std::vector<int>& tried, int v) const {
        if (tried.empty() || gens.empty()) return false;
        std::vector<int> uf(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) uf[static_cast<std::size_t>(x)] = x;
        bool any = false;
        for (const auto& sigma : gens) {
            bool fixes_path = true;
            for (int p : path)
                if (sigma[static_cast<std::size_t>(p)] != p) {
                    fixes_path = false;
                    break;
                }
            if (!fixes_path) continue;
            any = true;
            for (int x = 0; x < n; ++x) unite(uf, x, sigma[static_cast<std::size_t>(x)]);
        }
        if (!any) return false;
        int rv = find(uf, v);
        for (int u : tried)
            if (find(uf, u) == rv) return true;
        return false;
    }

    void search(std::vector<int> lab, std::vector<char> cend) {
        // locate the first non-singleton cell
        int target = -1;
        for (int i = 0; i < n; ++i) {
            if (!cend[static_cast<std::size_t>(i)]) {
                target = i;
                break;
            }
        }

        if (target < 0) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
            auto code = pack(perm);
            if (!have_first) {
                have_first = true;
                first_code = code;
                first_perm = perm;
                best_code = std::move(code);
                best_perm = std::move(perm);
                return;
            }
            if (code == first_code) {
                record_automorphism(first_perm, perm);
            } else if (code == best_code) {
                record_automorphism(best_perm, perm);
            }
            if (code > best_code) {
                best_code = std::move(code);
                best_perm = std::move(perm);
            }
            return;
        }

        int cell_end = target;
        while (!cend[static_cast<std::size_t>(cell_end)]) ++cell_end;
        std::vector<int> cell(lab.begin() + target, lab.begin() + cell_end + 1);

        std::vector<int> tried;
        for (int v : cell) {
            if (tried_equivalent(tried, v)) continue;
            tried.push_back(v);

            std::vector<int> lab2 = lab;
            std::vector<char> cend2 = cend;
            // move v to the front of its cell and close it as a singleton
            auto it = std::find(lab2.begin() + target, lab2.begin() + cell_end + 1, v);
            std::rotate(lab2.begin() + target, it, it + 1);
            cend2[static_cast<std::size_t>(target)] = 1;
            refine(lab2, cend2);

            path.push_back(v);
            search(std::move(lab2), std::move(cend2));
            path.pop_back();
        }
    }

    CanonResult run() {
        CanonResult out;
        if (n == 0) return out;
        std::vector<int> lab(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) lab[static_cast<std::size_t>(v)] = v;
        std::vector<char> cend(static_cast<std::size_t>(n), 0);
        cend[static_cast<std::size_t>(n - 1)] = 1;
        refine(lab, cend);
        search(std::move(lab), std::move(cend));

        assert(pack(best_perm) == best_code);
        out.labeling = best_perm;
        out.code = std::move(best_code);
        out.generators = std::move(gens);
        out.orbit.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) out.orbit[static_cast<std::size_t>(v)] = find(orbit_uf, v);
        return out;
    }
};

} // namespace

CanonResult canonical_form(const Graph& g) {
    Canonizer c(g);
    return c.run();
}

std::vector<std::uint64_t> canonical_code(const Graph& g) { return canonical_form(g).code; }

Graph canonical_graph(const Graph& g) {
    CanonResult cr = canonical_form(g);
    return g.permuted(cr.labeling);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

} // namespace kdis
