#ifndef KDIS_CANON_HPP
#define KDIS_CANON_HPP

#include <cstdint>
#include <vector>

#include "kdis/graph.hpp"

namespace kdis {

/// Result of the canonical labeling search: a labeling realizing the
/// canonical form, the packed canonical adjacency code, generators of the
/// automorphism group discovered along the way, and the vertex orbits they
/// induce.  Two graphs are isomorphic iff their codes are equal.
struct CanonResult {
    std::vector<int> labeling;                // vertex -> canonical position
    std::vector<std::uint64_t> code;          // packed upper triangle, row-major
    std::vector<std::vector<int>> generators; // automorphism generators
    std::vector<int> orbit;                   // vertex -> smallest vertex of its orbit
};

/// Canonical form via equitable partition refinement plus backtracking over
/// individualizations, pruned by the orbits of automorphisms found so far.
CanonResult canonical_form(const Graph& g);

std::vector<std::uint64_t> canonical_code(const Graph& g);

/// The graph relabeled into its canonical labeling.
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace kdis

#endif
