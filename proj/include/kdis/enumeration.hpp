#ifndef KDIS_ENUMERATION_HPP
#define KDIS_ENUMERATION_HPP

#include <vector>

#include "kdis/graph.hpp"

namespace kdis {

/// True iff S induces no edge.
bool is_independent(const Graph& g, VertexSet s);

/// True iff S is independent and every vertex outside S has at least k
/// neighbors inside S.  The empty set on the empty graph qualifies.
bool is_k_dominating_independent(const Graph& g, VertexSet s, int k);

enum class EnumStrategy {
    Auto,       // full scan up to 20 vertices, branch and bound above
    FullScan,   // check all 2^n subsets
    BranchBound // degeneracy-ordered branch and bound with pruning
};

/// All k-DISes of a graph, sorted by ascending bitmask value.
struct KDisList {
    int k = 1;
    std::vector<VertexSet> sets;
};

KDisList enumerate_kdis(const Graph& g, int k, EnumStrategy strategy = EnumStrategy::Auto);

/// Number of k-DISes; same traversal as enumerate_kdis without materializing.
long long count_kdis(const Graph& g, int k, EnumStrategy strategy = EnumStrategy::Auto);

} // namespace kdis

#endif
