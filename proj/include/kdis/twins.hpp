#ifndef KDIS_TWINS_HPP
#define KDIS_TWINS_HPP

#include <map>
#include <vector>

#include "kdis/graph.hpp"

namespace kdis {

/// Almost twins: non-adjacent x, y whose neighborhood differences both have
/// fewer than k elements.
bool are_almost_twins(const Graph& g, int x, int y, int k);

/// The auxiliary graph on N(v) whose edges are the almost-twin pairs,
/// together with the map from its vertices back to the host graph.
struct TwinGraph {
    Graph graph;
    std::vector<int> vertices; // twin-graph index -> host vertex
};

TwinGraph twin_graph(const Graph& g, int v, int k);

/// Component-size profile of the twin graph at v; b_threshold = beta * k.
struct TwinProfile {
    int v = 0;
    int delta = 0;
    std::vector<int> component_sizes; // ascending
    double b_threshold = 0.0;
};

TwinProfile twin_profile(const Graph& g, int v, int k, double beta);

/// Checks that every component of the twin graph at v is wholly inside or
/// wholly outside every k-DIS, and that no host edge runs inside a component.
bool same_component_same_kdis(const Graph& g, int v, int k);

/// Outcome of the counting recurrence at a vertex: whether the number of
/// k-DISes is bounded by
///   mi(n-d-1) + [sum C(s_i,2) mi(n-d-s_i) + (C(d,2)-sum C(s_i,2)) mi(n-d-k)] / C(k,2)
/// where d = deg(v), s_i are the twin-graph component sizes and mi(m) comes
/// from the supplied table of exact per-order maxima (mi(m) = 0 for m < 0).
struct RecurrenceCheck {
    bool holds = false;
    long long count = 0;   // k-DIS count of the graph itself
    long long rhs_num = 0; // right-hand side as an exact fraction
    long long rhs_den = 1;
};

RecurrenceCheck check_recurrence_bound(const Graph& g, int v, int k,
                                       const std::map<int, long long>& mi_table);

} // namespace kdis

#endif
