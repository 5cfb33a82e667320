#ifndef KDIS_GENERATE_HPP
#define KDIS_GENERATE_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kdis/canon.hpp"
#include "kdis/graph.hpp"

namespace kdis {

enum class Family { All, Connected, TriangleFree, Tree };

std::string to_string(Family f);
Family family_from_string(std::string_view s);
bool family_contains(Family f, const Graph& g);

/// Largest order the exhaustive generator accepts for a family.
int family_order_budget(Family f);

/// Stream exactly one representative per isomorphism class of the family, in
/// a fixed deterministic order.  Throws Error(Budget) past the order budget.
void generate_graphs(int n, Family f, const std::function<void(const Graph&)>& yield);

/// One representative per free-tree isomorphism class, 1 <= n <= 12.
void generate_trees(int n, const std::function<void(const Graph&)>& yield);

namespace gen {

/// A generated isomorphism-class representative together with the
/// automorphism generators of its own labeling (used to deduplicate
/// extensions of this graph).
struct ClassRec {
    Graph graph;
    std::vector<std::vector<int>> aut_gens;
};

/// All classes of order n (optionally restricted to triangle-free graphs,
/// which are closed under vertex deletion and can be pruned during
/// augmentation).  Cached per process; n <= 9.
const std::vector<ClassRec>& level(int n, bool triangle_free);

/// All free-tree classes of order n; cached, n <= 12.
const std::vector<ClassRec>& tree_level(int n);

/// Children of `parent` one vertex larger, each exactly once per class, in a
/// deterministic order.  The callback receives the child and its canonical
/// data (whose generators become the child's aut_gens).
void expand(const ClassRec& parent, bool triangle_free,
            const std::function<void(const Graph&, const CanonResult&)>& yield);

} // namespace gen

} // namespace kdis

#endif
