#ifndef KDIS_PRODUCTS_HPP
#define KDIS_PRODUCTS_HPP

#include "kdis/graph.hpp"

namespace kdis {

/// Lexicographic product: (u,v) ~ (x,y) iff u ~ x in G, or u = x and v ~ y
/// in H.  Vertex (u,v) gets index u*|V(H)| + v.
Graph lexicographic_product(const Graph& g, const Graph& h);

/// Tensor (categorical) product: (u,v) ~ (x,y) iff u ~ x in G and v ~ y in H.
/// Same row-major vertex labeling as the lexicographic product.
Graph tensor_product(const Graph& g, const Graph& h);

/// Blow-up of a vertex set along G . E_l: maps I to {(u, j) : u in I,
/// 0 <= j < l} inside lexicographic_product(G, E_l).  I must be independent
/// in G; if I is a k-DIS there, the image is a (k*l)-DIS in the product.
VertexSet lift_kdis(const Graph& g, VertexSet independent_set, int l);

} // namespace kdis

#endif
