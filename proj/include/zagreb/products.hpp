#pragma once

#include "zagreb/graph.hpp"

namespace zagreb {

// All products share one labeling convention, which is part of the public
// contract: the vertex (a, x), a from g and x from h, gets id a*|V(h)| + x.
// Products never require connected inputs.

/// Generalized hierarchical product g PI h(U): every copy of h keeps its
/// edges; g-edges run between copies at the rows x in U. (a,x) ~ (b,y) iff
/// [x = y in U and ab in E(g)] or [a = b and xy in E(h)].
/// |E| = |V(g)|*|E(h)| + |U|*|E(g)|. U must be nonempty with valid ids.
Graph hierarchical(const Graph& g, const Graph& h, const std::vector<VertexId>& u_set);

/// Cartesian product, the U = V(h) special case.
Graph cartesian(const Graph& g, const Graph& h);

/// Cluster product g{h}: one copy of h glued by its root onto each vertex of
/// g; the U = {root} special case.
Graph cluster(const Graph& g, const RootedGraph& h);

/// t-thorn (t-fold bristled) graph: t pendant vertices attached to every
/// vertex of g; the cluster of g with a star rooted at its center. t = 0
/// returns g unchanged.
Graph thorn(const Graph& g, VertexId t);

}  // namespace zagreb
