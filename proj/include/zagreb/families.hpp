#pragma once

#include "zagreb/graph.hpp"

namespace zagreb {

// Canonical generators for the base graphs and molecular structures used by
// the toolkit. Vertex labelings are fixed and documented so subsets and file
// outputs are unambiguous. Every generator produces a connected simple graph.

Graph path(VertexId n);      // n >= 1; vertices 0..n-1 in order
Graph cycle(VertexId n);     // n >= 3; path plus the edge {n-1, 0}
Graph complete(VertexId n);  // n >= 1
Graph star(VertexId n);      // n >= 2; center is vertex 0
Graph hypercube(int d);      // d >= 0; d-bit ids, edges at Hamming distance 1

RootedGraph rooted_path(VertexId n);  // rooted at the end vertex 0
RootedGraph rooted_star(VertexId n);  // rooted at the center

/// 12-vertex half of the truncated cube: triangles {3k, 3k+1, 3k+2} for
/// k = 0..3 joined into a ring by edges {3k+1, 3(k+1 mod 4)}. The marked
/// subset is its four degree-2 vertices {2, 5, 8, 11}.
SubsetGraph truncated_cube_half();

/// P2 PI H(U) over the half above: 24 vertices, 36 edges, cubic.
Graph truncated_cube();

/// Truncated icosahedron: 60 vertices, 90 edges, cubic, girth 5, twelve
/// pentagonal faces. Bundled adjacency data is validated on first use.
Graph c60();

/// P2 PI c60(U) at the endpoints of the lowest-id edge of c60.
Graph dimer_fullerene();

Graph hex_chain(VertexId n);  // n >= 1 fused hexagons (naphthalene at n = 2)
Graph polyhex(VertexId n);    // n >= 2; zig-zag nanotube on two 2n-cycles
Graph phenylene(VertexId n);  // n >= 1 alternating hexagons and squares

/// Rooted tree of progressive degree p and generation r: the root has p
/// children and every internal vertex has p children through generation r.
/// Ids are breadth-first, root 0.
RootedGraph dendron(VertexId p, VertexId r);  // p >= 2, r >= 1

/// Two dendrons joined root-to-root: cluster(P2, dendron(p, r)).
Graph dicentric_dendrimer(VertexId p, VertexId r);

Graph sun(VertexId m, VertexId n);  // m >= 3, n >= 1; cycle with pendant paths
Graph comb(VertexId n);             // n >= 2; path of paths
Graph octanitrocubane();            // cube with one pendant per vertex

}  // namespace zagreb
