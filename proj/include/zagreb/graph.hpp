#pragma once

#include <utility>
#include <vector>

namespace zagreb {

using VertexId = int;
using EdgePair = std::pair<VertexId, VertexId>;

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// No self-loops, no duplicate edges, every endpoint id < n. Connectivity is
/// not an invariant; intermediate constructions may be disconnected, so it is
/// queried on demand.
class Graph {
public:
    Graph() = default;

    /// Builds the graph, validating every edge. Edge order in the input is
    /// irrelevant; edges are stored canonically (u < v, sorted).
    Graph(VertexId n, const std::vector<EdgePair>& edge_list);

    VertexId vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    VertexId degree(VertexId v) const;

    /// Sum of degrees over the open neighborhood of v.
    long long neighbor_degree_sum(VertexId v) const;

    /// d(u) + d(v) - 2 for an edge {u, v}; throws if the pair is not an edge.
    VertexId edge_degree(VertexId u, VertexId v) const;

    bool has_edge(VertexId u, VertexId v) const;
    const std::vector<VertexId>& neighbors(VertexId v) const;

    /// Canonical edge list: each pair with u < v, sorted lexicographically.
    const std::vector<EdgePair>& edges() const { return edges_; }

    /// True iff the graph has one connected component. Vertexless and
    /// single-vertex graphs count as connected.
    bool is_connected() const;

    /// Equality is (n, canonical edge set) equality.
    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(VertexId v) const;

    VertexId n_ = 0;
    std::vector<std::vector<VertexId>> adj_;  // sorted neighbor lists
    std::vector<EdgePair> edges_;
};

/// A graph plus a distinguished root vertex.
struct RootedGraph {
    Graph graph;
    VertexId root = 0;

    RootedGraph(Graph g, VertexId root_vertex);
};

/// A graph plus a distinguished nonempty vertex subset U.
struct SubsetGraph {
    Graph graph;
    std::vector<VertexId> subset;  // sorted, duplicate-free, nonempty

    SubsetGraph(Graph g, std::vector<VertexId> u);
};

}  // namespace zagreb
