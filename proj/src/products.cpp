#include "zagreb/products.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zagreb {

namespace {

std::vector<VertexId> validated_subset(const Graph& h, std::vector<VertexId> u_set) {
    if (u_set.empty())
        throw std::invalid_argument("subset must be nonempty");
    std::sort(u_set.begin(), u_set.end());
    for (std::size_t i = 0; i < u_set.size(); ++i) {
        if (u_set[i] < 0 || u_set[i] >= h.vertex_count())
            throw std::invalid_argument("subset id out of range: " + std::to_string(u_set[i]));
        if (i > 0 && u_set[i] == u_set[i - 1])
            throw std::invalid_argument("duplicate subset id: " + std::to_string(u_set[i]));
    }
    return u_set;
}

Graph product_graph(const Graph& g, const Graph& h, const std::vector<VertexId>& u_set) {
    const long long ng = g.vertex_count();
    const long long nh = h.vertex_count();
    if (ng * nh > std::numeric_limits<VertexId>::max())
        throw std::invalid_argument("product graph too large");

    std::vector<EdgePair> edges;
    edges.reserve(static_cast<std::size_t>(ng * h.edge_count() +
                                           static_cast<long long>(u_set.size()) * g.edge_count()));
    for (VertexId a = 0; a < ng; ++a)
        for (auto [x, y] : h.edges())
            edges.emplace_back(static_cast<VertexId>(a * nh + x),
                               static_cast<VertexId>(a * nh + y));
    for (VertexId x : u_set)
        for (auto [a, b] : g.edges())
            edges.emplace_back(static_cast<VertexId>(a * nh + x),
                               static_cast<VertexId>(b * nh + x));
    return Graph(static_cast<VertexId>(ng * nh), edges);
}

}  // namespace

Graph hierarchical(const Graph& g, const Graph& h, const std::vector<VertexId>& u_set) {
    return product_graph(g, h, validated_subset(h, u_set));
}

Graph cartesian(const Graph& g, const Graph& h) {
    if (h.vertex_count() == 0)
        return Graph(0, {});
    std::vector<VertexId> all(static_cast<std::size_t>(h.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    return product_graph(g, h, all);
}

Graph cluster(const Graph& g, const RootedGraph& h) {
    return product_graph(g, h.graph, {h.root});
}

Graph thorn(const Graph& g, VertexId t) {
    if (t < 0)
        throw std::invalid_argument("thorn count must be non-negative");
    std::vector<EdgePair> star_edges;
    star_edges.reserve(static_cast<std::size_t>(t));
    for (VertexId leaf = 1; leaf <= t; ++leaf)
        star_edges.emplace_back(0, leaf);
    return cluster(g, RootedGraph(Graph(t + 1, star_edges), 0));
}

}  // namespace zagreb
