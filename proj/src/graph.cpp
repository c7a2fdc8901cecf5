#include "zagreb/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zagreb {

namespace {

std::string pair_text(VertexId u, VertexId v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(VertexId n, const std::vector<EdgePair>& edge_list) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u == v)
            throw std::invalid_argument("self-loop " + pair_text(u, v));
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("endpoint out of range " + pair_text(u, v));
        if (u > v)
            std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            throw std::invalid_argument("duplicate edge " +
                                        pair_text(edges_[i].first, edges_[i].second));
    adj_.resize(static_cast<std::size_t>(n_));
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adj_)
        std::sort(list.begin(), list.end());
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
}

VertexId Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<VertexId>(adj_[static_cast<std::size_t>(v)].size());
}

long long Graph::neighbor_degree_sum(VertexId v) const {
    check_vertex(v);
    long long sum = 0;
    for (VertexId u : adj_[static_cast<std::size_t>(v)])
        sum += degree(u);
    return sum;
}

VertexId Graph::edge_degree(VertexId u, VertexId v) const {
    if (!has_edge(u, v))
        throw std::invalid_argument("not an edge " + pair_text(u, v));
    return degree(u) + degree(v) - 2;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::is_connected() const {
    if (n_ <= 1)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    VertexId reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : adj_[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n_;
}

RootedGraph::RootedGraph(Graph g, VertexId root_vertex) : graph(std::move(g)), root(root_vertex) {
    if (root < 0 || root >= graph.vertex_count())
        throw std::invalid_argument("root out of range: " + std::to_string(root));
}

SubsetGraph::SubsetGraph(Graph g, std::vector<VertexId> u)
    : graph(std::move(g)), subset(std::move(u)) {
    if (subset.empty())
        throw std::invalid_argument("subset must be nonempty");
    std::sort(subset.begin(), subset.end());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= graph.vertex_count())
            throw std::invalid_argument("subset id out of range: " + std::to_string(subset[i]));
        if (i > 0 && subset[i] == subset[i - 1])
            throw std::invalid_argument("duplicate subset id: " + std::to_string(subset[i]));
    }
}

}  // namespace zagreb
