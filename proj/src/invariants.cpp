#include "zagreb/invariants.hpp"

#include <algorithm>

#include "zagreb/checked.hpp"

namespace zagreb {

long long m1(const Graph& g) {
    long long sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const long long d = g.degree(v);
        sum = checked_add(sum, checked_mul(d, d));
    }
    return sum;
}

long long m2(const Graph& g) {
    long long sum = 0;
    for (auto [u, v] : g.edges())
        sum = checked_add(sum, checked_mul(g.degree(u), g.degree(v)));
    return sum;
}

long long em1(const Graph& g) {
    long long sum = 0;
    for (auto [u, v] : g.edges()) {
        const long long d = g.edge_degree(u, v);
        sum = checked_add(sum, checked_mul(d, d));
    }
    return sum;
}

long long em2(const Graph& g) {
    // Two distinct edges of a simple graph share at most one endpoint, so
    // summing over the incident-edge pairs at each vertex counts every
    // adjacent pair exactly once.
    long long sum = 0;
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
        const auto& nbrs = g.neighbors(w);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const long long de = g.edge_degree(w, nbrs[i]);
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const long long df = g.edge_degree(w, nbrs[j]);
                sum = checked_add(sum, checked_mul(de, df));
            }
        }
    }
    return sum;
}

UAggregates subset_aggregates(const SubsetGraph& sg) {
    const Graph& h = sg.graph;
    UAggregates agg;
    for (VertexId u : sg.subset) {
        const long long d = h.degree(u);
        agg.sigma1 = checked_add(agg.sigma1, d);
        agg.sigma2 = checked_add(agg.sigma2, checked_mul(d, d));
        agg.nu = checked_add(agg.nu, h.neighbor_degree_sum(u));
    }
    for (auto [x, y] : h.edges()) {
        const bool x_in = std::binary_search(sg.subset.begin(), sg.subset.end(), x);
        const bool y_in = std::binary_search(sg.subset.begin(), sg.subset.end(), y);
        if (x_in && y_in)
            ++agg.epsilon;
    }
    return agg;
}

GraphStats stats(const Graph& g) {
    return GraphStats{g.vertex_count(), g.edge_count(), m1(g), em1(g)};
}

}  // namespace zagreb
