#pragma once

#include "zagreb/graph.hpp"

namespace zagreb {

/// The four U-dependent sums consumed by the hierarchical-product closed
/// form. nu uses the OPEN neighborhood of each u in U.
struct UAggregates {
    long long sigma1 = 0;   // sum over U of d(u)
    long long sigma2 = 0;   // sum over U of d(u)^2
    long long epsilon = 0;  // edges with both endpoints in U
    long long nu = 0;       // sum over U of the neighbor degree sum

    bool operator==(const UAggregates&) const = default;
};

/// Order, size, first Zagreb index and reformulated first Zagreb index.
struct GraphStats {
    long long n = 0;
    long long m = 0;
    long long m1 = 0;
    long long em1 = 0;

    bool operator==(const GraphStats&) const = default;
};

/// First Zagreb index: sum of squared vertex degrees.
long long m1(const Graph& g);

/// Second Zagreb index: sum of d(u)d(v) over edges.
long long m2(const Graph& g);

/// Reformulated first Zagreb index: sum of squared edge degrees. Computed
/// straight from the definition; this is the oracle every closed form in the
/// project is validated against.
long long em1(const Graph& g);

/// Reformulated second Zagreb index: sum of d(e)d(f) over unordered pairs of
/// distinct edges sharing an endpoint, each pair counted once.
long long em2(const Graph& g);

UAggregates subset_aggregates(const SubsetGraph& sg);

GraphStats stats(const Graph& g);

}  // namespace zagreb
