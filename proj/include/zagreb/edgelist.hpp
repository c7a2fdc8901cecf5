#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "zagreb/graph.hpp"

namespace zagreb {

/// One edge-list file in memory: the graph plus whatever root/subset
/// annotations the file carried.
struct ParsedEdgeList {
    Graph graph;
    std::optional<VertexId> root;
    std::optional<std::vector<VertexId>> subset;

    /// Throws if the file had no "root" line.
    RootedGraph rooted() const;
    /// Throws if the file had no "subset" line.
    SubsetGraph with_subset() const;
};

/// Edge-list text format (UTF-8): lines starting with '#' are comments;
/// first data line is "n m"; then exactly m lines "u v"; optional trailing
/// lines "root r" and/or "subset i1 i2 ...".
ParsedEdgeList parse_edge_list(std::string_view text);

/// Canonical form: "n m" header, edges as "u v" with u < v sorted
/// lexicographically, then root/subset lines (subset ascending).
/// parse(write(x)) == x for every valid x.
std::string write_edge_list(const Graph& g);
std::string write_edge_list(const RootedGraph& rg);
std::string write_edge_list(const SubsetGraph& sg);
std::string write_edge_list(const ParsedEdgeList& p);

}  // namespace zagreb
