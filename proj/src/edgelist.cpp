#include "zagreb/edgelist.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace zagreb {

namespace {

// Data lines of the file: comments and blank lines removed, one vector of
// whitespace-separated tokens per remaining line.
std::vector<std::vector<std::string>> data_lines(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream input{std::string(text)};
    std::string line;
    while (std::getline(input, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream tokens(line);
        std::vector<std::string> fields;
        std::string tok;
        while (tokens >> tok)
            fields.push_back(tok);
        if (fields.empty() || fields[0].front() == '#')
            continue;
        lines.push_back(std::move(fields));
    }
    return lines;
}

VertexId parse_id(const std::string& tok, const char* what) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + tok + "'");
    }
    if (used != tok.size() || value < 0 || value > 0x7fffffff)
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + tok + "'");
    return static_cast<VertexId>(value);
}

}  // namespace

RootedGraph ParsedEdgeList::rooted() const {
    if (!root)
        throw std::invalid_argument("edge list carries no root");
    return RootedGraph(graph, *root);
}

SubsetGraph ParsedEdgeList::with_subset() const {
    if (!subset)
        throw std::invalid_argument("edge list carries no subset");
    return SubsetGraph(graph, *subset);
}

ParsedEdgeList parse_edge_list(std::string_view text) {
    const auto lines = data_lines(text);
    if (lines.empty() || lines[0].size() != 2)
        throw std::invalid_argument("malformed header: expected 'n m'");
    const VertexId n = parse_id(lines[0][0], "header");
    const VertexId m = parse_id(lines[0][1], "header");

    std::vector<EdgePair> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::size_t next = 1;
    for (VertexId i = 0; i < m; ++i, ++next) {
        if (next >= lines.size() || lines[next][0] == "root" || lines[next][0] == "subset")
            throw std::invalid_argument("wrong edge count: fewer edge lines than declared");
        if (lines[next].size() != 2)
            throw std::invalid_argument("malformed edge line");
        edges.emplace_back(parse_id(lines[next][0], "edge"), parse_id(lines[next][1], "edge"));
    }

    ParsedEdgeList result{Graph(n, edges), std::nullopt, std::nullopt};
    for (; next < lines.size(); ++next) {
        const auto& fields = lines[next];
        if (fields[0] == "root") {
            if (result.root)
                throw std::invalid_argument("duplicate root line");
            if (fields.size() != 2)
                throw std::invalid_argument("malformed root line");
            const VertexId r = parse_id(fields[1], "root");
            if (r >= n)
                throw std::invalid_argument("root out of range: " + std::to_string(r));
            result.root = r;
        } else if (fields[0] == "subset") {
            if (result.subset)
                throw std::invalid_argument("duplicate subset line");
            std::vector<VertexId> ids;
            for (std::size_t k = 1; k < fields.size(); ++k)
                ids.push_back(parse_id(fields[k], "subset"));
            // SubsetGraph enforces nonemptiness, range and uniqueness.
            result.subset = SubsetGraph(result.graph, ids).subset;
        } else {
            throw std::invalid_argument("wrong edge count: unexpected line after edges");
        }
    }
    return result;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

std::string write_edge_list(const RootedGraph& rg) {
    std::string out = write_edge_list(rg.graph);
    out += "root " + std::to_string(rg.root) + "\n";
    return out;
}

std::string write_edge_list(const SubsetGraph& sg) {
    std::string out = write_edge_list(sg.graph);
    out += "subset";
    for (VertexId v : sg.subset)
        out += ' ' + std::to_string(v);
    out += '\n';
    return out;
}

std::string write_edge_list(const ParsedEdgeList& p) {
    if (p.root && p.subset) {
        std::string out = write_edge_list(RootedGraph(p.graph, *p.root));
        std::string with = write_edge_list(SubsetGraph(p.graph, *p.subset));
        return out + with.substr(write_edge_list(p.graph).size());
    }
    if (p.root)
        return write_edge_list(RootedGraph(p.graph, *p.root));
    if (p.subset)
        return write_edge_list(SubsetGraph(p.graph, *p.subset));
    return write_edge_list(p.graph);
}

}  // namespace zagreb
