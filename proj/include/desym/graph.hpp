#ifndef DESYM_GRAPH_HPP
#define DESYM_GRAPH_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "desym/errors.hpp"

namespace desym {

struct Edge {
    int u, v; // u < v

    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
};

// Finite simple undirected graph. Vertices are 0..n-1; edges are kept sorted
// in (u,v) lexicographic order, which is the canonical edge indexing used by
// every edge colouring in this project. Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Validates: indices in range, no loops, no duplicates. Edges may be given
    // in any order and orientation.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }
    const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    // -1 when (u,v) is not an edge.
    int edge_index(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> edge_index_; // n*n table, -1 for non-edges
};

// Auto-detects the format: a leading digit means "n, then one 'u v' pair per
// line"; anything else is treated as a graph6 line.
Graph parse_graph(std::string_view text);

Graph parse_graph6(std::string_view text);
Graph parse_edge_list(std::string_view text);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

} // namespace desym

#endif
