#ifndef DESYM_GRAPH_ALGORITHMS_HPP
#define DESYM_GRAPH_ALGORITHMS_HPP

#include <optional>
#include <vector>

#include "desym/graph.hpp"

namespace desym {

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Edges whose removal disconnects the graph. Sorted edge indices.
// Requires a connected input.
std::vector<int> bridges(const Graph& g);

// Complement of bridges(): the edges lying on some cycle (E_C).
std::vector<int> cycle_edges(const Graph& g);

enum class ClassKind { path, cycle, disjoint };

// Partition of E_C under the relation "e ~ f iff every cycle containing e
// also contains f". Each class induces a path, a full cycle, or at least two
// vertex-disjoint paths.
struct CycleStructure {
    std::vector<int> cycle_edges;          // E_C, sorted
    std::vector<std::vector<int>> classes; // sorted edge indices per class; classes ordered by least edge
    std::vector<ClassKind> kinds;          // parallel to classes
    std::vector<int> class_sizes;          // edge count per class (path length for path classes)
};

// Decision procedure: e ~ f (e != f) iff e is a bridge of g with f deleted.
CycleStructure equivalence_classes(const Graph& g);

enum class TreeKind { not_a_tree, unicentred, bicentred };

struct TreeShape {
    TreeKind kind = TreeKind::not_a_tree;
    std::vector<int> centres;  // 1 or 2 vertex indices, sorted
    int central_edge = -1;     // edge index joining the two centres when bicentred
};

// Centres of a connected acyclic graph via iterated leaf stripping.
// Never throws: a graph that is not a tree yields kind == not_a_tree.
TreeShape tree_shape(const Graph& g);

inline constexpr int kUnreachable = -1;

struct DistanceTable {
    std::vector<std::vector<int>> dist; // kUnreachable for vertices in different components
    std::vector<int> component;         // component id per vertex

    int operator()(int u, int v) const { return dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
};

// All-pairs distances in g minus the given edges.
DistanceTable forest_distances(const Graph& g, const std::vector<int>& removed_edges);

// A simple cycle through the edge (u0,v0) whose traversal from u0 away from
// v0 starts with the edge u0-w, or nothing if no such cycle exists. Realised
// as a shortest path from w to v0 in g minus the vertex u0 (BFS, ascending
// neighbour tie-break), prepended with u0-w and closed with (u0,v0).
// Returns the cycle as an edge index sequence.
std::optional<std::vector<int>> cycle_through_edge_with_first_step(const Graph& g, int u0, int v0, int w);

} // namespace desym

#endif
