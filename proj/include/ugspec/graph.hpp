#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ugspec {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 1..n. Edges are stored normalized
// (u < v), sorted, without duplicates; construction validates the input.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v - 1]; }
    int degree(int v) const { return static_cast<int>(adj_[v - 1].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    // perm[old-1] = new id; perm must be a permutation of 1..n
    Graph relabeled(const std::vector<int>& perm) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

Graph new_graph(int n, const std::vector<Edge>& edges);

bool is_connected(const Graph& g);

// BFS levels from src; unreachable vertices get -1. Index 0 <-> vertex 1.
std::vector<int> bfs_distances(const Graph& g, int src);

// Shortest-path length in hops; throws if u and v are not connected.
int distance(const Graph& g, int u, int v);

// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

bool is_bipartite(const Graph& g);

}  // namespace ugspec
