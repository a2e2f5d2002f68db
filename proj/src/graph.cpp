#include "ugspec/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace ugspec {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n <= 0) throw std::invalid_argument("graph: vertex count must be positive");
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop " + pair_str(u, v));
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("graph: vertex out of range in " + pair_str(u, v));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("graph: duplicate edge " + pair_str(u, v));
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u - 1].push_back(v);
        adj_[v - 1].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph Graph::with_edge(int u, int v) const {
    auto es = edges_;
    es.emplace_back(u, v);
    return Graph(n_, es);
}

Graph Graph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (!has_edge(u, v))
        throw std::invalid_argument("graph: cannot remove absent edge " + pair_str(u, v));
    std::vector<Edge> es;
    es.reserve(edges_.size() - 1);
    for (auto e : edges_)
        if (e != Edge{u, v}) es.push_back(e);
    return Graph(n_, es);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("relabeled: permutation size mismatch");
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (auto [u, v] : edges_) es.emplace_back(perm[u - 1], perm[v - 1]);
    return Graph(n_, es);
}

Graph new_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{src};
    dist[src - 1] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[w - 1] < 0) {
                dist[w - 1] = dist[u - 1] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 1);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

int distance(const Graph& g, int u, int v) {
    int d = bfs_distances(g, u)[v - 1];
    if (d < 0) throw std::invalid_argument("distance: vertices in different components");
    return d;
}

std::optional<int> girth(const Graph& g) {
    // Shortest cycle through each BFS root; the minimum over roots is exact.
    int n = g.vertex_count();
    int best = -1;
    for (int s = 1; s <= n; ++s) {
        std::vector<int> dist(n, -1), parent(n, 0);
        std::deque<int> queue{s};
        dist[s - 1] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (dist[w - 1] < 0) {
                    dist[w - 1] = dist[u - 1] + 1;
                    parent[w - 1] = u;
                    queue.push_back(w);
                } else if (w != parent[u - 1]) {
                    int len = dist[u - 1] + dist[w - 1] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 1; s <= n; ++s) {
        if (color[s - 1] >= 0) continue;
        color[s - 1] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[w - 1] < 0) {
                    color[w - 1] = 1 - color[u - 1];
                    queue.push_back(w);
                } else if (color[w - 1] == color[u - 1]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace ugspec
