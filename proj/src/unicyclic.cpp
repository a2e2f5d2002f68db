#include "ugspec/unicyclic.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ugspec {

int UnicyclicDecomposition::cycle_distance(int i, int j) const {
    int g = girth();
    int pi = -1, pj = -1;
    for (int p = 0; p < g; ++p) {
        if (cycle[p] == i) pi = p;
        if (cycle[p] == j) pj = p;
    }
    if (pi < 0 || pj < 0)
        throw std::invalid_argument("cycle_distance: vertex not on the cycle");
    int d = std::abs(pi - pj);
    return std::min(d, g - d);
}

UnicyclicDecomposition decompose_unicyclic(const Graph& g) {
    int n = g.vertex_count();
    if (g.edge_count() != n)
        throw std::invalid_argument("decompose_unicyclic: edge count differs from vertex count");
    if (!is_connected(g))
        throw std::invalid_argument("decompose_unicyclic: graph is not connected");

    // The 2-core is the unique cycle: strip degree-1 vertices repeatedly.
    std::vector<int> deg(n);
    for (int v = 1; v <= n; ++v) deg[v - 1] = g.degree(v);
    std::vector<bool> stripped(n, false);
    std::deque<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[v - 1] == 1) leaves.push_back(v);
    // strip_parent[v] = the neighbor v hung off when it was removed
    std::vector<int> strip_parent(n, 0);
    std::vector<int> strip_order;
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop_front();
        stripped[v - 1] = true;
        strip_order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (stripped[w - 1]) continue;
            strip_parent[v - 1] = w;
            if (--deg[w - 1] == 1) leaves.push_back(w);
        }
    }

    std::vector<int> core;
    for (int v = 1; v <= n; ++v)
        if (!stripped[v - 1]) core.push_back(v);
    if (core.empty() || static_cast<int>(core.size()) < 3)
        throw std::invalid_argument("decompose_unicyclic: graph is not unicyclic");

    // Walk the cycle starting at its smallest vertex, toward the smaller of
    // its two core neighbors, so the cyclic order is deterministic.
    UnicyclicDecomposition d;
    int start = core.front();
    int prev = 0, cur = start;
    do {
        d.cycle.push_back(cur);
        int next = 0;
        for (int w : g.neighbors(cur)) {
            if (stripped[w - 1] || w == prev) continue;
            if (next == 0 || w < next) next = w;
        }
        if (next == 0)
            throw std::invalid_argument("decompose_unicyclic: core is not a single cycle");
        prev = cur;
        cur = next;
    } while (cur != start);
    if (static_cast<int>(d.cycle.size()) != static_cast<int>(core.size()))
        throw std::invalid_argument("decompose_unicyclic: core is not a single cycle");

    // Each stripped vertex belongs to the cycle vertex it reaches without
    // re-entering the cycle; follow strip parents in reverse strip order.
    std::vector<int> anchor(n, 0);
    for (int v : d.cycle) anchor[v - 1] = v;
    for (auto it = strip_order.rbegin(); it != strip_order.rend(); ++it)
        anchor[*it - 1] = anchor[strip_parent[*it - 1] - 1];

    for (int v : d.cycle) {
        d.attach_size[v] = 0;
        d.tree_vertices[v] = {};
    }
    for (int v = 1; v <= n; ++v) {
        if (!stripped[v - 1]) continue;
        int a = anchor[v - 1];
        d.attach_size[a] += 1;
        d.tree_vertices[a].push_back(v);
    }
    for (auto& [v, tree] : d.tree_vertices) std::sort(tree.begin(), tree.end());
    for (auto& [v, l] : d.attach_size)
        if (l >= 1) d.c_set.insert(v);
    return d;
}

Edge opposite_edge(const UnicyclicDecomposition& d, int j) {
    int g = d.girth();
    if (g % 2 == 0)
        throw std::invalid_argument("opposite_edge: cycle length must be odd");
    int pj = -1;
    for (int p = 0; p < g; ++p)
        if (d.cycle[p] == j) pj = p;
    if (pj < 0) throw std::invalid_argument("opposite_edge: vertex not on the cycle");
    int h = (g - 1) / 2;
    int a = d.cycle[(pj + h) % g];
    int b = d.cycle[(pj + h + 1) % g];
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph make_u_ng(int n, int g) {
    if (g < 3) throw std::invalid_argument("make_u_ng: girth must be at least 3");
    if (n <= g) throw std::invalid_argument("make_u_ng: need n > g");
    std::vector<Edge> edges;
    for (int i = 1; i < g; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, g);
    for (int i = g; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph make_ubar_ng(int n, int g) {
    if (g % 2 == 0) throw std::invalid_argument("make_ubar_ng: girth must be odd");
    return make_u_ng(n, g).without_edge((g - 1) / 2, (g + 1) / 2);
}

Graph make_cycle_with_pendants(int g, const std::vector<int>& positions) {
    if (g < 3) throw std::invalid_argument("make_cycle_with_pendants: cycle length must be at least 3");
    std::vector<Edge> edges;
    for (int i = 1; i < g; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, g);
    std::set<int> seen;
    int next = g + 1;
    for (int p : positions) {
        if (p < 1 || p > g)
            throw std::invalid_argument("make_cycle_with_pendants: position out of range");
        if (!seen.insert(p).second)
            throw std::invalid_argument("make_cycle_with_pendants: duplicate position " + std::to_string(p));
        edges.emplace_back(p, next++);
    }
    return Graph(g + static_cast<int>(positions.size()), edges);
}

Graph make_spider_s1() {
    return Graph(7, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}});
}

}  // namespace ugspec
