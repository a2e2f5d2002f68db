#include "ugspec/transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ugspec/unicyclic.hpp"

namespace ugspec {

namespace {

void validate_pendant_path(const Graph& g, const std::vector<int>& path,
                           const char* name) {
    int len = static_cast<int>(path.size()) - 1;
    if (len < 1) throw std::invalid_argument(std::string("graft_edge: ") + name + " too short");
    for (int i = 0; i + 1 <= len; ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw std::invalid_argument(std::string("graft_edge: ") + name + " is not a path in the graph");
    for (int i = 1; i < len; ++i)
        if (g.degree(path[i]) != 2)
            throw std::invalid_argument(std::string("graft_edge: ") + name + " has a branching internal vertex");
    if (g.degree(path[len]) != 1)
        throw std::invalid_argument(std::string("graft_edge: ") + name + " tip is not pendant");
}

}  // namespace

Graph graft_edge(const Graph& g, const GraftSite& site) {
    const auto& p = site.path_p;
    const auto& q = site.path_q;
    if (p.empty() || q.empty() || p.front() != site.anchor || q.front() != site.anchor)
        throw std::invalid_argument("graft_edge: paths must start at the anchor");
    int k = static_cast<int>(p.size()) - 1;
    int l = static_cast<int>(q.size()) - 1;
    if (l < k) throw std::invalid_argument("graft_edge: need l >= k");
    validate_pendant_path(g, p, "path_p");
    validate_pendant_path(g, q, "path_q");
    std::set<int> seen(p.begin(), p.end());
    for (size_t i = 1; i < q.size(); ++i)
        if (!seen.insert(q[i]).second)
            throw std::invalid_argument("graft_edge: paths share a vertex beyond the anchor");

    return g.without_edge(p[k - 1], p[k]).with_edge(q[l], p[k]);
}

namespace {

struct Branch {
    int length;
    int tip;
    std::vector<int> vertices;  // from the child of w down to the tip
    bool is_path;
};

// Children layout of the tree attached at cycle vertex root.
struct AttachedTree {
    std::map<int, std::vector<int>> children;
    std::map<int, int> depth;  // root at depth 0
};

AttachedTree layout_tree(const Graph& g, int root, const std::vector<int>& tree,
                         const std::set<int>& cycle_set) {
    AttachedTree t;
    t.depth[root] = 0;
    std::set<int> in_tree(tree.begin(), tree.end());
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (u == root && cycle_set.count(w)) continue;
            if (!in_tree.count(w) && w != root) continue;
            if (t.depth.count(w)) continue;
            t.depth[w] = t.depth[u] + 1;
            t.children[u].push_back(w);
            stack.push_back(w);
        }
    }
    return t;
}

// Branch of w through child c: path iff every vertex below has <= 1 child.
Branch trace_branch(const AttachedTree& t, int c) {
    Branch b;
    b.is_path = true;
    int cur = c;
    while (true) {
        b.vertices.push_back(cur);
        auto it = t.children.find(cur);
        if (it == t.children.end() || it->second.empty()) break;
        if (it->second.size() > 1) {
            b.is_path = false;
            // still collect the subtree size for completeness
            std::vector<int> stack(it->second.begin(), it->second.end());
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                b.vertices.push_back(u);
                auto jt = t.children.find(u);
                if (jt != t.children.end())
                    for (int w : jt->second) stack.push_back(w);
            }
            break;
        }
        cur = it->second.front();
    }
    b.length = static_cast<int>(b.vertices.size());
    b.tip = b.vertices.back();
    return b;
}

}  // namespace

FlattenResult flatten_trees(const Graph& g) {
    Graph cur = g;
    decompose_unicyclic(cur);  // validates the input
    int grafts = 0;
    while (true) {
        auto d = decompose_unicyclic(cur);
        std::set<int> cycle_set(d.cycle.begin(), d.cycle.end());

        // Deepest vertex with >= 2 outward branches, all of them paths;
        // ties broken by smaller vertex id.
        int best_w = 0, best_depth = -1;
        AttachedTree best_tree;
        for (int root : d.cycle) {
            if (d.attach_size.at(root) == 0) continue;
            auto t = layout_tree(cur, root, d.tree_vertices.at(root), cycle_set);
            for (const auto& [w, ch] : t.children) {
                if (ch.size() < 2) continue;
                bool all_paths = true;
                for (int c : ch)
                    if (!trace_branch(t, c).is_path) all_paths = false;
                if (!all_paths) continue;
                int depth = t.depth.at(w);
                if (depth > best_depth || (depth == best_depth && w < best_w)) {
                    best_w = w;
                    best_depth = depth;
                    best_tree = t;
                }
            }
        }
        if (best_depth < 0) break;

        std::vector<Branch> branches;
        for (int c : best_tree.children.at(best_w)) branches.push_back(trace_branch(best_tree, c));
        std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
            return a.length != b.length ? a.length < b.length : a.tip < b.tip;
        });
        GraftSite site;
        site.anchor = best_w;
        site.path_p.push_back(best_w);
        for (int v : branches.front().vertices) site.path_p.push_back(v);
        site.path_q.push_back(best_w);
        for (int v : branches.back().vertices) site.path_q.push_back(v);
        cur = graft_edge(cur, site);
        ++grafts;
    }
    return {cur, grafts};
}

std::map<int, std::vector<int>> attached_paths(const Graph& flattened) {
    auto d = decompose_unicyclic(flattened);
    std::set<int> cycle_set(d.cycle.begin(), d.cycle.end());
    std::map<int, std::vector<int>> paths;
    for (int i : d.c_set) {
        auto t = layout_tree(flattened, i, d.tree_vertices.at(i), cycle_set);
        if (t.children.at(i).size() != 1)
            throw std::invalid_argument("attached_paths: tree at vertex " + std::to_string(i) +
                                        " is not a single path");
        Branch b = trace_branch(t, t.children.at(i).front());
        if (!b.is_path)
            throw std::invalid_argument("attached_paths: tree at vertex " + std::to_string(i) +
                                        " is not a path");
        paths[i] = b.vertices;
    }
    return paths;
}

Graph chain_paths(const Graph& g, const std::map<int, std::vector<int>>& paths,
                  const std::vector<int>& ordering) {
    std::set<int> keys;
    for (const auto& [i, p] : paths) keys.insert(i);
    std::set<int> seen;
    for (int i : ordering) {
        if (!keys.count(i) || !seen.insert(i).second)
            throw std::invalid_argument("chain_paths: ordering is not a permutation of the attachment set");
    }
    if (seen.size() != keys.size())
        throw std::invalid_argument("chain_paths: ordering is not a permutation of the attachment set");

    Graph cur = g;
    int chain_tail = paths.at(ordering.front()).back();
    for (size_t j = 1; j < ordering.size(); ++j) {
        int i = ordering[j];
        const auto& path = paths.at(i);
        cur = cur.without_edge(i, path.front()).with_edge(chain_tail, path.front());
        chain_tail = path.back();
    }
    return cur;
}

Graph chain_paths(const Graph& flattened, const std::vector<int>& ordering) {
    return chain_paths(flattened, attached_paths(flattened), ordering);
}

Graph open_cycle(const Graph& g, int j) {
    auto d = decompose_unicyclic(g);
    if (d.girth() % 2 == 0)
        throw std::invalid_argument("open_cycle: girth must be odd");
    auto [a, b] = opposite_edge(d, j);
    return g.without_edge(a, b);
}

GuoPair guo_pair(const Graph& base, int v, int s, int k,
                 const std::vector<std::pair<int, int>>& tip_edges) {
    int nb = base.vertex_count();
    if (v < 1 || v > nb) throw std::invalid_argument("guo_pair: anchor out of range");
    if (s < 2) throw std::invalid_argument("guo_pair: need at least two paths");
    if (k < 1) throw std::invalid_argument("guo_pair: paths must have positive length");
    int t = static_cast<int>(tip_edges.size());
    if (t < 1 || t > s * (s - 1) / 2)
        throw std::invalid_argument("guo_pair: tip edge count out of range");

    auto edges = base.edges();
    auto vertex_at = [&](int path, int dist) { return nb + (path - 1) * k + dist; };
    for (int i = 1; i <= s; ++i) {
        edges.emplace_back(v, vertex_at(i, 1));
        for (int dd = 1; dd < k; ++dd) edges.emplace_back(vertex_at(i, dd), vertex_at(i, dd + 1));
    }
    Graph gs(nb + s * k, edges);

    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : tip_edges) {
        if (a < 1 || a > s || b < 1 || b > s || a == b)
            throw std::invalid_argument("guo_pair: tip edge must join two distinct path tips");
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second)
            throw std::invalid_argument("guo_pair: duplicate tip edge");
        edges.emplace_back(vertex_at(a, k), vertex_at(b, k));
    }
    Graph gst(nb + s * k, edges);
    return {gs, gst};
}

}  // namespace ugspec
