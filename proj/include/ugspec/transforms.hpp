#pragma once

#include <map>
#include <vector>

#include "ugspec/graph.hpp"

namespace ugspec {

// Two pendant paths attached at a common anchor: path_p = v,v1..vk and
// path_q = v,u1..ul with l >= k >= 1. Internal vertices must have degree 2
// and the two tips degree 1.
struct GraftSite {
    int anchor = 0;
    std::vector<int> path_p;
    std::vector<int> path_q;
};

// Removes {v_{k-1}, v_k} and adds {u_l, v_k}: the tip of the shorter path
// moves to the end of the longer one. Validates the site.
Graph graft_edge(const Graph& g, const GraftSite& site);

struct FlattenResult {
    Graph graph;
    int grafts = 0;
};

// Repeated grafting until every attached tree of a unicyclic graph is a
// pendant path. Deterministic: always grafts at the deepest vertex whose
// outward branches are all paths, shortest branch onto longest.
FlattenResult flatten_trees(const Graph& g);

// Pendant path at each cycle vertex of a flattened unicyclic graph,
// listed head (adjacent to the cycle vertex) to tail.
std::map<int, std::vector<int>> attached_paths(const Graph& flattened);

// Re-hangs the pendant paths into one chain: for j = 2..r the path at
// ordering[j] is cut from its vertex and appended to the growing chain
// rooted at ordering[1]. The explicit-paths overload also serves trees
// produced by open_cycle, where the paths cannot be re-derived.
Graph chain_paths(const Graph& flattened, const std::vector<int>& ordering);
Graph chain_paths(const Graph& g, const std::map<int, std::vector<int>>& paths,
                  const std::vector<int>& ordering);

// Deletes the cycle edge opposite cycle vertex j (odd girth): the result
// is a tree on the same vertex set.
Graph open_cycle(const Graph& g, int j);

struct GuoPair {
    Graph paths_only;  // G_s^k
    Graph tips_tied;   // G_{s,t}^k
};

// Attaches s >= 2 paths of length k >= 1 at v, then forms a second graph
// with t extra edges among the path tips. tip_edges lists pairs of path
// indices in 1..s. The two graphs share their Laplacian spectral radius.
GuoPair guo_pair(const Graph& base, int v, int s, int k,
                 const std::vector<std::pair<int, int>>& tip_edges);

}  // namespace ugspec
