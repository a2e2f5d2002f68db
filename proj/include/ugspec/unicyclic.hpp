#pragma once

#include <map>
#include <set>
#include <vector>

#include "ugspec/graph.hpp"

namespace ugspec {

// Structure of a connected graph with exactly one cycle: the cycle in
// cyclic order, and for each cycle vertex i the attached tree hanging off
// it. attach_size[i] (= l_i) counts the tree vertices excluding i itself,
// so the l_i sum to n - g. c_set holds the cycle vertices with l_i >= 1.
struct UnicyclicDecomposition {
    std::vector<int> cycle;
    std::map<int, int> attach_size;
    std::set<int> c_set;
    std::map<int, std::vector<int>> tree_vertices;

    int girth() const { return static_cast<int>(cycle.size()); }
    // Distance along the cycle between two cycle vertices.
    int cycle_distance(int i, int j) const;
};

UnicyclicDecomposition decompose_unicyclic(const Graph& g);

// The unique cycle edge whose endpoints are both at cycle-distance
// (g-1)/2 from j; requires odd cycle length.
Edge opposite_edge(const UnicyclicDecomposition& d, int j);

// Cycle 1-2-...-g-1 with a pendant path g,g+1,...,n attached at vertex g.
Graph make_u_ng(int n, int g);

// Tree obtained from U_{n,g} (g odd) by deleting the cycle edge
// {(g-1)/2, (g+1)/2}, the edge opposite the path-attachment vertex g.
Graph make_ubar_ng(int n, int g);

// Cycle 1..g with one pendant vertex attached at each listed position.
Graph make_cycle_with_pendants(int g, const std::vector<int>& positions);

// 7-vertex spider: degree-3 center with three legs of length two.
Graph make_spider_s1();

}  // namespace ugspec
