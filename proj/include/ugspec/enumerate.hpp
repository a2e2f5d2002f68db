#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ugspec/graph.hpp"
#include "ugspec/spectra.hpp"

namespace ugspec {

// Canonical level sequences (root level 0, lexicographically largest form)
// of all rooted trees on `size` vertices, one per isomorphism class, via
// the constant-time successor rule starting from the path.
void for_each_rooted_tree(int size, const std::function<void(const std::vector<int>&)>& visit);
std::vector<std::vector<int>> rooted_trees(int size);

// Every isomorphism class of connected unicyclic graphs on n vertices with
// girth g exactly once: rooted trees are assigned to the g cycle positions
// and assignments are kept only in their dihedrally minimal rotation.
// Vertices 1..g form the cycle; attached trees are numbered on from g+1.
void for_each_unicyclic(int n, int g, const std::function<void(const Graph&)>& visit);
std::vector<Graph> unicyclic_graphs(int n, int g);
long count_unicyclic(int n, int g);

struct VerificationEntry {
    std::string canonical;
    double lambda = 0.0;
    bool is_u = false;
};

struct VerificationReport {
    int n = 0;
    int g = 0;
    long total = 0;
    std::vector<VerificationEntry> lambda_table;  // ascending by (lambda, canonical)
    bool minimizer_is_u = false;
    bool unique = false;
    double margin = 0.0;             // lambda(second best) - lambda(best)
    std::vector<double> near_ties;   // consecutive gaps below the tie threshold

    std::string to_csv() const;
    std::string to_json() const;
};

// Computes lambda for every class and checks whether U_{n,g} attains the
// strict unique minimum. jobs > 1 fans the eigensolves out to worker
// threads; the merged table is sorted, so output does not depend on jobs.
VerificationReport verify_minimizer(int n, int g, double tol = 1e-12, int jobs = 1);

}  // namespace ugspec
