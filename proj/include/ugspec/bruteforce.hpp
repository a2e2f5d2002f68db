#pragma once

#include <map>
#include <set>
#include <string>

namespace ugspec {

// Reference enumeration, independent of the streaming generator: walks all
// n-edge subsets of K_n, keeps the connected ones (these are exactly the
// unicyclic graphs), buckets them by girth and collapses labelings through
// canonical_form. Returns girth -> set of canonical forms.
std::map<int, std::set<std::string>> unicyclic_classes_bruteforce(int n, int jobs = 1);

// Reference count of rooted trees on `size` vertices: all labeled trees by
// Pruefer decoding, every choice of root, deduplicated by the recursive
// sorted-subtree encoding.
long rooted_tree_count_bruteforce(int size);

}  // namespace ugspec
