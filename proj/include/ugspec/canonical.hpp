#pragma once

#include <string>

#include "ugspec/graph.hpp"

namespace ugspec {

// Isomorphism-invariant certificate: two graphs get the same string iff
// they are isomorphic. Encodes the lexicographically largest upper-triangle
// adjacency bit string over vertex orderings compatible with an invariant
// partition (degree + distance profile, refined by neighbor classes).
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace ugspec
