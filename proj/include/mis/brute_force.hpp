#pragma once

#include "mis/graph.hpp"

namespace mis {

// Exhaustive maximum independent set with simple pruning. Used as the
// oracle everything else is tested against, so it stays deliberately
// independent of the reduction and branch-and-bound code paths.
//
// Returns the lexicographically smallest maximum set. Throws if the graph
// has more than 24 live vertices.
VertexSet brute_force_mis(const Graph& g);

// Checks that s is an independent set of g (no internal edge).
bool is_independent_set(const Graph& g, const VertexSet& s);

} // namespace mis
