#pragma once

#include "mis/graph.hpp"
#include "mis/trace.hpp"

#include <optional>

namespace mis {

// True iff every pair of neighbors of v is adjacent. Vacuously true for
// degree 0 and 1. Such a vertex is in some maximum independent set at any
// degree, not just the low degrees most kernelizers restrict to.
bool is_simplicial(const Graph& g, int v);

// Includes v, removes N[v], records the event. Requires is_simplicial(g, v).
void apply_simplicial(Graph& g, int v, ReductionTrace& trace);

// Folds a degree-2 vertex v with non-adjacent neighbors u, w into a fresh
// vertex adjacent to (N(u) ∪ N(w)) \ {u,v,w}. Returns the fresh id.
// Shrinks the independence number by exactly one.
int apply_fold(Graph& g, int v, ReductionTrace& trace);

// Runs simplicial removal and folding to fixpoint. Worklist-driven: a
// vertex is re-examined whenever its neighborhood changes. The simplicial
// test runs before the fold test at each vertex.
//
// degree_cap, when set, skips the simplicial test on vertices of larger
// degree (the O(d^2) check can be capped on dense inputs; the default
// checks every degree).
void reduce_simple(Graph& g, ReductionTrace& trace, ReductionStats* stats = nullptr,
                   std::optional<int> degree_cap = std::nullopt);

} // namespace mis
