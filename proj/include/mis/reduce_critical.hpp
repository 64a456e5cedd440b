#pragma once

#include "mis/bipartite.hpp"
#include "mis/graph.hpp"
#include "mis/trace.hpp"

namespace mis {

struct CriticalSetResult {
    VertexSet critical_set;             // U, maximizing |U| - |N(U)|
    VertexSet critical_independent_set; // I_c = U \ N(U)
    int critical_difference = 0;        // |U| - |N(U)|, >= 0 (empty set achieves 0)
};

// Finds a critical set from a maximum independent set J of the bi-double
// graph: U = { v : v in J and v' in J }. When B(G) has a perfect matching
// the result is empty.
CriticalSetResult find_critical_set(const Graph& g, ReductionStats* stats = nullptr);

// The Butenko–Trukhanov loop: repeatedly find some critical independent set
// I_c and remove N[I_c], stopping once I_c comes back empty. Every pass is
// counted in stats->iterations, the terminal empty one included.
void reduce_critical(Graph& g, ReductionTrace& trace, ReductionStats* stats = nullptr);

// Larson's membership test: v lies in some critical independent set iff
// α(B(G)) = α(B(G) - N[{v,v'}]) + 2. The α on the right is computed by
// warm-restarting the base matching (see rematch_after_removal) rather than
// matching from scratch. base must be a maximum matching of build_bidouble(g).
bool is_in_some_critical_independent_set(const Graph& g, int v, const Matching& base,
                                         ReductionStats* stats = nullptr);

// Larson's algorithm: sweep the vertices in ascending order, keep those that
// pass the membership test, and drop the closed neighborhood of everything
// kept. Returns a maximum-cardinality critical independent set.
VertexSet max_critical_independent_set(const Graph& g, ReductionStats* stats = nullptr);

// Like reduce_critical but removes a maximum critical independent set per
// pass; never yields a larger kernel than reduce_critical.
void reduce_max_critical(Graph& g, ReductionTrace& trace, ReductionStats* stats = nullptr);

} // namespace mis
