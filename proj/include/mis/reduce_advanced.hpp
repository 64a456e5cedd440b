#pragma once

#include "mis/graph.hpp"
#include "mis/trace.hpp"

#include <optional>

namespace mis {

// Half-integral relaxation: maximize Σ x_v subject to x_u + x_v <= 1 per
// edge, x_v >= 0. Solved through a König cover of the bi-double graph, so
// every value is 0, 1/2 or 1.
struct LPSolution {
    enum class Value : unsigned char { zero, half, one };
    std::vector<Value> values; // indexed by vertex id; meaningful for live ids

    double total = 0.0;
};

LPSolution lp_solve(const Graph& g, ReductionStats* stats = nullptr);

// Removes the value-1 vertices into the solution together with their
// (value-0) neighbors. Returns true if anything was removed.
bool lp_reduce(Graph& g, ReductionTrace& trace, ReductionStats* stats = nullptr);

// The iterative confinement test: grow S from {v}; a neighbor u with
// exactly one contact in S and no room outside N[S] proves v avoidable.
bool is_unconfined(const Graph& g, int v);

// Removes unconfined vertices (ascending-id scan, restarting after every
// removal) until none remain. Leaves the independence number unchanged.
void reduce_unconfined(Graph& g, ReductionTrace& trace, ReductionStats* stats = nullptr);

// Degree-3 twins u, v with N(u) = N(v): include both when N(u) has an
// internal edge, otherwise replace the constellation by a gadget vertex
// wired to u's two-neighborhood. One pair per call; returns true if fired.
bool twin_reduce_step(Graph& g, ReductionTrace& trace, ReductionStats* stats = nullptr);
void twin_reduce(Graph& g, ReductionTrace& trace, ReductionStats* stats = nullptr);

// Funnel (u, v adjacent, N(v) \ {u} a clique): {u} and {v} are alternatives;
// remove both plus their common neighbors and join the leftover private
// neighborhoods completely. One funnel per call; returns true if fired.
bool funnel_reduce_step(Graph& g, ReductionTrace& trace, ReductionStats* stats = nullptr);
void funnel_reduce(Graph& g, ReductionTrace& trace, ReductionStats* stats = nullptr);

// Full fixpoint over simplicial, fold, unconfined, twin, funnel and LP, in
// that order, restarting from the cheap rules after every change. LP runs
// only once the local rules are exhausted.
void reduce_advanced(Graph& g, ReductionTrace& trace, ReductionStats* stats = nullptr);

} // namespace mis
