#pragma once

#include "mis/graph.hpp"

#include <chrono>
#include <optional>
#include <utility>
#include <vector>

namespace mis {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

struct SolverOptions {
    Deadline deadline;
    int deadline_check_interval = 1024; // nodes between clock reads
    int jobs = 1;                       // component fan-out cap
};

// Greedy sequential coloring of the conflict relation on the candidates
// (two candidates conflict iff they are NON-adjacent in g, i.e. adjacent in
// the complement). Color classes are cliques of g, so the class count is an
// upper bound on any independent set inside the candidates. Returns one
// 1-based color per candidate, in candidate order, plus the class count.
std::pair<std::vector<int>, int> coloring_bound(const Graph& g, const VertexSet& candidates);

struct ComponentReport {
    int size = 0;
    long nodes_expanded = 0;
    int best_size = 0;
    bool exact = true;
};

struct SolveResult {
    VertexSet mis;
    bool exact = true; // false means the deadline cut the search short
    std::vector<ComponentReport> components;
    long nodes_expanded = 0;
};

// Exact maximum independent set of g by branch-and-bound with the coloring
// bound, working complement-on-the-fly on the sparse graph. On timeout the
// incumbent (still a valid independent set) is returned with exact=false.
SolveResult solve_component(const Graph& g, const SolverOptions& options = {});

// Decomposes into connected components and solves each; components may be
// dispatched to options.jobs workers, results are combined in ascending
// smallest-id order either way.
SolveResult solve(const Graph& g, const SolverOptions& options = {});

} // namespace mis
