#pragma once

#include "mis/graph.hpp"
#include "mis/solver.hpp"
#include "mis/trace.hpp"

#include <string>

namespace mis {

enum class Strategy { simple, critical, maxcritical, advanced };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

struct KernelResult {
    Graph kernel;                      // compacted
    std::vector<int> kernel_to_working; // kernel id -> id in the reduced working graph
    ReductionTrace trace;
    int offset = 0; // guaranteed contribution of the trace to α(original)
    ReductionStats stats;
    int components = 0;
    int k_max = 0; // largest kernel component
    double kernelize_seconds = 0.0;
};

// Applies the chosen reduction family to fixpoint and compacts the result.
// α(original) = offset + α(kernel).
KernelResult kernelize(const Graph& g, Strategy strategy);

// Replays the trace backwards, lifting an independent set of the kernel
// (given in working-graph ids) to one of the original graph. The lifted set
// has size |kernel_mis| + trace.offset; a size or independence mismatch
// means the trace and set are inconsistent and throws.
VertexSet reconstruct(const ReductionTrace& trace, const VertexSet& kernel_mis,
                      const Graph& original);

struct VerifyOutcome {
    enum class Kind { valid, violation, claims_mismatch } kind = Kind::valid;
    int u = -1; // violating edge when kind == violation
    int v = -1;

    bool valid() const { return kind == Kind::valid; }
};

// Checks s against g: every id must name a live vertex exactly once
// (claims_mismatch otherwise) and no edge may have both ends in s.
VerifyOutcome verify_solution(const Graph& g, const VertexSet& s);

struct SolveReport {
    enum class Status { exact, timeout, kernel_only };

    int alpha = 0; // |mis|; a lower bound unless status == exact
    VertexSet mis; // independent in the original graph
    Status status = Status::exact;
    double kernelize_seconds = 0.0;
    double solve_seconds = 0.0;
    KernelResult kernel;
    std::vector<ComponentReport> component_stats;
};

// kernelize → solve the kernel per component → reconstruct → verify.
// The deadline applies to the solving phase only; kernelization is
// polynomial and always runs to completion. With solve_kernel = false the
// kernel is left unsolved (status kernel_only) and the reported set is what
// the reductions alone force.
SolveReport solve_exact(const Graph& g, Strategy strategy, const SolverOptions& options = {},
                        bool solve_kernel = true);

} // namespace mis
