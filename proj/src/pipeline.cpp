#include "mis/pipeline.hpp"

#include "mis/reduce_advanced.hpp"
#include "mis/reduce_critical.hpp"
#include "mis/reduce_simple.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace mis {

const char* strategy_name(Strategy s) {
    switch (s) {
    case Strategy::simple: return "simple";
    case Strategy::critical: return "critical";
    case Strategy::maxcritical: return "maxcritical";
    case Strategy::advanced: return "advanced";
    }
    return "?";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "simple")
        return Strategy::simple;
    if (name == "critical")
        return Strategy::critical;
    if (name == "maxcritical")
        return Strategy::maxcritical;
    if (name == "advanced")
        return Strategy::advanced;
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

KernelResult kernelize(const Graph& g, Strategy strategy) {
    KernelResult result;
    Graph working = g;

    auto t0 = std::chrono::steady_clock::now();
    switch (strategy) {
    case Strategy::simple:
        reduce_simple(working, result.trace, &result.stats);
        break;
    case Strategy::critical:
        reduce_critical(working, result.trace, &result.stats);
        break;
    case Strategy::maxcritical:
        reduce_max_critical(working, result.trace, &result.stats);
        break;
    case Strategy::advanced:
        reduce_advanced(working, result.trace, &result.stats);
        break;
    }
    auto t1 = std::chrono::steady_clock::now();
    result.kernelize_seconds = std::chrono::duration<double>(t1 - t0).count();

    result.offset = result.trace.offset;
    auto [kernel, mapping] = induced_subgraph(working, working.live_vertices());
    result.kernel = std::move(kernel);
    result.kernel_to_working = std::move(mapping);

    auto comps = connected_components(result.kernel);
    result.components = static_cast<int>(comps.size());
    for (const auto& comp : comps)
        result.k_max = std::max(result.k_max, static_cast<int>(comp.size()));
    return result;
}

namespace {

struct UndoVisitor {
    std::set<int>& mis;

    bool contains(int v) const { return mis.count(v) > 0; }
    void add(int v) { mis.insert(v); }
    void add_all(const VertexSet& vs) { mis.insert(vs.begin(), vs.end()); }

    void operator()(const SimplicialInclude& e) { add(e.v); }

    void operator()(const Fold& e) {
        if (contains(e.new_vertex)) {
            mis.erase(e.new_vertex);
            add(e.u);
            add(e.w);
        } else {
            add(e.v);
        }
    }

    void operator()(const CriticalInclude& e) { add_all(e.independent_set); }
    void operator()(const LPInclude& e) { add_all(e.included); }
    void operator()(const UnconfinedExclude&) {}
    void operator()(const TwinInclude& e) {
        add(e.u);
        add(e.v);
    }

    void operator()(const TwinGadget& e) {
        if (contains(e.gadget)) {
            mis.erase(e.gadget);
            add_all(e.neighborhood);
        } else {
            add(e.u);
            add(e.v);
        }
    }

    void operator()(const FunnelResolve& e) {
        bool a_side_used = std::any_of(e.a_neighbors.begin(), e.a_neighbors.end(),
                                       [&](int x) { return contains(x); });
        if (a_side_used)
            add_all(e.b_set);
        else
            add_all(e.a_set);
    }
};

} // namespace

VertexSet reconstruct(const ReductionTrace& trace, const VertexSet& kernel_mis,
                      const Graph& original) {
    std::set<int> mis(kernel_mis.begin(), kernel_mis.end());
    UndoVisitor undo{mis};
    for (auto it = trace.events.rbegin(); it != trace.events.rend(); ++it)
        std::visit(undo, *it);

    VertexSet result(mis.begin(), mis.end());
    if (result.size() != kernel_mis.size() + static_cast<size_t>(trace.offset))
        throw std::logic_error("trace replay lost or duplicated vertices");
    for (size_t i = 0; i < result.size(); ++i) {
        if (!original.alive(result[i]))
            throw std::logic_error("reconstructed set names a vertex outside the original graph");
        for (size_t j = i + 1; j < result.size(); ++j)
            if (original.has_edge(result[i], result[j]))
                throw std::logic_error("reconstructed set is not independent; kernel set and trace disagree");
    }
    return result;
}

VerifyOutcome verify_solution(const Graph& g, const VertexSet& s) {
    VerifyOutcome out;
    std::set<int> seen;
    for (int v : s) {
        if (!g.alive(v) || !seen.insert(v).second) {
            out.kind = VerifyOutcome::Kind::claims_mismatch;
            return out;
        }
    }
    for (int v : s)
        for (int w : g.neighbors(v))
            if (w > v && seen.count(w)) {
                out.kind = VerifyOutcome::Kind::violation;
                out.u = v;
                out.v = w;
                return out;
            }
    return out;
}

SolveReport solve_exact(const Graph& g, Strategy strategy, const SolverOptions& options,
                        bool solve_kernel) {
    SolveReport report;
    report.kernel = kernelize(g, strategy);
    report.kernelize_seconds = report.kernel.kernelize_seconds;

    VertexSet kernel_mis_working;
    if (solve_kernel) {
        auto t0 = std::chrono::steady_clock::now();
        SolveResult solved = solve(report.kernel.kernel, options);
        auto t1 = std::chrono::steady_clock::now();
        report.solve_seconds = std::chrono::duration<double>(t1 - t0).count();
        report.component_stats = std::move(solved.components);
        report.status = solved.exact ? SolveReport::Status::exact : SolveReport::Status::timeout;
        for (int v : solved.mis)
            kernel_mis_working.push_back(report.kernel.kernel_to_working[v]);
    } else {
        report.status = SolveReport::Status::kernel_only;
    }

    report.mis = reconstruct(report.kernel.trace, kernel_mis_working, g);
    report.alpha = static_cast<int>(report.mis.size());

    VerifyOutcome check = verify_solution(g, report.mis);
    if (!check.valid())
        throw std::logic_error("reconstructed solution failed verification");
    return report;
}

} // namespace mis
