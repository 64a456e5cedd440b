#include "mis/reduce_simple.hpp"

#include <algorithm>
#include <set>

namespace mis {

bool is_simplicial(const Graph& g, int v) {
    const auto& nbrs = g.neighbors(v);
    for (auto it = nbrs.begin(); it != nbrs.end(); ++it)
        for (auto jt = std::next(it); jt != nbrs.end(); ++jt)
            if (!g.has_edge(*it, *jt))
                return false;
    return true;
}

void apply_simplicial(Graph& g, int v, ReductionTrace& trace) {
    if (!is_simplicial(g, v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not simplicial");
    VertexSet closed = g.closed_neighborhood(v);
    g.remove_vertices(closed);
    trace.record(SimplicialInclude{v, std::move(closed)});
}

int apply_fold(Graph& g, int v, ReductionTrace& trace) {
    if (g.degree(v) != 2)
        throw std::invalid_argument("fold requires a degree-2 vertex");
    auto it = g.neighbors(v).begin();
    int u = *it;
    int w = *std::next(it);
    if (g.has_edge(u, w))
        throw std::invalid_argument("fold requires non-adjacent neighbors (simplicial case)");

    std::set<int> merged(g.neighbors(u).begin(), g.neighbors(u).end());
    merged.insert(g.neighbors(w).begin(), g.neighbors(w).end());
    merged.erase(u);
    merged.erase(v);
    merged.erase(w);

    g.remove_vertex(v);
    g.remove_vertex(u);
    g.remove_vertex(w);
    int fresh = g.add_vertex();
    VertexSet fresh_neighbors(merged.begin(), merged.end());
    for (int x : fresh_neighbors)
        g.add_edge(fresh, x);

    trace.record(Fold{v, u, w, fresh, fresh_neighbors});
    return fresh;
}

namespace {

struct Worklist {
    std::set<int> pending;

    void push(int v) { pending.insert(v); }
    bool empty() const { return pending.empty(); }
    int pop() {
        int v = *pending.begin();
        pending.erase(pending.begin());
        return v;
    }
};

} // namespace

void reduce_simple(Graph& g, ReductionTrace& trace, ReductionStats* stats,
                   std::optional<int> degree_cap) {
    Worklist work;
    for (int v : g.live_vertices())
        work.push(v);

    auto requeue_around = [&](const VertexSet& removed) {
        for (int r : removed) {
            if (!g.alive(r))
                continue;
            work.push(r);
            for (int w : g.neighbors(r))
                work.push(w);
        }
    };

    while (!work.empty()) {
        int v = work.pop();
        if (!g.alive(v))
            continue;

        bool capped = degree_cap && g.degree(v) > *degree_cap;
        if (!capped && is_simplicial(g, v)) {
            VertexSet closed = g.closed_neighborhood(v);
            VertexSet affected;
            for (int r : closed)
                for (int w : g.neighbors(r))
                    affected.push_back(w);
            apply_simplicial(g, v, trace);
            if (stats)
                ++stats->simplicial;
            requeue_around(affected);
            continue;
        }

        if (g.degree(v) == 2) {
            auto it = g.neighbors(v).begin();
            int u = *it;
            int w = *std::next(it);
            if (!g.has_edge(u, w)) {
                int fresh = apply_fold(g, v, trace);
                if (stats)
                    ++stats->fold;
                work.push(fresh);
                for (int x : g.neighbors(fresh))
                    work.push(x);
            }
        }
    }
}

} // namespace mis
