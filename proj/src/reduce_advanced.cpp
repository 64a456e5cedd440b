#include "mis/reduce_advanced.hpp"

#include "mis/bipartite.hpp"
#include "mis/reduce_simple.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mis {

LPSolution lp_solve(const Graph& g, ReductionStats* stats) {
    BipartiteGraph b = build_bidouble(g);
    Matching m = max_matching(b, nullptr, stats);
    BipartiteVertexSet j = extract_mis_bipartite(b, m);

    // j.left is Z ∩ L and j.right is R \ Z; the König cover is the rest.
    std::vector<char> in_left(b.n_left, 0), in_right(b.n_right, 0);
    for (int l : j.left)
        in_left[l] = 1;
    for (int r : j.right)
        in_right[r] = 1;

    LPSolution sol;
    sol.values.assign(g.capacity(), LPSolution::Value::half);
    for (int i = 0; i < b.n_left; ++i) {
        int covered = (in_left[i] ? 0 : 1) + (in_right[i] ? 0 : 1);
        auto value = covered == 0   ? LPSolution::Value::one
                     : covered == 2 ? LPSolution::Value::zero
                                    : LPSolution::Value::half;
        sol.values[b.origin[i]] = value;
        sol.total += (2 - covered) * 0.5;
    }
    return sol;
}

bool lp_reduce(Graph& g, ReductionTrace& trace, ReductionStats* stats) {
    LPSolution sol = lp_solve(g, stats);

    VertexSet included;
    for (int v : g.live_vertices())
        if (sol.values[v] == LPSolution::Value::one)
            included.push_back(v);
    if (included.empty())
        return false;

    std::set<int> nbrs;
    for (int v : included)
        nbrs.insert(g.neighbors(v).begin(), g.neighbors(v).end());
    VertexSet removed_neighbors(nbrs.begin(), nbrs.end());

    for (int v : included)
        g.remove_vertex(v);
    for (int v : removed_neighbors)
        g.remove_vertex(v);
    if (stats)
        ++stats->lp;
    trace.record(LPInclude{std::move(included), std::move(removed_neighbors)});
    return true;
}

bool is_unconfined(const Graph& g, int v) {
    g.check_alive(v);
    std::set<int> s{v};
    std::set<int> ns(g.neighbors(v).begin(), g.neighbors(v).end());

    for (;;) {
        int best_u = -1;
        VertexSet best_ext;
        for (int u : ns) {
            int contacts = 0;
            for (int w : g.neighbors(u))
                if (s.count(w) && ++contacts > 1)
                    break;
            if (contacts != 1)
                continue;
            VertexSet ext;
            for (int w : g.neighbors(u))
                if (!s.count(w) && !ns.count(w))
                    ext.push_back(w);
            if (best_u == -1 || ext.size() < best_ext.size()) {
                best_u = u;
                best_ext = std::move(ext);
            }
        }
        if (best_u == -1)
            return false;
        if (best_ext.empty())
            return true;
        if (best_ext.size() > 1)
            return false;
        int w = best_ext.front();
        s.insert(w);
        ns.erase(w);
        for (int x : g.neighbors(w))
            if (!s.count(x))
                ns.insert(x);
    }
}

void reduce_unconfined(Graph& g, ReductionTrace& trace, ReductionStats* stats) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : g.live_vertices()) {
            if (is_unconfined(g, v)) {
                g.remove_vertex(v);
                trace.record(UnconfinedExclude{v});
                if (stats)
                    ++stats->unconfined;
                changed = true;
                break;
            }
        }
    }
}

bool twin_reduce_step(Graph& g, ReductionTrace& trace, ReductionStats* stats) {
    std::map<VertexSet, int> seen;
    for (int v : g.live_vertices()) {
        if (g.degree(v) != 3)
            continue;
        VertexSet key(g.neighbors(v).begin(), g.neighbors(v).end());
        auto [it, inserted] = seen.emplace(std::move(key), v);
        if (inserted)
            continue;

        int u = it->second;
        const VertexSet& nbrs = it->first;
        bool clique_edge = false;
        for (size_t i = 0; i < nbrs.size() && !clique_edge; ++i)
            for (size_t j = i + 1; j < nbrs.size() && !clique_edge; ++j)
                clique_edge = g.has_edge(nbrs[i], nbrs[j]);

        if (clique_edge) {
            VertexSet neighborhood = nbrs;
            g.remove_vertex(u);
            g.remove_vertex(v);
            g.remove_vertices(neighborhood);
            if (stats)
                ++stats->twin;
            trace.record(TwinInclude{u, v, std::move(neighborhood)});
        } else {
            std::set<int> two;
            for (int x : nbrs)
                two.insert(g.neighbors(x).begin(), g.neighbors(x).end());
            two.erase(u);
            two.erase(v);
            for (int x : nbrs)
                two.erase(x);

            VertexSet neighborhood = nbrs;
            g.remove_vertex(u);
            g.remove_vertex(v);
            g.remove_vertices(neighborhood);
            int gadget = g.add_vertex();
            VertexSet gadget_neighbors(two.begin(), two.end());
            for (int x : gadget_neighbors)
                g.add_edge(gadget, x);
            if (stats)
                ++stats->twin_gadget;
            trace.record(TwinGadget{u, v, std::move(neighborhood), gadget, std::move(gadget_neighbors)});
        }
        return true;
    }
    return false;
}

void twin_reduce(Graph& g, ReductionTrace& trace, ReductionStats* stats) {
    while (twin_reduce_step(g, trace, stats)) {
    }
}

bool funnel_reduce_step(Graph& g, ReductionTrace& trace, ReductionStats* stats) {
    for (int v : g.live_vertices()) {
        if (g.degree(v) < 2)
            continue;
        for (int u : g.neighbors(v)) {
            // is N(v) \ {u} a clique?
            bool clique = true;
            const auto& nv = g.neighbors(v);
            for (auto it = nv.begin(); it != nv.end() && clique; ++it) {
                if (*it == u)
                    continue;
                for (auto jt = std::next(it); jt != nv.end() && clique; ++jt) {
                    if (*jt == u)
                        continue;
                    clique = g.has_edge(*it, *jt);
                }
            }
            if (!clique)
                continue;

            VertexSet c_set;
            std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(),
                                  nv.begin(), nv.end(), std::back_inserter(c_set));
            VertexSet a_nbrs, b_nbrs;
            for (int x : g.neighbors(u))
                if (x != v && !std::binary_search(c_set.begin(), c_set.end(), x))
                    a_nbrs.push_back(x);
            for (int x : nv)
                if (x != u && !std::binary_search(c_set.begin(), c_set.end(), x))
                    b_nbrs.push_back(x);

            g.remove_vertex(u);
            g.remove_vertex(v);
            g.remove_vertices(c_set);

            std::vector<std::pair<int, int>> added;
            for (int a : a_nbrs)
                for (int b : b_nbrs)
                    if (!g.has_edge(a, b)) {
                        g.add_edge(a, b);
                        added.emplace_back(a, b);
                    }
            if (stats)
                ++stats->funnel;
            trace.record(FunnelResolve{{u}, {v}, std::move(c_set), std::move(added),
                                       std::move(a_nbrs), std::move(b_nbrs)});
            return true;
        }
    }
    return false;
}

void funnel_reduce(Graph& g, ReductionTrace& trace, ReductionStats* stats) {
    while (funnel_reduce_step(g, trace, stats)) {
    }
}

void reduce_advanced(Graph& g, ReductionTrace& trace, ReductionStats* stats) {
    for (;;) {
        size_t before = trace.events.size();
        reduce_simple(g, trace, stats);
        if (trace.events.size() != before)
            continue;
        reduce_unconfined(g, trace, stats);
        if (trace.events.size() != before)
            continue;
        if (twin_reduce_step(g, trace, stats))
            continue;
        if (funnel_reduce_step(g, trace, stats))
            continue;
        if (lp_reduce(g, trace, stats))
            continue;
        break;
    }
}

} // namespace mis
