#include "mis/reduce_critical.hpp"

#include <algorithm>
#include <set>

namespace mis {

namespace {

// N(U) = ⋃ N(u); members of U that neighbor other members stay in.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    std::set<int> nbrs;
    for (int v : s)
        nbrs.insert(g.neighbors(v).begin(), g.neighbors(v).end());
    return VertexSet(nbrs.begin(), nbrs.end());
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    std::set<int> nbrs(s.begin(), s.end());
    for (int v : s)
        nbrs.insert(g.neighbors(v).begin(), g.neighbors(v).end());
    return VertexSet(nbrs.begin(), nbrs.end());
}

} // namespace

CriticalSetResult find_critical_set(const Graph& g, ReductionStats* stats) {
    BipartiteGraph b = build_bidouble(g);
    Matching m = max_matching(b, nullptr, stats);
    BipartiteVertexSet j = extract_mis_bipartite(b, m);

    std::vector<char> in_right(b.n_right, 0);
    for (int r : j.right)
        in_right[r] = 1;

    CriticalSetResult result;
    for (int l : j.left)
        if (in_right[l])
            result.critical_set.push_back(b.origin[l]);

    VertexSet open = open_neighborhood(g, result.critical_set);
    result.critical_difference =
        static_cast<int>(result.critical_set.size()) - static_cast<int>(open.size());
    std::set_difference(result.critical_set.begin(), result.critical_set.end(),
                        open.begin(), open.end(),
                        std::back_inserter(result.critical_independent_set));
    return result;
}

void reduce_critical(Graph& g, ReductionTrace& trace, ReductionStats* stats) {
    for (;;) {
        if (stats)
            ++stats->iterations;
        CriticalSetResult res = find_critical_set(g, stats);
        if (res.critical_independent_set.empty())
            return;
        VertexSet removed = closed_neighborhood(g, res.critical_independent_set);
        g.remove_vertices(removed);
        if (stats)
            ++stats->critical;
        trace.record(CriticalInclude{std::move(res.critical_independent_set), std::move(removed)});
    }
}

namespace {

// Shared by the public membership test and Larson's sweep: evaluates
// α(B - N[{v,v'}]) against a fixed base matching, with v given as a compact
// bi-double index.
bool larson_test(const BipartiteGraph& b, const Matching& base, int compact_v,
                 std::vector<char>& removed_scratch, ReductionStats* stats) {
    std::fill(removed_scratch.begin(), removed_scratch.end(), 0);
    removed_scratch[compact_v] = 1;
    for (int w : b.adj[compact_v])
        removed_scratch[w] = 1;

    RestrictedMatchResult res = rematch_after_removal(b, base, removed_scratch, removed_scratch);
    if (stats) {
        stats->augmenting_searches += res.searches;
        ++stats->matchings_computed;
    }
    int alpha_b = b.n_left + b.n_right - base.size;
    int alpha_bv = res.live_vertices - res.matching.size;
    return alpha_b == alpha_bv + 2;
}

} // namespace

bool is_in_some_critical_independent_set(const Graph& g, int v, const Matching& base,
                                         ReductionStats* stats) {
    g.check_alive(v);
    BipartiteGraph b = build_bidouble(g);
    validate_matching(b, base);

    int compact_v = static_cast<int>(
        std::lower_bound(b.origin.begin(), b.origin.end(), v) - b.origin.begin());
    std::vector<char> removed(b.n_left, 0);
    return larson_test(b, base, compact_v, removed, stats);
}

VertexSet max_critical_independent_set(const Graph& g, ReductionStats* stats) {
    BipartiteGraph b = build_bidouble(g);
    Matching matching = max_matching(b, nullptr, stats);

    // The sweep works on an evolving restriction of B: accepting v commits
    // the removal of N[{v,v'}] (equivalently, B becomes the bi-double of
    // G - N[v]) and carries the re-augmented matching forward. Testing
    // against the original B instead would accept vertices that live in
    // different critical independent sets and return a non-critical union.
    std::vector<char> removed(b.n_left, 0);
    std::vector<char> tentative(b.n_left, 0);
    int live = 2 * b.n_left;
    int alpha_current = live - matching.size;

    VertexSet result;
    std::vector<char> in_pool(b.n_left, 1);
    for (int v = 0; v < b.n_left; ++v) {
        if (!in_pool[v])
            continue;
        tentative = removed;
        tentative[v] = 1;
        for (int w : b.adj[v])
            tentative[w] = 1;

        RestrictedMatchResult res = rematch_after_removal(b, matching, tentative, tentative);
        if (stats) {
            stats->augmenting_searches += res.searches;
            ++stats->matchings_computed;
        }
        int alpha_v = res.live_vertices - res.matching.size;
        if (alpha_current == alpha_v + 2) {
            result.push_back(b.origin[v]);
            in_pool[v] = 0;
            for (int w : b.adj[v])
                in_pool[w] = 0;
            removed.swap(tentative);
            matching = std::move(res.matching);
            alpha_current = alpha_v;
        } else {
            in_pool[v] = 0;
        }
    }
    return result;
}

void reduce_max_critical(Graph& g, ReductionTrace& trace, ReductionStats* stats) {
    for (;;) {
        if (stats)
            ++stats->iterations;
        VertexSet ic = max_critical_independent_set(g, stats);
        if (ic.empty())
            return;
        VertexSet removed = closed_neighborhood(g, ic);
        g.remove_vertices(removed);
        if (stats)
            ++stats->critical;
        trace.record(CriticalInclude{std::move(ic), std::move(removed)});
    }
}

} // namespace mis
