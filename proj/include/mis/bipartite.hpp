#pragma once

#include "mis/graph.hpp"
#include "mis/trace.hpp"

#include <vector>

namespace mis {

// Bipartite graph with explicit sides. For a bi-double built from G both
// sides are the live vertices of G (compacted), and origin maps a side id
// back to the source-graph vertex.
struct BipartiteGraph {
    int n_left = 0;
    int n_right = 0;
    std::vector<std::vector<int>> adj;  // left id -> sorted right ids
    std::vector<std::vector<int>> radj; // right id -> sorted left ids
    std::vector<int> origin;            // compact id -> source vertex (bi-doubles)

    BipartiteGraph() = default;
    BipartiteGraph(int n_left, int n_right)
        : n_left(n_left), n_right(n_right), adj(n_left), radj(n_right) {}

    void add_edge(int l, int r);
    long num_edges() const;
    bool has_edge(int l, int r) const;
};

struct Matching {
    std::vector<int> match_left;  // -1 when unmatched
    std::vector<int> match_right;
    int size = 0;

    Matching() = default;
    Matching(int n_left, int n_right)
        : match_left(n_left, -1), match_right(n_right, -1) {}
};

// Throws if m is not a valid matching of b (mutual inverses over edges of b).
void validate_matching(const BipartiteGraph& b, const Matching& m);

// B(G): two copies of V(G), edge (u, v') iff {u,v} is an edge of G. The
// bipartite edge count is exactly 2 m(G).
BipartiteGraph build_bidouble(const Graph& g);

// Maximum matching by depth-first augmenting paths, one search per
// initially unmatched left vertex in ascending order (deliberately not
// Hopcroft–Karp). A warm start skips everything it already matched; the
// number of successful augmentations is then exactly maximum − warm size.
Matching max_matching(const BipartiteGraph& b, const Matching* warm_start = nullptr,
                      ReductionStats* stats = nullptr);

// (n_left + n_right) − |m| for a maximum m (König/Gallai).
int independence_number_bipartite(const BipartiteGraph& b, const Matching& m);

struct BipartiteVertexSet {
    VertexSet left;
    VertexSet right;
};

// Maximum independent set of b from a maximum matching: with Z the set of
// vertices alternating-reachable from unmatched left vertices, the result
// is (left ∩ Z) ∪ (right \ Z).
BipartiteVertexSet extract_mis_bipartite(const BipartiteGraph& b, const Matching& m);

// Warm-restarted matching on b minus a vertex set (the Appendix-style
// incremental step). Strips base edges incident to removed vertices — at
// most one per removed vertex — then augments with multi-source searches,
// one augmenting path per search, until either the size reaches base.size
// (provably maximum, since a subgraph cannot beat it) or a search fails.
// With s successful phases out of k stripped edges this runs at most
// s + (s < k ? 1 : 0) <= k searches.
struct RestrictedMatchResult {
    Matching matching;      // maximum matching of b minus the removed set
    int live_vertices = 0;  // surviving vertex count, both sides
    int stripped = 0;       // matched base edges lost to the removal
    int searches = 0;       // augmenting searches performed
};

RestrictedMatchResult rematch_after_removal(const BipartiteGraph& b, const Matching& base,
                                            const std::vector<char>& removed_left,
                                            const std::vector<char>& removed_right);

} // namespace mis
