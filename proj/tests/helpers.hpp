#pragma once

#include "mis/bipartite.hpp"
#include "mis/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

// Test-only oracles. These enumerate exhaustively and stay independent of
// the library's matching/reduction code paths.

namespace oracle {

// N(U) = ⋃ N(u), which may intersect U.
inline mis::VertexSet open_neighborhood(const mis::Graph& g, const mis::VertexSet& s) {
    std::set<int> nbrs;
    for (int v : s)
        nbrs.insert(g.neighbors(v).begin(), g.neighbors(v).end());
    return mis::VertexSet(nbrs.begin(), nbrs.end());
}

inline mis::VertexSet closed_neighborhood(const mis::Graph& g, const mis::VertexSet& s) {
    std::set<int> nbrs(s.begin(), s.end());
    for (int v : s)
        nbrs.insert(g.neighbors(v).begin(), g.neighbors(v).end());
    return mis::VertexSet(nbrs.begin(), nbrs.end());
}

// max over all 2^n subsets U of |U| - |N(U)|.
inline int critical_difference(const mis::Graph& g) {
    mis::VertexSet live = g.live_vertices();
    int n = static_cast<int>(live.size());
    int best = 0; // the empty set achieves 0
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        mis::VertexSet u;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                u.push_back(live[i]);
        int diff = static_cast<int>(u.size()) -
                   static_cast<int>(open_neighborhood(g, u).size());
        best = std::max(best, diff);
    }
    return best;
}

// All independent sets I with |I| - |N(I)| equal to the critical difference.
inline std::vector<mis::VertexSet> critical_independent_sets(const mis::Graph& g) {
    mis::VertexSet live = g.live_vertices();
    int n = static_cast<int>(live.size());
    int target = critical_difference(g);
    std::vector<mis::VertexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        mis::VertexSet s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                s.push_back(live[i]);
        bool independent = true;
        for (size_t i = 0; i < s.size() && independent; ++i)
            for (size_t j = i + 1; j < s.size() && independent; ++j)
                independent = !g.has_edge(s[i], s[j]);
        if (!independent)
            continue;
        int diff = static_cast<int>(s.size()) -
                   static_cast<int>(open_neighborhood(g, s).size());
        if (diff == target)
            out.push_back(std::move(s));
    }
    return out;
}

// Maximum matching size by exhaustive branching on left vertices.
inline int max_matching_size(const mis::BipartiteGraph& b) {
    std::vector<char> taken(b.n_right, 0);
    auto rec = [&](auto&& self, int l) -> int {
        if (l == b.n_left)
            return 0;
        int best = self(self, l + 1); // leave l unmatched
        for (int r : b.adj[l]) {
            if (taken[r])
                continue;
            taken[r] = 1;
            best = std::max(best, 1 + self(self, l + 1));
            taken[r] = 0;
        }
        return best;
    };
    return rec(rec, 0);
}

} // namespace oracle

namespace testutil {

// Split-mix style generator for test case streams.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed ^ 0x9e3779b97f4a7c15ull); }

inline int below(std::mt19937_64& r, int bound) {
    return static_cast<int>(r() % static_cast<std::uint64_t>(bound));
}

inline double unit(std::mt19937_64& r) { return static_cast<double>(r() >> 11) * 0x1.0p-53; }

inline mis::Graph petersen() {
    mis::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);               // spokes
    }
    return g;
}

} // namespace testutil
