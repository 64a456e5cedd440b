#include "mis/brute_force.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace mis {
namespace {

struct Search {
    std::vector<std::uint32_t> conflict; // closed neighborhood masks
    std::uint32_t best = 0;
    int best_size = -1;

    // Branches on the lowest candidate bit, include before exclude. That
    // visits sets in lexicographic order, so with strict improvement the
    // first maximum found is the lexicographically smallest one.
    void dfs(std::uint32_t cand, std::uint32_t current, int size) {
        if (size + std::popcount(cand) <= best_size)
            return;
        if (cand == 0) {
            if (size > best_size) {
                best = current;
                best_size = size;
            }
            return;
        }
        int v = std::countr_zero(cand);
        dfs(cand & ~conflict[v], current | (1u << v), size + 1);
        dfs(cand & (cand - 1), current, size);
    }
};

} // namespace

VertexSet brute_force_mis(const Graph& g) {
    VertexSet live = g.live_vertices();
    int k = static_cast<int>(live.size());
    if (k > 24)
        throw std::invalid_argument("brute-force oracle limited to 24 vertices, got " + std::to_string(k));
    if (k == 0)
        return {};

    std::vector<int> compact(g.capacity(), -1);
    for (int i = 0; i < k; ++i)
        compact[live[i]] = i;

    Search search;
    search.conflict.assign(k, 0);
    for (int i = 0; i < k; ++i) {
        search.conflict[i] = 1u << i;
        for (int w : g.neighbors(live[i]))
            search.conflict[i] |= 1u << compact[w];
    }

    search.dfs(k == 32 ? ~0u : ((1u << k) - 1), 0, 0);

    VertexSet out;
    for (int i = 0; i < k; ++i)
        if (search.best & (1u << i))
            out.push_back(live[i]);
    return out;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (!g.alive(s[i]))
            return false;
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j]))
                return false;
    }
    return true;
}

} // namespace mis
