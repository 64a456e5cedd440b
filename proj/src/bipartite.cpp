#include "mis/bipartite.hpp"

#include <algorithm>
#include <stdexcept>

namespace mis {

void BipartiteGraph::add_edge(int l, int r) {
    auto& row = adj[l];
    auto it = std::lower_bound(row.begin(), row.end(), r);
    if (it != row.end() && *it == r)
        return;
    row.insert(it, r);
    auto& col = radj[r];
    col.insert(std::lower_bound(col.begin(), col.end(), l), l);
}

long BipartiteGraph::num_edges() const {
    long m = 0;
    for (const auto& row : adj)
        m += static_cast<long>(row.size());
    return m;
}

bool BipartiteGraph::has_edge(int l, int r) const {
    const auto& row = adj[l];
    return std::binary_search(row.begin(), row.end(), r);
}

void validate_matching(const BipartiteGraph& b, const Matching& m) {
    if (static_cast<int>(m.match_left.size()) != b.n_left ||
        static_cast<int>(m.match_right.size()) != b.n_right)
        throw std::invalid_argument("matching shape does not fit the bipartite graph");
    int count = 0;
    for (int l = 0; l < b.n_left; ++l) {
        int r = m.match_left[l];
        if (r == -1)
            continue;
        if (r < 0 || r >= b.n_right || m.match_right[r] != l)
            throw std::invalid_argument("matching is not a mutual partial bijection");
        if (!b.has_edge(l, r))
            throw std::invalid_argument("matching uses a non-edge");
        ++count;
    }
    for (int r = 0; r < b.n_right; ++r) {
        int l = m.match_right[r];
        if (l != -1 && m.match_left[l] != r)
            throw std::invalid_argument("matching is not a mutual partial bijection");
    }
    if (count != m.size)
        throw std::invalid_argument("matching size field is stale");
}

BipartiteGraph build_bidouble(const Graph& g) {
    VertexSet live = g.live_vertices();
    int n = static_cast<int>(live.size());
    std::vector<int> compact(g.capacity(), -1);
    for (int i = 0; i < n; ++i)
        compact[live[i]] = i;

    BipartiteGraph b(n, n);
    b.origin = live;
    for (int i = 0; i < n; ++i) {
        auto& row = b.adj[i];
        for (int w : g.neighbors(live[i]))
            row.push_back(compact[w]);
        b.radj[i] = row; // symmetric by construction
    }
    return b;
}

namespace {

// Kuhn-style DFS from a free left vertex; visited marks on right vertices
// are epoch-stamped so phases reset in O(1).
struct Augmenter {
    const BipartiteGraph& b;
    Matching& m;
    const std::vector<char>* removed_left = nullptr;
    const std::vector<char>* removed_right = nullptr;
    std::vector<int> visited;
    int epoch = 0;

    explicit Augmenter(const BipartiteGraph& b, Matching& m) : b(b), m(m), visited(b.n_right, 0) {}

    bool left_alive(int l) const { return !removed_left || !(*removed_left)[l]; }
    bool right_alive(int r) const { return !removed_right || !(*removed_right)[r]; }

    bool try_augment(int l) {
        for (int r : b.adj[l]) {
            if (visited[r] == epoch || !right_alive(r))
                continue;
            visited[r] = epoch;
            if (m.match_right[r] == -1 || try_augment(m.match_right[r])) {
                m.match_left[l] = r;
                m.match_right[r] = l;
                return true;
            }
        }
        return false;
    }
};

} // namespace

Matching max_matching(const BipartiteGraph& b, const Matching* warm_start, ReductionStats* stats) {
    Matching m(b.n_left, b.n_right);
    if (warm_start) {
        validate_matching(b, *warm_start);
        m = *warm_start;
    }

    Augmenter aug(b, m);
    for (int l = 0; l < b.n_left; ++l) {
        if (m.match_left[l] != -1)
            continue;
        ++aug.epoch;
        if (stats)
            ++stats->augmenting_searches;
        if (aug.try_augment(l))
            ++m.size;
    }
    if (stats)
        ++stats->matchings_computed;
    return m;
}

int independence_number_bipartite(const BipartiteGraph& b, const Matching& m) {
    return b.n_left + b.n_right - m.size;
}

namespace {

// Alternating reachability from the unmatched left vertices (the König
// construction). Fills z_left/z_right.
void alternating_reach(const BipartiteGraph& b, const Matching& m,
                       std::vector<char>& z_left, std::vector<char>& z_right) {
    z_left.assign(b.n_left, 0);
    z_right.assign(b.n_right, 0);
    std::vector<int> stack;
    for (int l = 0; l < b.n_left; ++l) {
        if (m.match_left[l] == -1) {
            z_left[l] = 1;
            stack.push_back(l);
        }
    }
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int r : b.adj[l]) {
            if (r == m.match_left[l] || z_right[r])
                continue;
            z_right[r] = 1;
            int next = m.match_right[r];
            if (next != -1 && !z_left[next]) {
                z_left[next] = 1;
                stack.push_back(next);
            }
        }
    }
}

} // namespace

BipartiteVertexSet extract_mis_bipartite(const BipartiteGraph& b, const Matching& m) {
    std::vector<char> z_left, z_right;
    alternating_reach(b, m, z_left, z_right);
    BipartiteVertexSet out;
    for (int l = 0; l < b.n_left; ++l)
        if (z_left[l])
            out.left.push_back(l);
    for (int r = 0; r < b.n_right; ++r)
        if (!z_right[r])
            out.right.push_back(r);
    return out;
}

RestrictedMatchResult rematch_after_removal(const BipartiteGraph& b, const Matching& base,
                                            const std::vector<char>& removed_left,
                                            const std::vector<char>& removed_right) {
    RestrictedMatchResult result;
    result.matching = base;
    Matching& m = result.matching;

    for (int l = 0; l < b.n_left; ++l) {
        int r = m.match_left[l];
        if (removed_left[l] && r != -1) {
            m.match_left[l] = -1;
            m.match_right[r] = -1;
            --m.size;
            ++result.stripped;
        }
    }
    for (int r = 0; r < b.n_right; ++r) {
        int l = m.match_right[r];
        if (removed_right[r] && l != -1) {
            m.match_right[r] = -1;
            m.match_left[l] = -1;
            --m.size;
            ++result.stripped;
        }
    }
    for (int l = 0; l < b.n_left; ++l)
        result.live_vertices += !removed_left[l];
    for (int r = 0; r < b.n_right; ++r)
        result.live_vertices += !removed_right[r];

    Augmenter aug(b, m);
    aug.removed_left = &removed_left;
    aug.removed_right = &removed_right;

    // A subgraph of b cannot out-match base, so base.size caps the result;
    // hitting the cap ends the loop without a final failing search.
    while (m.size < base.size) {
        ++aug.epoch;
        ++result.searches;
        bool grew = false;
        for (int l = 0; l < b.n_left && !grew; ++l) {
            if (removed_left[l] || m.match_left[l] != -1)
                continue;
            grew = aug.try_augment(l);
        }
        if (!grew)
            break;
        ++m.size;
    }
    return result;
}

} // namespace mis
