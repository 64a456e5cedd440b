#include "mis/generate.hpp"

#include <random>
#include <stdexcept>

namespace mis {
namespace {

void check_n(int n) {
    if (n < 1)
        throw std::invalid_argument("generator requires n >= 1");
}

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased-enough bounded draw; the slight modulo bias is irrelevant here
// and keeps the sequence platform-independent.
int next_below(std::mt19937_64& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

} // namespace

Graph generate_gnp(int n, double p, std::uint64_t seed) {
    check_n(n);
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("edge probability must be in [0,1]");
    Graph g(n);
    std::mt19937_64 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (next_unit(rng) < p)
                g.add_edge(u, v);
    return g;
}

Graph generate_cycle(int n) {
    check_n(n);
    Graph g(n);
    if (n == 1)
        return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph generate_path(int n) {
    check_n(n);
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph generate_star(int n) {
    check_n(n);
    Graph g(n + 1);
    for (int leaf = 1; leaf <= n; ++leaf)
        g.add_edge(0, leaf);
    return g;
}

Graph generate_chordal(int n, std::uint64_t seed) {
    check_n(n);
    Graph g(n);
    std::mt19937_64 rng(seed);
    std::vector<int> clique;
    for (int v = 1; v < n; ++v) {
        clique.clear();
        clique.push_back(next_below(rng, v));
        // grow the attachment clique among common neighbors of what we have
        while (next_unit(rng) < 0.6) {
            std::vector<int> common;
            for (int c : g.neighbors(clique[0])) {
                if (c >= v)
                    continue;
                bool ok = true;
                for (size_t i = 0; i < clique.size() && ok; ++i)
                    ok = (c != clique[i]) && (i == 0 || g.has_edge(c, clique[i]));
                if (ok)
                    common.push_back(c);
            }
            if (common.empty())
                break;
            clique.push_back(common[next_below(rng, static_cast<int>(common.size()))]);
        }
        for (int c : clique)
            g.add_edge(v, c);
    }
    return g;
}

Graph generate_tree(int n, std::uint64_t seed) {
    check_n(n);
    Graph g(n);
    std::mt19937_64 rng(seed);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, next_below(rng, v));
    return g;
}

} // namespace mis
