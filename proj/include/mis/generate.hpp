#pragma once

#include "mis/graph.hpp"

#include <cstdint>

namespace mis {

// Deterministic test-instance generators. All of them produce the same
// graph for the same arguments on every platform (no use of distribution
// classes whose output is implementation-defined).

// G(n,p): each unordered pair becomes an edge with probability p.
Graph generate_gnp(int n, double p, std::uint64_t seed);

Graph generate_cycle(int n);
Graph generate_path(int n);

// Star K_{1,n}: vertex 0 is the center, 1..n the leaves.
Graph generate_star(int n);

// Random chordal graph: vertex i is attached to a clique among vertices
// 0..i-1, so the reverse insertion order is a perfect elimination ordering.
Graph generate_chordal(int n, std::uint64_t seed);

// Uniform random attachment tree on n vertices.
Graph generate_tree(int n, std::uint64_t seed);

} // namespace mis
