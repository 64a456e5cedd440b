#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mis {

// Sorted list of vertex ids.
using VertexSet = std::vector<int>;

// Mutable undirected simple graph. Vertices are removed by tombstoning:
// ids are stable for the lifetime of the graph and never reused, so undo
// logs can refer to them safely. Adjacency is kept as ordered sets and all
// iteration is in ascending id order.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n), alive_(n, true), num_alive_(n) {}

    // Allocates a fresh vertex at the end of the id space.
    int add_vertex() {
        adj_.emplace_back();
        alive_.push_back(true);
        ++num_alive_;
        return static_cast<int>(adj_.size()) - 1;
    }

    int capacity() const { return static_cast<int>(adj_.size()); }
    int num_vertices() const { return num_alive_; }
    long num_edges() const { return num_edges_; }

    bool alive(int v) const {
        return v >= 0 && v < capacity() && alive_[v];
    }

    void check_alive(int v) const {
        if (!alive(v))
            throw std::invalid_argument("dead or out-of-range vertex id " + std::to_string(v));
    }

    bool has_edge(int u, int v) const {
        if (!alive(u) || !alive(v))
            return false;
        return adj_[u].count(v) > 0;
    }

    void add_edge(int u, int v) {
        check_alive(u);
        check_alive(v);
        if (u == v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (adj_[u].insert(v).second) {
            adj_[v].insert(u);
            ++num_edges_;
        }
    }

    void remove_edge(int u, int v) {
        check_alive(u);
        check_alive(v);
        if (adj_[u].erase(v)) {
            adj_[v].erase(u);
            --num_edges_;
        }
    }

    void remove_vertex(int v) {
        check_alive(v);
        for (int w : adj_[v]) {
            adj_[w].erase(v);
            --num_edges_;
        }
        adj_[v].clear();
        alive_[v] = false;
        --num_alive_;
    }

    void remove_vertices(const VertexSet& vs) {
        for (int v : vs)
            remove_vertex(v);
    }

    const std::set<int>& neighbors(int v) const {
        check_alive(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_alive(v);
        return static_cast<int>(adj_[v].size());
    }

    VertexSet live_vertices() const {
        VertexSet out;
        out.reserve(num_alive_);
        for (int v = 0; v < capacity(); ++v)
            if (alive_[v])
                out.push_back(v);
        return out;
    }

    // Closed neighborhood N[v] as a sorted vector.
    VertexSet closed_neighborhood(int v) const {
        check_alive(v);
        VertexSet out(adj_[v].begin(), adj_[v].end());
        out.insert(std::lower_bound(out.begin(), out.end(), v), v);
        return out;
    }

    bool operator==(const Graph& other) const {
        return adj_ == other.adj_ && alive_ == other.alive_;
    }

private:
    std::vector<std::set<int>> adj_;
    std::vector<bool> alive_;
    long num_edges_ = 0;
    int num_alive_ = 0;
};

// Partition of the live vertices into connected components, each sorted,
// ordered by smallest contained id.
std::vector<VertexSet> connected_components(const Graph& g);

// Compacted copy of g[s]. The returned mapping sends new ids 0..|s|-1 back
// to the ids in g (ascending).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s);

} // namespace mis
