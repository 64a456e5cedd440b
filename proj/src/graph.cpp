#include "mis/graph.hpp"

#include <algorithm>

namespace mis {

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> components;
    std::vector<bool> seen(g.capacity(), false);
    std::vector<int> stack;
    for (int root = 0; root < g.capacity(); ++root) {
        if (!g.alive(root) || seen[root])
            continue;
        VertexSet comp;
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> to_old(s.begin(), s.end());
    std::sort(to_old.begin(), to_old.end());
    to_old.erase(std::unique(to_old.begin(), to_old.end()), to_old.end());

    std::vector<int> to_new(g.capacity(), -1);
    for (size_t i = 0; i < to_old.size(); ++i) {
        g.check_alive(to_old[i]);
        to_new[to_old[i]] = static_cast<int>(i);
    }

    Graph sub(static_cast<int>(to_old.size()));
    for (size_t i = 0; i < to_old.size(); ++i) {
        for (int w : g.neighbors(to_old[i])) {
            if (to_new[w] > static_cast<int>(i))
                sub.add_edge(static_cast<int>(i), to_new[w]);
        }
    }
    return {std::move(sub), std::move(to_old)};
}

} // namespace mis
