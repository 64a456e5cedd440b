#include "mis/solver.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace mis {

namespace {

// Sequential clique-cover coloring in the given candidate order: a vertex
// joins the first class whose members are all adjacent to it in g.
// Returns (order re-sorted class by class, 1-based colors, class count).
struct Coloring {
    std::vector<int> order;
    std::vector<int> colors;
    int num_classes = 0;
};

template <typename AdjacentFn>
Coloring color_candidates(const std::vector<int>& cand, AdjacentFn adjacent) {
    Coloring out;
    std::vector<std::vector<int>> classes;
    for (int u : cand) {
        bool placed = false;
        for (auto& cls : classes) {
            bool fits = true;
            for (int w : cls)
                if (!adjacent(u, w)) {
                    fits = false;
                    break;
                }
            if (fits) {
                cls.push_back(u);
                placed = true;
                break;
            }
        }
        if (!placed)
            classes.push_back({u});
    }
    out.num_classes = static_cast<int>(classes.size());
    for (int c = 0; c < out.num_classes; ++c)
        for (int u : classes[c]) {
            out.order.push_back(u);
            out.colors.push_back(c + 1);
        }
    return out;
}

class BranchAndBound {
public:
    BranchAndBound(const Graph& g, const SolverOptions& options)
        : options_(options), to_original_(g.live_vertices()) {
        int n = static_cast<int>(to_original_.size());
        std::vector<int> compact(g.capacity(), -1);
        for (int i = 0; i < n; ++i)
            compact[to_original_[i]] = i;
        adj_.resize(n);
        for (int i = 0; i < n; ++i)
            for (int w : g.neighbors(to_original_[i]))
                adj_[i].push_back(compact[w]);
    }

    SolveResult run() {
        int n = static_cast<int>(adj_.size());

        // ascending degree in g = descending degree in the complement
        std::vector<int> initial(n);
        for (int i = 0; i < n; ++i)
            initial[i] = i;
        std::stable_sort(initial.begin(), initial.end(), [&](int a, int b) {
            return adj_[a].size() < adj_[b].size();
        });

        // greedy incumbent in the same order
        for (int v : initial) {
            bool free = true;
            for (int w : best_)
                if (adjacent(v, w)) {
                    free = false;
                    break;
                }
            if (free)
                best_.push_back(v);
        }

        if (deadline_passed())
            timed_out_ = true;
        else
            expand(initial);

        SolveResult result;
        result.exact = !timed_out_;
        result.nodes_expanded = nodes_;
        for (int v : best_)
            result.mis.push_back(to_original_[v]);
        std::sort(result.mis.begin(), result.mis.end());
        return result;
    }

private:
    bool adjacent(int u, int v) const {
        const auto& row = adj_[u];
        return std::binary_search(row.begin(), row.end(), v);
    }

    bool deadline_passed() const {
        return options_.deadline && std::chrono::steady_clock::now() > *options_.deadline;
    }

    void expand(const std::vector<int>& cand) {
        if (timed_out_)
            return;
        ++nodes_;
        if (options_.deadline && nodes_ % options_.deadline_check_interval == 0 && deadline_passed()) {
            timed_out_ = true;
            return;
        }
        if (cand.empty()) {
            if (current_.size() > best_.size())
                best_ = current_;
            return;
        }

        Coloring col = color_candidates(cand, [this](int a, int b) { return adjacent(a, b); });
        for (int i = static_cast<int>(col.order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current_.size()) + col.colors[i] <= static_cast<int>(best_.size()))
                return;
            int v = col.order[i];
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (!adjacent(col.order[j], v))
                    next.push_back(col.order[j]);
            current_.push_back(v);
            expand(next);
            current_.pop_back();
            if (timed_out_)
                return;
        }
    }

    SolverOptions options_;
    VertexSet to_original_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> current_;
    std::vector<int> best_;
    long nodes_ = 0;
    bool timed_out_ = false;
};

} // namespace

std::pair<std::vector<int>, int> coloring_bound(const Graph& g, const VertexSet& candidates) {
    for (int v : candidates)
        g.check_alive(v);
    Coloring col = color_candidates(candidates, [&](int a, int b) { return g.has_edge(a, b); });
    // report colors in the candidates' original order
    std::vector<int> colors(candidates.size());
    for (size_t i = 0; i < col.order.size(); ++i) {
        auto pos = std::find(candidates.begin(), candidates.end(), col.order[i]);
        colors[pos - candidates.begin()] = col.colors[i];
    }
    return {std::move(colors), col.num_classes};
}

SolveResult solve_component(const Graph& g, const SolverOptions& options) {
    BranchAndBound bnb(g, options);
    SolveResult result = bnb.run();
    ComponentReport report;
    report.size = g.num_vertices();
    report.nodes_expanded = result.nodes_expanded;
    report.best_size = static_cast<int>(result.mis.size());
    report.exact = result.exact;
    result.components.push_back(report);
    return result;
}

SolveResult solve(const Graph& g, const SolverOptions& options) {
    std::vector<VertexSet> comps = connected_components(g);
    std::vector<SolveResult> partial(comps.size());

    auto run_one = [&](size_t i) {
        auto [sub, to_g] = induced_subgraph(g, comps[i]);
        SolveResult r = solve_component(sub, options);
        for (int& v : r.mis)
            v = to_g[v];
        partial[i] = std::move(r);
    };

    int jobs = std::max(1, options.jobs);
    if (jobs > 1 && comps.size() > 1) {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i; (i = next.fetch_add(1)) < comps.size();)
                run_one(i);
        };
        std::vector<std::thread> pool;
        size_t width = std::min<size_t>(jobs, comps.size());
        for (size_t t = 0; t < width; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    } else {
        for (size_t i = 0; i < comps.size(); ++i)
            run_one(i);
    }

    SolveResult out;
    for (size_t i = 0; i < comps.size(); ++i) {
        out.mis.insert(out.mis.end(), partial[i].mis.begin(), partial[i].mis.end());
        out.exact = out.exact && partial[i].exact;
        out.nodes_expanded += partial[i].nodes_expanded;
        out.components.push_back(partial[i].components.front());
    }
    std::sort(out.mis.begin(), out.mis.end());
    return out;
}

} // namespace mis
