#pragma once

#include "mis/graph.hpp"

#include <variant>
#include <vector>

namespace mis {

// Undo-log events. Each payload captures enough of the pre-reduction local
// structure to lift any independent set of the reduced graph back over the
// event. Vertex ids refer to the id space at the time the event was
// recorded; ids are never reused, so they stay unambiguous.

struct SimplicialInclude {
    int v;
    VertexSet removed_closed_neighborhood;
};

struct Fold {
    int v; // the degree-2 vertex
    int u;
    int w; // its non-adjacent neighbors
    int new_vertex;
    VertexSet new_vertex_neighbors;
};

struct CriticalInclude {
    VertexSet independent_set;
    VertexSet removed_closed_neighborhood;
};

struct LPInclude {
    VertexSet included;
    VertexSet removed_neighbors;
};

struct UnconfinedExclude {
    int v;
};

struct TwinInclude {
    int u;
    int v;
    VertexSet neighborhood;
};

struct TwinGadget {
    int u;
    int v;
    VertexSet neighborhood; // N(u) = N(v), the three removed neighbors
    int gadget;
    VertexSet gadget_neighbors; // u's two-neighborhood
};

struct FunnelResolve {
    VertexSet a_set;
    VertexSet b_set;
    VertexSet c_set; // N(A) ∩ N(B), removed alongside A and B
    std::vector<std::pair<int, int>> added_edges;
    VertexSet a_neighbors; // N(A) \ C \ B before removal
    VertexSet b_neighbors; // N(B) \ C \ A before removal
};

using ReductionEvent = std::variant<SimplicialInclude, Fold, CriticalInclude, LPInclude,
                                    UnconfinedExclude, TwinInclude, TwinGadget, FunnelResolve>;

// How much the event is guaranteed to contribute to the size of a maximum
// independent set of the original graph.
int event_offset(const ReductionEvent& event);

struct ReductionTrace {
    std::vector<ReductionEvent> events;
    int offset = 0;

    void record(ReductionEvent event) {
        offset += event_offset(event);
        events.push_back(std::move(event));
    }

    bool empty() const { return events.empty(); }
};

// Per-rule fire counters plus the matching-volume numbers the critical
// reductions report. One increment per recorded event.
struct ReductionStats {
    long simplicial = 0;
    long fold = 0;
    long critical = 0;
    long lp = 0;
    long unconfined = 0;
    long twin = 0;
    long twin_gadget = 0;
    long funnel = 0;
    long iterations = 0;
    long matchings_computed = 0;
    long augmenting_searches = 0;

    long fires() const {
        return simplicial + fold + critical + lp + unconfined + twin + twin_gadget + funnel;
    }
};

} // namespace mis
