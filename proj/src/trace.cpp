#include "mis/trace.hpp"

namespace mis {

namespace {

struct OffsetVisitor {
    int operator()(const SimplicialInclude&) const { return 1; }
    int operator()(const Fold&) const { return 1; }
    int operator()(const CriticalInclude& e) const { return static_cast<int>(e.independent_set.size()); }
    int operator()(const LPInclude& e) const { return static_cast<int>(e.included.size()); }
    int operator()(const UnconfinedExclude&) const { return 0; }
    int operator()(const TwinInclude&) const { return 2; }
    int operator()(const TwinGadget&) const { return 2; }
    int operator()(const FunnelResolve&) const { return 1; }
};

} // namespace

int event_offset(const ReductionEvent& event) {
    return std::visit(OffsetVisitor{}, event);
}

} // namespace mis
