#pragma once

#include <cstdint>
#include <vector>

#include "ordramsey/coloring.hpp"
#include "ordramsey/graph.hpp"
#include "ordramsey/rational.hpp"

namespace ordramsey {

// Event classes of the off-diagonal coloring: blue triangles (P), all-red
// copies of family members (Q), red cliques of the given order (R).
struct BadEventFamily {
    bool blue_triangle = true;
    std::vector<OrderedGraph> red_family;
    int red_clique_order = 2;
    Rational p_blue;          // probability of blue per edge, in (0,1]
    int vertex_count = 0;
    uint64_t seed = 0;
};

struct ResampleStats {
    long long resamples = 0;
    long long blue_triangle_hits = 0;
    long long red_family_hits = 0;
    long long red_clique_hits = 0;
};

inline constexpr long long kDefaultResampleCap = 1000000;

// Moser-Tardos resampling: redraw the lowest-index violated event in a
// fixed enumeration (blue triangles, then red family copies, then red
// cliques) until none is violated. The returned coloring is re-verified by
// direct scans before returning. Throws when the resample cap is exceeded;
// the exception message carries the per-class counts.
EdgeColoring moser_tardos_coloring(const BadEventFamily& spec, ResampleStats* stats = nullptr,
                                   long long resample_cap = kDefaultResampleCap);

} // namespace ordramsey
