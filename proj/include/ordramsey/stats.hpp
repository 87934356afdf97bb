#pragma once

#include <vector>

#include "ordramsey/graph.hpp"

namespace ordramsey {

struct GraphStats {
    int max_degree = 0;
    int degeneracy = 0;
    std::vector<int> degenerate_ordering;  // each vertex has <= d earlier neighbors
    int interval_chromatic = 0;
    int bandwidth = 0;
    int cover_number = 0;
};

int max_degree(const OrderedGraph& g);

// chi_<: left-to-right greedy sweep, cutting an interval exactly when
// extending it would put two adjacent vertices in one interval.
int interval_chromatic(const OrderedGraph& g);

struct DegeneracyResult {
    int d = 0;
    std::vector<int> ordering;
};

// Repeated minimum-degree removal, ties broken by smallest vertex label.
DegeneracyResult degeneracy(const OrderedGraph& g);

// Max of j - i over edges; 0 for an edgeless graph.
int bandwidth(const OrderedGraph& g);

inline constexpr int kDefaultCoverCap = 24;

// Exact vertex cover number via branch-and-bound on edges.
int cover_number(const OrderedGraph& g, int size_cap = kDefaultCoverCap);

// Maximum matching size (used for the m <= tau <= 2m sanity property).
int max_matching_size(const OrderedGraph& g);

GraphStats graph_stats(const OrderedGraph& g, int cover_cap = kDefaultCoverCap);

} // namespace ordramsey
