#pragma once

#include <optional>

#include "ordramsey/coloring.hpp"
#include "ordramsey/graph.hpp"

namespace ordramsey {

// Pattern size above which ordered containment search is refused. The
// problem generalizes permutation pattern matching, so the worst case is
// exponential in the pattern size.
inline constexpr int kDefaultPatternCap = 16;

// First (lexicographically smallest image) increasing injection mapping
// every pattern edge onto a host edge, or nullopt. The returned embedding
// is re-verified against the definition before returning.
std::optional<Embedding> find_ordered_copy(const OrderedGraph& host,
                                           const OrderedGraph& pattern,
                                           int pattern_cap = kDefaultPatternCap);

// Embedding of pattern into the given color class of c.
std::optional<Embedding> find_monochromatic_copy(const EdgeColoring& c, int color,
                                                 const OrderedGraph& pattern,
                                                 int pattern_cap = kDefaultPatternCap);

// Number of vertices of the longest monotone path in the given color class
// (O(N^2) dynamic program; 1 for a single vertex, 0 for N = 0).
int longest_monotone_path(const EdgeColoring& c, int color);

} // namespace ordramsey
