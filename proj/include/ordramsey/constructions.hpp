#pragma once

#include <cstdint>
#include <optional>

#include "ordramsey/coloring.hpp"
#include "ordramsey/graph.hpp"

namespace ordramsey {

inline constexpr int kDefaultColoringCap = 4096;  // max vertex count of built colorings

// Coloring of the complete graph on (n-1)^q vertices with no monochromatic
// monotone P_n in any color: vertices are tuples in [n-1]^q in lex order,
// a pair is colored by the first coordinate where the tuples differ.
EdgeColoring es_path_coloring(int n, int q, int size_cap = kDefaultColoringCap);

// Blow-up: pair inside block b gets inner's color (blocks have s vertices),
// pair across blocks b < b' gets base's color of (b, b').
EdgeColoring blowup_coloring(const EdgeColoring& base, int s, const EdgeColoring& inner,
                             int size_cap = kDefaultColoringCap);
EdgeColoring blowup_coloring(const EdgeColoring& base, int s, uint8_t inner_color,
                             int size_cap = kDefaultColoringCap);

// G_i of the recursive matching lower bound: depth-fold self blow-up of
// base. base is first checked to contain no monochromatic clique of order
// clique_order; throws if it does.
EdgeColoring recursive_matching_lb(const EdgeColoring& base, int depth, int clique_order,
                                   int size_cap = kDefaultColoringCap);

struct RandomBlowupResult {
    EdgeColoring coloring;
    bool verified = false;   // neither color class contains an ordered copy of m
};

// Random base coloring with loops on [t], blown up by blocks of size s;
// a block's internal edges take the block's loop color.
RandomBlowupResult random_blowup_lb(const OrderedGraph& m, int s, int t, uint64_t seed,
                                    int size_cap = kDefaultColoringCap);

// Ordering of g that places vertex i of h at position 1 + (i-1)*floor(n/t)
// and fills the remaining slots lowest original label first.
OrderedGraph spread_ordering(int n, const std::vector<Edge>& g_edges,
                             const OrderedGraph& h, const std::vector<int>& h_embedding);

// Blow-up of a verified h-avoiding coloring with all-color-0 blocks.
EdgeColoring product_lb_coloring(const EdgeColoring& avoiding, int s, const OrderedGraph& h,
                                 int size_cap = kDefaultColoringCap);

// Blow-up of c1 with blocks of the given size and all intra-block edges red.
EdgeColoring offdiagonal_assembly(const EdgeColoring& c1, int block,
                                  int size_cap = kDefaultColoringCap);

} // namespace ordramsey
