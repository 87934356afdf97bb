#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ordramsey/coloring.hpp"
#include "ordramsey/graph.hpp"
#include "ordramsey/rational.hpp"

namespace ordramsey {

// Ordered family of disjoint vertex sets with a certified pairwise density
// bound: for i < j every vertex of sets[i] precedes every vertex of
// sets[j], each |sets[i]| >= size_bound, and the edge density between any
// two sets is at most threshold.
struct SparseWitness {
    std::vector<std::vector<int>> sets;
    Rational threshold;
    Rational size_bound;
};

// Exactly one arm is populated; the populated arm re-verifies against the
// host before any embedder returns it. Red/blue arms carry the pattern the
// embedding realizes.
struct EitherWitness {
    enum class Kind { RedEmbedding, BlueEmbedding, Sparse };
    Kind kind = Kind::RedEmbedding;
    Embedding embedding;
    OrderedGraph pattern;
    SparseWitness sparse;
};

std::string witness_to_json(const EitherWitness& w);

// Red monotone P_m or blue K_n via the longest-red-path labeling argument.
// Requires N >= (m-1)(n-1)+1.
EitherWitness path_vs_clique(const EdgeColoring& c, int m, int n);

// Red ordered copy of the matching m, or a blue trivially ordered
// chi-partite K_{n',...,n'}. chi is rounded up to a power of two
// internally. Requires N >= n^ceil(log2 chi) * n'.
EitherWitness match_vs_multipartite(const EdgeColoring& c, const OrderedGraph& m,
                                    int chi, int n_part);

using SubEmbedder = std::function<EitherWitness(const EdgeColoring&)>;

// Red m or blue lexicographic product g.h via the reduced-graph recursion.
// g_embedder must return red m or blue g on any coloring with >= r_g
// vertices; h_embedder likewise for h at >= r_h. Requires N >= r_g * r_h.
EitherWitness lex_product_embed(const EdgeColoring& c, const OrderedGraph& m,
                                const OrderedGraph& g, const OrderedGraph& h,
                                const SubEmbedder& g_embedder, const SubEmbedder& h_embedder,
                                int r_g, int r_h);

// Ordered lexicographic product: t = |h| consecutive copies of g, complete
// bipartite between copies i and j iff (i,j) is an edge of h.
OrderedGraph lex_product(const OrderedGraph& g, const OrderedGraph& h);

// Red m or blue P_n^k where n = |m|, via K_k . P_n. Requires
// N >= n^(ceil(log2 k)+2).
EitherWitness bandwidth_embed(const EdgeColoring& c, const OrderedGraph& m, int k);

// Ordered copy of h in host_red, or a SparseWitness with 2^s ordered sets,
// each of size >= c^{sd} N / (2^{sd+1} Delta n)^s, pairwise density <= c.
EitherWitness greedy_embed_or_sparse(const OrderedGraph& host_red, const OrderedGraph& h,
                                     const Rational& c, int s);

inline constexpr int kDefaultSubsampleCap = 1000;

// Subset with internal edge density <= c, built from greedy_embed_or_sparse
// at threshold c/2 and depth ceil(log2(2/c)) followed by equal-size
// subsampling. host must contain no ordered copy of h.
std::vector<int> sparse_subset(const OrderedGraph& host, const OrderedGraph& h,
                               const Rational& c, uint64_t seed,
                               int sample_cap = kDefaultSubsampleCap);

// Ordered copy of the trivially ordered chi-partite K_{n,...,n} inside
// host_blue, given ordered sets with non-edge density <= 1/(8 chi^2 n) and
// size >= 4 chi n. Throws (naming the violated condition) otherwise.
Embedding embed_multipartite_dense(const OrderedGraph& host_blue,
                                   const std::vector<std::vector<int>>& sets, int n);

struct MonotoneSubsequence {
    bool increasing = true;
    std::vector<int> indices;  // 1-based positions into xs, strictly increasing
};

// Monotone subsequence of length n from |xs| >= (n-1)^2 + 1 distinct
// numbers, via path_vs_clique on the comparison coloring.
MonotoneSubsequence erdos_szekeres_sequence_witness(const std::vector<double>& xs, int n);

} // namespace ordramsey
