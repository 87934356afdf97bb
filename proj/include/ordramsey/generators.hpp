#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "ordramsey/graph.hpp"
#include "ordramsey/rational.hpp"

namespace ordramsey {

// Bijection on {1..n}; stored values are 0-indexed.
struct Permutation {
    int n = 0;
    std::vector<int> image;  // image[i] = pi(i+1), values in {0..n-1}
};

using Triple = std::tuple<int, int, int>;

// 3-uniform hypergraph on {1..n}; triples strictly increasing, sorted.
struct TripleSystem {
    int n = 0;
    std::vector<Triple> triples;
};

void validate_triples(const TripleSystem& ts);

OrderedGraph monotone_path(int n);
OrderedGraph path_power(int n, int k);
OrderedGraph complete(int n);
// Parts appear as consecutive intervals; edges exactly between distinct parts.
OrderedGraph complete_multipartite_trivial(const std::vector<int>& parts);

// Uniform over all (n-1)!! perfect matchings; seeded mt19937_64, so the
// same seed always yields the same matching.
OrderedGraph random_matching(int n, uint64_t seed);

// Bit-reversal permutation on 2^h values.
Permutation vdc_permutation(int h);

// Perfect matching on 2n vertices (n = 2^h) joining i with n + pi(i);
// interval chromatic number 2.
OrderedGraph vdc_matching(int h);

inline constexpr int kDefaultDiscrepancyCap = 256;

// Max over interval pairs I, J of | |pi(I) cap J| - |I||J|/n |, exact.
Rational interval_discrepancy(const Permutation& p, int size_cap = kDefaultDiscrepancyCap);

// Deterministic perfect matching on t^2 vertices whose t length-t blocks
// all carry a cross edge for every block pair.
OrderedGraph jumbled_matching(int t);

// Both defining properties, checked exhaustively over disjoint interval
// pairs: length >= 2*sqrt(n) pairs always have an edge, length <= 2*sqrt(n)
// pairs have at most 9 edges.
bool is_jumbled(const OrderedGraph& m);

// 2k vertices, all k^2 edges (i,j) with i <= k < j.
OrderedGraph j_k(int k);

// Triples {i,i+1,i+2} for 1 <= i <= n-2.
TripleSystem tight_path_3(int n);

// T(H): triples {i,j,k} on n+1 vertices for every edge (i,j) of h and k > j.
TripleSystem t_hypergraph(const OrderedGraph& h);

inline constexpr int kDefaultSFamilyCap = 6;

// All ordered graphs H on [hs.n - 1] whose stepping-up hypergraph T(H)
// contains a copy of hs (injection mapping triples to triples).
std::vector<OrderedGraph> s_family(const TripleSystem& hs, int size_cap = kDefaultSFamilyCap);

// True iff hs embeds into host by some injection mapping triples to triples.
bool triples_embed(const TripleSystem& host, const TripleSystem& hs);

// JSON formats: {"n":..., "triples":[[i,j,k],...]} and {"n":..., "image":[...]}.
std::string triples_to_json(const TripleSystem& ts);
TripleSystem triples_from_json(const std::string& text);
std::string permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const std::string& text);

} // namespace ordramsey
