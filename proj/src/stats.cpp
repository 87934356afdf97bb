#include "ordramsey/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordramsey {

int max_degree(const OrderedGraph& g) {
    int best = 0;
    for (int v = 1; v <= g.n(); ++v) best = std::max(best, g.degree(v));
    return best;
}

int interval_chromatic(const OrderedGraph& g) {
    if (g.n() == 0) return 0;
    int intervals = 1;
    int start = 1;  // first vertex of the current interval
    for (int v = 2; v <= g.n(); ++v) {
        bool conflict = false;
        for (int u = start; u < v; ++u)
            if (g.has_edge(u, v)) { conflict = true; break; }
        if (conflict) {
            ++intervals;
            start = v;
        }
    }
    return intervals;
}

DegeneracyResult degeneracy(const OrderedGraph& g) {
    const int n = g.n();
    std::vector<int> deg(n + 1, 0);
    std::vector<bool> removed(n + 1, false);
    for (int v = 1; v <= n; ++v) deg[v] = g.degree(v);

    std::vector<int> removal;
    removal.reserve(n);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 1; v <= n; ++v)
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        d = std::max(d, deg[pick]);
        removed[pick] = true;
        removal.push_back(pick);
        for (int w : g.neighbors(pick))
            if (!removed[w]) --deg[w];
    }
    // Reversed removal order: each vertex's earlier neighbors are exactly
    // the ones that were still present when it was removed.
    std::reverse(removal.begin(), removal.end());
    return {d, removal};
}

int bandwidth(const OrderedGraph& g) {
    int best = 0;
    for (const auto& [i, j] : g.edges()) best = std::max(best, j - i);
    return best;
}

namespace {

int cover_branch(const OrderedGraph& g, std::vector<bool>& excluded,
                 std::vector<bool>& included, int taken, int best) {
    if (taken >= best) return best;
    // first edge not yet covered
    for (const auto& [i, j] : g.edges()) {
        if (included[i] || included[j]) continue;
        if (!excluded[i]) {
            included[i] = true;
            best = cover_branch(g, excluded, included, taken + 1, best);
            included[i] = false;
        }
        if (!excluded[j]) {
            excluded[i] = true;  // branching on j means i stays out of the cover
            included[j] = true;
            best = cover_branch(g, excluded, included, taken + 1, best);
            included[j] = false;
            excluded[i] = false;
        }
        return best;
    }
    return taken;  // all edges covered
}

} // namespace

int cover_number(const OrderedGraph& g, int size_cap) {
    if (g.n() > size_cap)
        throw std::invalid_argument("cover_number: n=" + std::to_string(g.n()) +
                                    " exceeds cap " + std::to_string(size_cap));
    std::vector<bool> excluded(g.n() + 1, false), included(g.n() + 1, false);
    return cover_branch(g, excluded, included, 0, g.n());
}

namespace {

// Exact maximum matching: lowest unused vertex is either left unmatched or
// matched to one of its unused neighbors.
int matching_rec(const OrderedGraph& g, uint64_t used, int from) {
    int i = from;
    while (i <= g.n() && ((used >> (i - 1)) & 1)) ++i;
    if (i > g.n()) return 0;
    int best = matching_rec(g, used | (uint64_t(1) << (i - 1)), i + 1);
    for (int j : g.neighbors(i)) {
        if (j < i || ((used >> (j - 1)) & 1)) continue;
        best = std::max(best, 1 + matching_rec(g, used | (uint64_t(1) << (i - 1)) |
                                                      (uint64_t(1) << (j - 1)), i + 1));
    }
    return best;
}

} // namespace

int max_matching_size(const OrderedGraph& g) {
    if (g.n() > 32)
        throw std::invalid_argument("max_matching_size: exact search capped at n=32");
    return matching_rec(g, 0, 1);
}

GraphStats graph_stats(const OrderedGraph& g, int cover_cap) {
    GraphStats s;
    s.max_degree = max_degree(g);
    auto dr = degeneracy(g);
    s.degeneracy = dr.d;
    s.degenerate_ordering = dr.ordering;
    s.interval_chromatic = interval_chromatic(g);
    s.bandwidth = bandwidth(g);
    s.cover_number = cover_number(g, cover_cap);
    return s;
}

} // namespace ordramsey
