#include "ordramsey/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "ordramsey/containment.hpp"
#include "ordramsey/generators.hpp"

namespace ordramsey {

namespace {

void check_cap(long long N, int cap, const char* who) {
    if (N > cap)
        throw std::invalid_argument(std::string(who) + ": output size " + std::to_string(N) +
                                    " exceeds cap " + std::to_string(cap));
}

} // namespace

EdgeColoring es_path_coloring(int n, int q, int size_cap) {
    if (n < 2 || q < 2) throw std::invalid_argument("es_path_coloring: n, q >= 2 required");
    long long N = 1;
    for (int i = 0; i < q; ++i) N *= (n - 1);
    check_cap(N, size_cap, "es_path_coloring");
    // vertex v (0-based) <-> tuple in [n-1]^q, lexicographic; color = first
    // differing coordinate
    EdgeColoring c(static_cast<int>(N), q);
    std::vector<long long> weight(q);
    weight[q - 1] = 1;
    for (int i = q - 2; i >= 0; --i) weight[i] = weight[i + 1] * (n - 1);
    for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v) {
            int col = 0;
            while ((u / weight[col]) % (n - 1) == (v / weight[col]) % (n - 1)) ++col;
            c.set_color(u + 1, v + 1, static_cast<uint8_t>(col));
        }
    return c;
}

EdgeColoring blowup_coloring(const EdgeColoring& base, int s, const EdgeColoring& inner,
                             int size_cap) {
    if (inner.N() != s) throw std::invalid_argument("blowup_coloring: inner must be on [s]");
    if (inner.q() != base.q()) throw std::invalid_argument("blowup_coloring: q mismatch");
    const long long N = static_cast<long long>(base.N()) * s;
    check_cap(N, size_cap, "blowup_coloring");
    EdgeColoring out(static_cast<int>(N), base.q());
    for (int i = 1; i < N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            int bi = (i - 1) / s + 1, bj = (j - 1) / s + 1;
            if (bi == bj)
                out.set_color(i, j, inner.color((i - 1) % s + 1, (j - 1) % s + 1));
            else
                out.set_color(i, j, base.color(bi, bj));
        }
    return out;
}

EdgeColoring blowup_coloring(const EdgeColoring& base, int s, uint8_t inner_color,
                             int size_cap) {
    return blowup_coloring(base, s, EdgeColoring(s, base.q(), inner_color), size_cap);
}

EdgeColoring recursive_matching_lb(const EdgeColoring& base, int depth, int clique_order,
                                   int size_cap) {
    if (depth < 1) throw std::invalid_argument("recursive_matching_lb: depth >= 1 required");
    for (int col = 0; col < base.q(); ++col)
        if (find_monochromatic_copy(base, col, complete(clique_order)))
            throw std::invalid_argument(
                "recursive_matching_lb: base contains a monochromatic K_" +
                std::to_string(clique_order) + " in color " + std::to_string(col));
    EdgeColoring g = base;
    for (int i = 2; i <= depth; ++i) g = blowup_coloring(base, g.N(), g, size_cap);
    return g;
}

RandomBlowupResult random_blowup_lb(const OrderedGraph& m, int s, int t, uint64_t seed,
                                    int size_cap) {
    if (s < 1 || t < 1) throw std::invalid_argument("random_blowup_lb: s, t >= 1 required");
    const long long N = static_cast<long long>(s) * t;
    check_cap(N, size_cap, "random_blowup_lb");
    // Base coloring on the complete graph with loops on [t]: pairs in
    // lexicographic order (i <= j), loops included, each uniform.
    std::mt19937_64 rng(seed);
    std::vector<uint8_t> chi(static_cast<std::size_t>(t) * (t + 1) / 2);
    for (auto& c : chi) c = static_cast<uint8_t>(rng() & 1);
    auto loop_index = [t](int i, int j) {  // i <= j, 1-based
        return static_cast<std::size_t>(i - 1) * (2 * t - i + 2) / 2 + (j - i);
    };
    EdgeColoring psi(static_cast<int>(N), 2);
    for (int u = 1; u < N; ++u)
        for (int v = u + 1; v <= N; ++v) {
            int bu = (u - 1) / s + 1, bv = (v - 1) / s + 1;
            psi.set_color(u, v, chi[loop_index(bu, bv)]);
        }
    RandomBlowupResult res{psi, true};
    for (int col = 0; col < 2; ++col)
        if (find_monochromatic_copy(psi, col, m)) { res.verified = false; break; }
    return res;
}

OrderedGraph spread_ordering(int n, const std::vector<Edge>& g_edges,
                             const OrderedGraph& h, const std::vector<int>& h_embedding) {
    const int t = h.n();
    if (t > n) throw std::invalid_argument("spread_ordering: t <= n required");
    if (static_cast<int>(h_embedding.size()) != t)
        throw std::invalid_argument("spread_ordering: embedding has wrong arity");
    std::set<std::pair<int, int>> gset;
    for (auto [u, v] : g_edges) {
        if (u == v || u < 1 || v < 1 || u > n || v > n)
            throw std::invalid_argument("spread_ordering: bad g edge");
        if (u > v) std::swap(u, v);
        gset.insert({u, v});
    }
    std::set<int> img(h_embedding.begin(), h_embedding.end());
    if (static_cast<int>(img.size()) != t)
        throw std::invalid_argument("spread_ordering: embedding not injective");
    for (const auto& [a, b] : h.edges()) {
        int u = h_embedding[a - 1], v = h_embedding[b - 1];
        if (u > v) std::swap(u, v);
        if (!gset.count({u, v}))
            throw std::invalid_argument("spread_ordering: embedding does not map h edges to g edges");
    }
    const int s = n / t;
    std::vector<int> pos(n + 1, 0);  // position of each g vertex
    std::vector<bool> slot_used(n + 1, false);
    for (int i = 1; i <= t; ++i) {
        int p = 1 + (i - 1) * s;
        pos[h_embedding[i - 1]] = p;
        slot_used[p] = true;
    }
    int next_slot = 1;
    for (int v = 1; v <= n; ++v) {
        if (pos[v] != 0) continue;
        while (slot_used[next_slot]) ++next_slot;
        pos[v] = next_slot;
        slot_used[next_slot] = true;
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : gset) {
        int a = pos[u], b = pos[v];
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    return OrderedGraph(n, std::move(edges));
}

EdgeColoring product_lb_coloring(const EdgeColoring& avoiding, int s, const OrderedGraph& h,
                                 int size_cap) {
    for (int col = 0; col < avoiding.q(); ++col)
        if (find_monochromatic_copy(avoiding, col, h))
            throw std::invalid_argument(
                "product_lb_coloring: avoiding coloring contains a monochromatic copy of h");
    if (s == 1) return avoiding;
    return blowup_coloring(avoiding, s, uint8_t(0), size_cap);
}

EdgeColoring offdiagonal_assembly(const EdgeColoring& c1, int block, int size_cap) {
    if (block < 1) throw std::invalid_argument("offdiagonal_assembly: block >= 1 required");
    return blowup_coloring(c1, block, uint8_t(kRed), size_cap);
}

} // namespace ordramsey
