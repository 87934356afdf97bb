#include "ordramsey/containment.hpp"

#include <stdexcept>

namespace ordramsey {

namespace {

// Backtracking over pattern vertices in label order. Position-window
// pruning: vertex v must map after phi(v-1) and leave room for the
// remaining pattern vertices.
bool extend(const OrderedGraph& host, const OrderedGraph& pattern, int v,
            std::vector<int>& image) {
    const int p = pattern.n();
    if (v > p) return true;
    const int lo = v == 1 ? 1 : image[v - 2] + 1;
    const int hi = host.n() - (p - v);
    for (int u = lo; u <= hi; ++u) {
        bool ok = true;
        for (const auto& [a, b] : pattern.edges()) {
            if (b != v) continue;  // only edges whose later endpoint is v
            if (!host.has_edge(image[a - 1], u)) { ok = false; break; }
        }
        if (!ok) continue;
        image[v - 1] = u;
        if (extend(host, pattern, v + 1, image)) return true;
    }
    return false;
}

} // namespace

std::optional<Embedding> find_ordered_copy(const OrderedGraph& host,
                                           const OrderedGraph& pattern,
                                           int pattern_cap) {
    if (pattern.n() > pattern_cap)
        throw std::invalid_argument("pattern size " + std::to_string(pattern.n()) +
                                    " exceeds cap " + std::to_string(pattern_cap));
    if (pattern.n() > host.n()) return std::nullopt;
    std::vector<int> image(pattern.n());
    if (!extend(host, pattern, 1, image)) return std::nullopt;
    Embedding phi{pattern.n(), std::move(image)};
    if (!embedding_maps_edges(phi, pattern, host))
        throw std::logic_error("containment: produced embedding failed verification");
    return phi;
}

std::optional<Embedding> find_monochromatic_copy(const EdgeColoring& c, int color,
                                                 const OrderedGraph& pattern,
                                                 int pattern_cap) {
    if (color < 0 || color >= c.q()) throw std::invalid_argument("invalid color index");
    return find_ordered_copy(c.color_class(color), pattern, pattern_cap);
}

int longest_monotone_path(const EdgeColoring& c, int color) {
    if (color < 0 || color >= c.q()) throw std::invalid_argument("invalid color index");
    const int N = c.N();
    if (N == 0) return 0;
    std::vector<int> len(N + 1, 1);  // len[v]: longest monotone path ending at v
    int best = 1;
    for (int v = 2; v <= N; ++v) {
        for (int u = 1; u < v; ++u)
            if (c.color(u, v) == color && len[u] + 1 > len[v]) len[v] = len[u] + 1;
        if (len[v] > best) best = len[v];
    }
    return best;
}

} // namespace ordramsey
