#include "ordramsey/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "ordramsey/stats.hpp"

namespace ordramsey {

void validate_triples(const TripleSystem& ts) {
    for (const auto& [i, j, k] : ts.triples) {
        if (!(1 <= i && i < j && j < k && k <= ts.n))
            throw std::invalid_argument("triple not strictly increasing in range");
    }
    auto sorted = ts.triples;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate triple");
}

OrderedGraph monotone_path(int n) {
    if (n < 1) throw std::invalid_argument("monotone_path: n >= 1 required");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return OrderedGraph(n, std::move(edges));
}

OrderedGraph path_power(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("path_power: n, k >= 1 required");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= std::min(n, i + k); ++j) edges.emplace_back(i, j);
    return OrderedGraph(n, std::move(edges));
}

OrderedGraph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return OrderedGraph(n, std::move(edges));
}

OrderedGraph complete_multipartite_trivial(const std::vector<int>& parts) {
    int n = 0;
    std::vector<int> block;  // block index per vertex
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw std::invalid_argument("multipartite: part sizes >= 1 required");
        for (int i = 0; i < parts[p]; ++i) block.push_back(static_cast<int>(p));
        n += parts[p];
    }
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (block[i - 1] != block[j - 1]) edges.emplace_back(i, j);
    return OrderedGraph(n, std::move(edges));
}

OrderedGraph random_matching(int n, uint64_t seed) {
    if (n % 2 != 0) throw std::invalid_argument("random_matching: n must be even");
    std::mt19937_64 rng(seed);
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    // Fisher-Yates (mt19937_64, index by modulo), then pair consecutive
    // elements: uniform over matchings up to a 2^-59 modulo bias.
    for (int i = n - 1; i > 0; --i) {
        int r = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
        std::swap(verts[i], verts[r]);
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; i += 2) {
        int a = verts[i], b = verts[i + 1];
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    return OrderedGraph(n, std::move(edges));
}

Permutation vdc_permutation(int h) {
    if (h < 1 || h > 30) throw std::invalid_argument("vdc_permutation: 1 <= h <= 30 required");
    const int n = 1 << h;
    Permutation p;
    p.n = n;
    p.image.resize(n);
    for (int v = 0; v < n; ++v) {
        int r = 0;
        for (int b = 0; b < h; ++b)
            if ((v >> b) & 1) r |= 1 << (h - 1 - b);
        p.image[v] = r;
    }
    return p;
}

OrderedGraph vdc_matching(int h) {
    Permutation p = vdc_permutation(h);
    const int n = p.n;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + p.image[i - 1] + 1);
    return OrderedGraph(2 * n, std::move(edges));
}

Rational interval_discrepancy(const Permutation& p, int size_cap) {
    const int n = p.n;
    if (n > size_cap)
        throw std::invalid_argument("interval_discrepancy: n exceeds cap");
    if (n == 0) return Rational(0);
    // prefix[i][j] = #{i' <= i : pi(i') <= j}, 1-based positions, values 1..n
    std::vector<std::vector<int>> prefix(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= n; ++i) {
        int v = p.image[i - 1] + 1;
        for (int j = 0; j <= n; ++j) prefix[i][j] = prefix[i - 1][j] + (v <= j ? 1 : 0);
    }
    long long best_num = 0;  // max of | n*|pi(I) cap J| - |I||J| |
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = c; d <= n; ++d) {
                    long long hit = prefix[b][d] - prefix[a - 1][d] - prefix[b][c - 1] +
                                    prefix[a - 1][c - 1];
                    long long val = std::llabs(n * hit -
                                               static_cast<long long>(b - a + 1) * (d - c + 1));
                    best_num = std::max(best_num, val);
                }
    return Rational(best_num, n);
}

OrderedGraph jumbled_matching(int t) {
    if (t < 2 || t % 2 != 0) throw std::invalid_argument("jumbled_matching: t even, t >= 2");
    const int n = t * t;
    std::vector<bool> matched(n + 1, false);
    std::vector<Edge> edges;
    auto lowest_free = [&](int blk) {  // blocks are 1-based, length t
        for (int v = (blk - 1) * t + 1; v <= blk * t; ++v)
            if (!matched[v]) return v;
        return -1;
    };
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j) {
            int a = lowest_free(i), b = lowest_free(j);
            if (a < 0 || b < 0)
                throw std::logic_error("jumbled_matching: ran out of free vertices");
            matched[a] = matched[b] = true;
            edges.emplace_back(a, b);
        }
    // One leftover vertex per block; t is even, pair them consecutively.
    std::vector<int> leftover;
    for (int v = 1; v <= n; ++v)
        if (!matched[v]) leftover.push_back(v);
    for (std::size_t i = 0; i + 1 < leftover.size(); i += 2)
        edges.emplace_back(leftover[i], leftover[i + 1]);
    return OrderedGraph(n, std::move(edges));
}

bool is_jumbled(const OrderedGraph& m) {
    const int n = m.n();
    for (int v = 1; v <= n; ++v)
        if (m.degree(v) != 1) throw std::invalid_argument("is_jumbled: not a perfect matching");
    // cnt[u][v] = # edges (u',v') with u' <= u, v' <= v
    std::vector<std::vector<int>> cnt(n + 1, std::vector<int>(n + 1, 0));
    for (const auto& [u, v] : m.edges()) cnt[u][v] += 1;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            cnt[u][v] += cnt[u - 1][v] + cnt[u][v - 1] - cnt[u - 1][v - 1];
    auto edges_between = [&](int a1, int a2, int b1, int b2) {
        return cnt[a2][b2] - cnt[a1 - 1][b2] - cnt[a2][b1 - 1] + cnt[a1 - 1][b1 - 1];
    };
    const double root = 2.0 * std::sqrt(static_cast<double>(n));
    const int lo = static_cast<int>(std::ceil(root - 1e-9));   // "at least 2 sqrt(n)"
    const int hi = static_cast<int>(std::floor(root + 1e-9));  // "at most 2 sqrt(n)"
    // Long intervals: enough to check length exactly lo (supersets inherit edges).
    if (lo >= 1) {
        for (int a = 1; a + lo - 1 <= n; ++a)
            for (int b = a + lo; b + lo - 1 <= n; ++b)
                if (edges_between(a, a + lo - 1, b, b + lo - 1) == 0) return false;
    }
    // Short intervals: enough to check length exactly hi (subsets have fewer edges).
    if (hi >= 1) {
        for (int a = 1; a + hi - 1 <= n; ++a)
            for (int b = a + hi; b + hi - 1 <= n; ++b)
                if (edges_between(a, a + hi - 1, b, b + hi - 1) > 9) return false;
    }
    return true;
}

OrderedGraph j_k(int k) {
    if (k < 1) throw std::invalid_argument("j_k: k >= 1 required");
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= 2 * k; ++j) edges.emplace_back(i, j);
    return OrderedGraph(2 * k, std::move(edges));
}

TripleSystem tight_path_3(int n) {
    if (n < 3) throw std::invalid_argument("tight_path_3: n >= 3 required");
    TripleSystem ts;
    ts.n = n;
    for (int i = 1; i + 2 <= n; ++i) ts.triples.emplace_back(i, i + 1, i + 2);
    return ts;
}

TripleSystem t_hypergraph(const OrderedGraph& h) {
    TripleSystem ts;
    ts.n = h.n() + 1;
    for (const auto& [i, j] : h.edges())
        for (int k = j + 1; k <= ts.n; ++k) ts.triples.emplace_back(i, j, k);
    std::sort(ts.triples.begin(), ts.triples.end());
    return ts;
}

namespace {

bool triples_embed_rec(const TripleSystem& host, const TripleSystem& hs,
                       std::vector<int>& image, std::vector<bool>& used, std::size_t v) {
    if (v == image.size()) {
        for (const auto& [a, b, c] : hs.triples) {
            int x = image[a - 1], y = image[b - 1], z = image[c - 1];
            if (x > y) std::swap(x, y);
            if (y > z) std::swap(y, z);
            if (x > y) std::swap(x, y);
            if (!std::binary_search(host.triples.begin(), host.triples.end(),
                                    Triple{x, y, z}))
                return false;
        }
        return true;
    }
    for (int u = 1; u <= host.n; ++u) {
        if (used[u]) continue;
        used[u] = true;
        image[v] = u;
        if (triples_embed_rec(host, hs, image, used, v + 1)) return true;
        used[u] = false;
    }
    return false;
}

} // namespace

bool triples_embed(const TripleSystem& host_in, const TripleSystem& hs) {
    if (hs.n > host_in.n) return false;
    TripleSystem host = host_in;
    std::sort(host.triples.begin(), host.triples.end());
    std::vector<int> image(hs.n);
    std::vector<bool> used(host.n + 1, false);
    return triples_embed_rec(host, hs, image, used, 0);
}

std::vector<OrderedGraph> s_family(const TripleSystem& hs, int size_cap) {
    if (hs.n < 1) throw std::invalid_argument("s_family: empty hypergraph");
    const int n = hs.n - 1;
    if (n > size_cap)
        throw std::invalid_argument("s_family: n=" + std::to_string(n) + " exceeds cap");
    std::vector<Edge> pairs;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    std::vector<OrderedGraph> out;
    const uint64_t total = uint64_t(1) << pairs.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1) edges.push_back(pairs[b]);
        OrderedGraph h(n, std::move(edges));
        if (triples_embed(t_hypergraph(h), hs)) out.push_back(std::move(h));
    }
    return out;
}

std::string triples_to_json(const TripleSystem& ts) {
    nlohmann::json j;
    j["n"] = ts.n;
    auto arr = nlohmann::json::array();
    auto sorted = ts.triples;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [a, b, c] : sorted) arr.push_back({a, b, c});
    j["triples"] = arr;
    return j.dump();
}

TripleSystem triples_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    TripleSystem ts;
    ts.n = j.at("n").get<int>();
    for (const auto& t : j.at("triples"))
        ts.triples.emplace_back(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>());
    validate_triples(ts);
    return ts;
}

std::string permutation_to_json(const Permutation& p) {
    nlohmann::json j;
    j["n"] = p.n;
    j["image"] = p.image;
    return j.dump();
}

Permutation permutation_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Permutation p;
    p.n = j.at("n").get<int>();
    p.image = j.at("image").get<std::vector<int>>();
    std::vector<bool> seen(p.n, false);
    for (int v : p.image) {
        if (v < 0 || v >= p.n || seen[v])
            throw std::invalid_argument("permutation: image is not a bijection");
        seen[v] = true;
    }
    return p;
}

} // namespace ordramsey
