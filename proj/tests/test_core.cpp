#include <doctest.h>

#include <algorithm>
#include <random>

#include "ordramsey/coloring.hpp"
#include "ordramsey/containment.hpp"
#include "ordramsey/generators.hpp"
#include "ordramsey/graph.hpp"
#include "ordramsey/rational.hpp"
#include "ordramsey/stats.hpp"

using namespace ordramsey;

namespace {

OrderedGraph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (std::uniform_real_distribution<>(0, 1)(rng) < p) edges.emplace_back(i, j);
    return OrderedGraph(n, std::move(edges));
}

// independent oracle: try every increasing injection explicitly
bool contains_by_enumeration(const OrderedGraph& host, const OrderedGraph& pat) {
    const int n = host.n(), p = pat.n();
    if (p > n) return false;
    std::vector<int> idx(p);
    for (int i = 0; i < p; ++i) idx[i] = i + 1;
    while (true) {
        bool ok = true;
        for (const auto& [a, b] : pat.edges())
            if (!host.has_edge(idx[a - 1], idx[b - 1])) { ok = false; break; }
        if (ok) return true;
        // next combination
        int i = p - 1;
        while (i >= 0 && idx[i] == n - (p - 1 - i)) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2).num() == -1);
    CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(1, 2).pow(3) == Rational(1, 8));
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1LL << 62, 1) * Rational(1LL << 62, 1));
}

TEST_CASE("graph validation names the first violation") {
    CHECK_THROWS_AS(OrderedGraph(3, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(3, {{3, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(3, {{1, 2}, {1, 2}}), std::invalid_argument);
    OrderedGraph g(4, {{2, 4}, {1, 2}});
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 4}});
    CHECK(g.has_edge(2, 4));
    CHECK(g.has_edge(4, 2));
    CHECK(!g.has_edge(1, 3));
    CHECK(g.neighbors(2) == std::vector<int>{1, 4});
    CHECK(g.degree(2) == 2);
}

TEST_CASE("pair index covers the row-major upper triangle") {
    const int N = 9;
    std::size_t expect = 0;
    for (int i = 1; i < N; ++i)
        for (int j = i + 1; j <= N; ++j) CHECK(EdgeColoring::pair_index(i, j, N) == expect++);
    CHECK(expect == std::size_t(N) * (N - 1) / 2);
}

TEST_CASE("containment agrees with plain enumeration") {
    std::mt19937_64 rng(42);
    int found = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);   // host 4..7
        const int p = 2 + static_cast<int>(rng() % 3);   // pattern 2..4
        auto host = random_graph(n, 0.5, rng);
        auto pat = random_graph(p, 0.6, rng);
        auto phi = find_ordered_copy(host, pat);
        CHECK(phi.has_value() == contains_by_enumeration(host, pat));
        if (phi) {
            ++found;
            CHECK(phi->valid_shape(host.n()));
            CHECK(embedding_maps_edges(*phi, pat, host));
        }
    }
    CHECK(found > 50);  // the sample actually exercises both outcomes
}

TEST_CASE("find_ordered_copy returns the lexicographically first image") {
    OrderedGraph host(5, {{1, 3}, {2, 4}, {2, 5}, {3, 5}});
    auto phi = find_ordered_copy(host, OrderedGraph(2, {{1, 2}}));
    REQUIRE(phi.has_value());
    CHECK(phi->image == std::vector<int>{1, 3});
}

TEST_CASE("longest monotone path matches containment of monotone paths") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int N = 3 + static_cast<int>(rng() % 5);
        EdgeColoring c(N, 2);
        for (int i = 1; i < N; ++i)
            for (int j = i + 1; j <= N; ++j)
                c.set_color(i, j, static_cast<uint8_t>(rng() & 1));
        for (int col = 0; col < 2; ++col) {
            const int L = longest_monotone_path(c, col);
            CHECK(find_monochromatic_copy(c, col, monotone_path(L)).has_value());
            if (L < N)
                CHECK(!find_monochromatic_copy(c, col, monotone_path(L + 1)).has_value());
        }
    }
}

TEST_CASE("interval chromatic number equals the brute-force minimum") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        auto g = random_graph(n, 0.4, rng);
        // minimum over all 2^(n-1) interval partitions
        int best = n;
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            int parts = 1, start = 1;
            bool ok = true;
            for (int v = 2; v <= n && ok; ++v) {
                if (mask >> (v - 2) & 1) {
                    ++parts;
                    start = v;
                } else {
                    for (int u = start; u < v; ++u)
                        if (g.has_edge(u, v)) { ok = false; break; }
                }
            }
            if (ok) best = std::min(best, parts);
        }
        CHECK(interval_chromatic(g) == best);
    }
}

TEST_CASE("degeneracy equals the minimum over all orderings of the max back-degree") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto g = random_graph(n, 0.5, rng);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i + 1;
        int best = n;
        do {
            std::vector<int> position(n + 1);
            for (int i = 0; i < n; ++i) position[perm[i]] = i;
            int worst = 0;
            for (int i = 0; i < n; ++i) {
                int back = 0;
                for (int u : g.neighbors(perm[i]))
                    if (position[u] < i) ++back;
                worst = std::max(worst, back);
            }
            best = std::min(best, worst);
        } while (std::next_permutation(perm.begin(), perm.end()));
        auto res = degeneracy(g);
        CHECK(res.d == best);
        // the returned ordering achieves the bound
        std::vector<int> position(n + 1);
        for (int i = 0; i < n; ++i) position[res.ordering[i]] = i;
        for (int i = 0; i < n; ++i) {
            int back = 0;
            for (int u : g.neighbors(res.ordering[i]))
                if (position[u] < i) ++back;
            CHECK(back <= res.d);
        }
    }
}

TEST_CASE("cover number equals the minimum over all vertex subsets") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        auto g = random_graph(n, 0.4, rng);
        int best = n;
        for (int mask = 0; mask < (1 << n); ++mask) {
            bool covers = true;
            for (const auto& [i, j] : g.edges())
                if (!(mask >> (i - 1) & 1) && !(mask >> (j - 1) & 1)) {
                    covers = false;
                    break;
                }
            if (covers) best = std::min(best, __builtin_popcount(mask));
        }
        CHECK(cover_number(g) == best);
    }
}

TEST_CASE("maximum matching equals the brute-force optimum over edge subsets") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        auto g = random_graph(n, 0.5, rng);
        const auto& es = g.edges();
        const int m = static_cast<int>(es.size());
        int best = 0;
        for (int mask = 0; mask < (1 << m); ++mask) {
            int used = 0;
            bool ok = true;
            for (int b = 0; b < m && ok; ++b) {
                if (!(mask >> b & 1)) continue;
                const auto& [i, j] = es[b];
                if (used >> i & 1 || used >> j & 1) ok = false;
                used |= (1 << i) | (1 << j);
            }
            if (ok) best = std::max(best, __builtin_popcount(mask));
        }
        CHECK(max_matching_size(g) == best);
    }
}

TEST_CASE("bandwidth and max degree on known graphs") {
    CHECK(bandwidth(monotone_path(5)) == 1);
    CHECK(bandwidth(path_power(6, 3)) == 3);
    CHECK(max_degree(complete(5)) == 4);
    CHECK(interval_chromatic(complete_multipartite_trivial({2, 3, 2})) == 3);
    CHECK(cover_number(complete(5)) == 4);
    CHECK(graph_stats(monotone_path(4)).degeneracy == 1);
}

TEST_CASE("graph and coloring JSON round-trip") {
    std::mt19937_64 rng(23);
    auto g = random_graph(7, 0.5, rng);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    EdgeColoring c(6, 3);
    for (int i = 1; i < 6; ++i)
        for (int j = i + 1; j <= 6; ++j) c.set_color(i, j, static_cast<uint8_t>(rng() % 3));
    CHECK(coloring_from_json(coloring_to_json(c)) == c);
    CHECK_THROWS(coloring_from_json("{\"N\":3,\"q\":2,\"colors\":[0,1]}"));
}

TEST_CASE("color classes partition the pairs") {
    EdgeColoring c(5, 2);
    c.set_color(1, 4, kBlue);
    c.set_color(2, 3, kBlue);
    auto red = c.color_class(kRed);
    auto blue = c.color_class(kBlue);
    CHECK(red.edge_count() + blue.edge_count() == 10);
    CHECK(blue.edges() == std::vector<Edge>{{1, 4}, {2, 3}});
}
