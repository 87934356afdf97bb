#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "ordramsey/generators.hpp"
#include "ordramsey/stats.hpp"

using namespace ordramsey;

namespace {

bool is_perfect_matching(const OrderedGraph& g) {
    std::set<int> seen;
    for (const auto& [u, v] : g.edges()) {
        seen.insert(u);
        seen.insert(v);
    }
    return static_cast<int>(seen.size()) == g.n() &&
           g.edge_count() * 2 == g.n();
}

// direct evaluation of the interval discrepancy definition
Rational discrepancy_oracle(const Permutation& p) {
    const int n = p.n;
    Rational best(0);
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = c; d <= n; ++d) {
                    long long hit = 0;
                    for (int i = a; i <= b; ++i) {
                        const int img = p.image[i - 1] + 1;
                        if (c <= img && img <= d) ++hit;
                    }
                    Rational dev = Rational(hit) -
                                   Rational(static_cast<long long>(b - a + 1) * (d - c + 1), n);
                    if (dev.sign() < 0) dev = -dev;
                    if (dev > best) best = dev;
                }
    return best;
}

} // namespace

TEST_CASE("deterministic pattern generators") {
    CHECK(monotone_path(4).edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(path_power(5, 2).edges() ==
          std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(complete(4).edge_count() == 6);
    CHECK(path_power(4, 3) == complete(4));
    CHECK(monotone_path(1).edge_count() == 0);
    auto m = complete_multipartite_trivial({2, 2});
    CHECK(m.edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(j_k(2) == m);
    CHECK(interval_chromatic(j_k(3)) == 2);
}

TEST_CASE("random matching is uniform-ish, perfect, and reproducible") {
    CHECK(random_matching(6, 99) == random_matching(6, 99));
    std::map<std::vector<Edge>, int> counts;
    for (uint64_t s = 0; s < 300; ++s) {
        auto g = random_matching(4, s);
        CHECK(is_perfect_matching(g));
        counts[g.edges()]++;
    }
    CHECK(counts.size() == 3);  // the three matchings on four vertices
    for (const auto& [k, c] : counts) CHECK(c > 60);  // 100 expected each
    CHECK_THROWS(random_matching(5, 0));
}

TEST_CASE("bit-reversal permutation and its matching") {
    auto p = vdc_permutation(2);
    CHECK(p.image == std::vector<int>{0, 2, 1, 3});
    auto p3 = vdc_permutation(3);
    CHECK(p3.image == std::vector<int>{0, 4, 2, 6, 1, 5, 3, 7});
    auto m = vdc_matching(2);
    CHECK(is_perfect_matching(m));
    CHECK(interval_chromatic(m) == 2);
    // i is matched with n + pi(i)
    for (int i = 1; i <= 4; ++i) CHECK(m.has_edge(i, 4 + p.image[i - 1] + 1));
}

TEST_CASE("interval discrepancy agrees with the definitional oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        Permutation p;
        p.n = n;
        p.image.resize(n);
        for (int i = 0; i < n; ++i) p.image[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(p.image[i], p.image[rng() % (i + 1)]);
        CHECK(interval_discrepancy(p) == discrepancy_oracle(p));
    }
    CHECK(interval_discrepancy(vdc_permutation(1)) == Rational(1, 2));
}

TEST_CASE("jumbled matchings satisfy both interval properties") {
    for (int t : {2, 4, 6}) {
        auto m = jumbled_matching(t);
        CHECK(m.n() == t * t);
        CHECK(is_perfect_matching(m));
        CHECK(is_jumbled(m));
    }
    CHECK_THROWS(jumbled_matching(3));  // t*t vertices must be even
    // consecutive pairing never crosses long disjoint intervals
    std::vector<Edge> consecutive;
    for (int i = 1; i <= 36; i += 2) consecutive.emplace_back(i, i + 1);
    CHECK(!is_jumbled(OrderedGraph(36, std::move(consecutive))));
    CHECK_THROWS(is_jumbled(monotone_path(4)));  // not a perfect matching
}

TEST_CASE("triple systems: tight paths and the stepping-up hypergraph") {
    auto tp = tight_path_3(5);
    CHECK(tp.triples == std::vector<Triple>{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
    CHECK(tight_path_3(3).triples.size() == 1);

    auto t = t_hypergraph(monotone_path(3));
    CHECK(t.n == 4);
    CHECK(t.triples == std::vector<Triple>{{1, 2, 3}, {1, 2, 4}, {2, 3, 4}});

    TripleSystem bad;
    bad.n = 3;
    bad.triples = {{1, 3, 2}};
    CHECK_THROWS(validate_triples(bad));
}

TEST_CASE("triples_embed finds injections mapping triples to triples") {
    auto host = t_hypergraph(complete(3));  // all four triples on [4]
    TripleSystem one;
    one.n = 3;
    one.triples = {{1, 2, 3}};
    CHECK(triples_embed(host, one));
    TripleSystem five;
    five.n = 5;
    five.triples = {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}};
    CHECK(!triples_embed(host, five));
}

TEST_CASE("stepping-up family reproduces the worked examples") {
    TripleSystem k43;  // all triples on four vertices
    k43.n = 4;
    k43.triples = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    auto fam = s_family(k43);
    REQUIRE(fam.size() == 1);
    CHECK(fam[0] == complete(3));

    TripleSystem k43e = k43;  // drop the last triple
    k43e.triples.pop_back();
    auto fam2 = s_family(k43e);
    REQUIRE(fam2.size() == 3);
    std::set<std::vector<Edge>> got;
    for (const auto& g : fam2) got.insert(g.edges());
    CHECK(got.count({{1, 2}, {1, 3}, {2, 3}}));
    CHECK(got.count({{1, 2}, {1, 3}}));
    CHECK(got.count({{1, 2}, {2, 3}}));
}

TEST_CASE("triple system and permutation JSON round-trip") {
    auto tp = tight_path_3(6);
    auto back = triples_from_json(triples_to_json(tp));
    CHECK(back.n == tp.n);
    CHECK(back.triples == tp.triples);
    auto p = vdc_permutation(3);
    auto pb = permutation_from_json(permutation_to_json(p));
    CHECK(pb.n == p.n);
    CHECK(pb.image == p.image);
}
