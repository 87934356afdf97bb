#include <doctest.h>

#include <random>

#include "ordramsey/generators.hpp"
#include "ordramsey/hypergraph.hpp"

using namespace ordramsey;

namespace {

TripleColoring random_triples(int N, int q, std::mt19937_64& rng) {
    TripleColoring c(N, q);
    for (int i = 1; i <= N - 2; ++i)
        for (int j = i + 1; j <= N - 1; ++j)
            for (int k = j + 1; k <= N; ++k)
                c.set_color(i, j, k, static_cast<uint8_t>(rng() % q));
    return c;
}

} // namespace

TEST_CASE("triple index enumerates the lexicographic triples") {
    const int N = 8;
    std::size_t expect = 0;
    for (int i = 1; i <= N - 2; ++i)
        for (int j = i + 1; j <= N - 1; ++j)
            for (int k = j + 1; k <= N; ++k)
                CHECK(TripleColoring::triple_index(i, j, k, N) == expect++);
    CHECK(expect == 56);  // C(8,3)
    CHECK_THROWS(TripleColoring::triple_index(2, 2, 3, 8));
}

TEST_CASE("cup-cap coloring by exact orientation") {
    // four points on the parabola y = x^2: every triple is a cup
    std::vector<Point> parabola;
    for (int x = 1; x <= 4; ++x) parabola.push_back({Rational(x), Rational(x * x)});
    auto cups = capcup_coloring(parabola);
    for (int i = 1; i <= 2; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = j + 1; k <= 4; ++k) CHECK(cups.color(i, j, k) == kRed);
    // negated parabola: caps
    std::vector<Point> caps_pts;
    for (int x = 1; x <= 4; ++x) caps_pts.push_back({Rational(x), Rational(-x * x)});
    CHECK(capcup_coloring(caps_pts).color(1, 2, 4) == kBlue);
    // collinear and duplicate-x inputs are rejected
    CHECK_THROWS(capcup_coloring({{Rational(1), Rational(1)},
                                  {Rational(2), Rational(2)},
                                  {Rational(3), Rational(3)}}));
    CHECK_THROWS(capcup_coloring({{Rational(1), Rational(1)},
                                  {Rational(1), Rational(2)},
                                  {Rational(3), Rational(3)}}));
}

TEST_CASE("points_from_csv parses rational coordinates") {
    auto pts = points_from_csv("1,2\n1/2, 3/4\n\n-5,7/2\n");
    REQUIRE(pts.size() == 3);
    CHECK(pts[1].x == Rational(1, 2));
    CHECK(pts[1].y == Rational(3, 4));
    CHECK(pts[2].x == Rational(-5));
    CHECK_THROWS(points_from_csv("1;2\n"));
}

TEST_CASE("monochromatic tight path detection matches a brute-force scan") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        const int N = 4 + static_cast<int>(rng() % 4);
        auto c = random_triples(N, 2, rng);
        for (int n = 3; n <= N; ++n) {
            auto phi = find_monochromatic_tight_path(c, n);
            // oracle: try all increasing n-subsets in both colors
            bool exists = false;
            std::vector<int> idx(n);
            for (int i = 0; i < n; ++i) idx[i] = i + 1;
            while (!exists) {
                for (int col = 0; col < 2 && !exists; ++col) {
                    bool ok = true;
                    for (int i = 0; i + 2 < n; ++i)
                        if (c.color(idx[i], idx[i + 1], idx[i + 2]) != col) {
                            ok = false;
                            break;
                        }
                    exists = ok;
                }
                if (exists) break;
                int i = n - 1;
                while (i >= 0 && idx[i] == N - (n - 1 - i)) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
            }
            CHECK(phi.has_value() == exists);
            if (phi) {
                uint8_t col = c.color(phi->image[0], phi->image[1], phi->image[2]);
                for (int i = 0; i + 2 < n; ++i)
                    CHECK(c.color(phi->image[i], phi->image[i + 1], phi->image[i + 2]) == col);
            }
        }
    }
}

TEST_CASE("cup-cap coloring of a parabola has a long monochromatic tight path") {
    std::vector<Point> parabola;
    for (int x = 1; x <= 6; ++x) parabola.push_back({Rational(x), Rational(x * x)});
    auto c = capcup_coloring(parabola);
    auto phi = find_monochromatic_tight_path(c, 6);
    REQUIRE(phi.has_value());
}

TEST_CASE("pair-coloring extraction satisfies the quantified triple property") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        const int t = 3;
        const int N = 9 + static_cast<int>(rng() % 4);  // >= 2^C(3,2)+1 = 9
        auto c = random_triples(N, 2, rng);
        auto res = erdos_rado_step(c, t);
        REQUIRE(res.vertices.size() == t + 1);
        for (std::size_t i = 1; i < res.vertices.size(); ++i)
            CHECK(res.vertices[i - 1] < res.vertices[i]);
        for (int a = 1; a <= t; ++a)
            for (int b = a + 1; b <= t; ++b)
                for (int j = b + 1; j <= t + 1; ++j)
                    CHECK(c.color(res.vertices[a - 1], res.vertices[b - 1],
                                  res.vertices[j - 1]) == res.pair_coloring.color(a, b));
    }
    CHECK_THROWS(erdos_rado_step(random_triples(8, 2, rng), 3));  // below 2^C(t,2)+1
}

TEST_CASE("triple containment search verifies against enumeration") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        const int N = 5 + static_cast<int>(rng() % 2);
        auto c = random_triples(N, 2, rng);
        auto pat = tight_path_3(4);
        for (int col = 0; col < 2; ++col) {
            auto phi = find_mono_triple_copy(c, col, pat);
            bool exists = false;
            for (int a = 1; a <= N && !exists; ++a)
                for (int b = a + 1; b <= N && !exists; ++b)
                    for (int d = b + 1; d <= N && !exists; ++d)
                        for (int e = d + 1; e <= N && !exists; ++e)
                            exists = c.color(a, b, d) == col && c.color(b, d, e) == col;
            CHECK(phi.has_value() == exists);
            if (phi) {
                CHECK(c.color(phi->image[0], phi->image[1], phi->image[2]) == col);
                CHECK(c.color(phi->image[1], phi->image[2], phi->image[3]) == col);
            }
        }
    }
}

TEST_CASE("triple Ramsey decision on tiny instances") {
    auto single = tight_path_3(3);  // one triple: unavoidable as soon as a triple exists
    Ramsey3Result r = ramsey3_decide({single, single}, 3);
    CHECK(r.unavoidable);
    auto p4 = tight_path_3(4);
    Ramsey3Result r2 = ramsey3_decide({p4, p4}, 4);
    CHECK(!r2.unavoidable);
    REQUIRE(r2.witness.has_value());
    for (int col = 0; col < 2; ++col)
        CHECK(!find_mono_triple_copy(*r2.witness, col, p4));
    // cap is enforced
    CHECK_THROWS(ramsey3_decide({p4, p4}, 11));
}

TEST_CASE("triple coloring JSON round-trip") {
    std::mt19937_64 rng(79);
    auto c = random_triples(6, 3, rng);
    auto back = triple_coloring_from_json(triple_coloring_to_json(c));
    CHECK(back.N() == c.N());
    CHECK(back.q() == c.q());
    CHECK(back.colors() == c.colors());
}
