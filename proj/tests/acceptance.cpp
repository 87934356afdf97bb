// Acceptance gate: one line per criterion, PASS/FAIL with detail.
// Exit code reflects gating criteria only; stretch items (the P_5 SAT
// attempt, criterion 13) and the mathematically unsatisfiable pipeline of
// criterion 9 are reported honestly but do not gate.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ordramsey/constructions.hpp"
#include "ordramsey/containment.hpp"
#include "ordramsey/embedders.hpp"
#include "ordramsey/generators.hpp"
#include "ordramsey/hypergraph.hpp"
#include "ordramsey/lll.hpp"
#include "ordramsey/solver.hpp"
#include "ordramsey/stats.hpp"

using namespace ordramsey;

namespace {

int g_gating_failures = 0;

class Criterion {
public:
    explicit Criterion(int id, bool gating = true)
        : id_(id), gating_(gating), start_(std::chrono::steady_clock::now()) {}

    void fail(const std::string& why) {
        if (ok_) detail_ = why;
        ok_ = false;
    }
    void note(const std::string& d) { detail_ = d; }
    bool ok() const { return ok_; }

    ~Criterion() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::printf("criterion %d: %s — %s (%.1fs)%s\n", id_, ok_ ? "PASS" : "FAIL",
                    detail_.c_str(), secs, gating_ ? "" : " [non-gating]");
        std::fflush(stdout);
        if (!ok_ && gating_) ++g_gating_failures;
    }

private:
    int id_;
    bool gating_;
    bool ok_ = true;
    std::string detail_;
    std::chrono::steady_clock::time_point start_;
};

EdgeColoring random_coloring(int N, int q, std::mt19937_64& rng) {
    EdgeColoring c(N, q);
    for (int i = 1; i < N; ++i)
        for (int j = i + 1; j <= N; ++j)
            c.set_color(i, j, static_cast<uint8_t>(rng() % q));
    return c;
}

OrderedGraph random_host(int N, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution flip(p);
    std::vector<Edge> edges;
    for (int i = 1; i < N; ++i)
        for (int j = i + 1; j <= N; ++j)
            if (flip(rng)) edges.emplace_back(i, j);
    return OrderedGraph(N, std::move(edges));
}

// Independent re-check of an embedding arm: every pattern edge must map to
// a pair of the claimed color.
bool embedding_has_color(const EitherWitness& w, const EdgeColoring& c) {
    const uint8_t want = w.kind == EitherWitness::Kind::RedEmbedding ? kRed : kBlue;
    if (!w.embedding.valid_shape(c.N())) return false;
    if (w.embedding.pattern_n != w.pattern.n()) return false;
    for (const auto& [a, b] : w.pattern.edges())
        if (c.color(w.embedding.image[a - 1], w.embedding.image[b - 1]) != want) return false;
    return true;
}

long long cross_edge_count(const OrderedGraph& g, const std::vector<int>& a,
                           const std::vector<int>& b) {
    long long e = 0;
    for (int u : a)
        for (int v : b)
            if (g.has_edge(std::min(u, v), std::max(u, v))) ++e;
    return e;
}

std::vector<OrderedGraph> all_patterns_upto4() {
    std::vector<OrderedGraph> out;
    for (int n = 2; n <= 4; ++n) {
        std::vector<Edge> pairs;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
        for (int mask = 1; mask < (1 << pairs.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t b = 0; b < pairs.size(); ++b)
                if (mask >> b & 1) edges.push_back(pairs[b]);
            out.emplace_back(n, std::move(edges));
        }
    }
    return out;
}

// Every pair of disjoint length-t intervals spans an edge of the matching
// (2D difference array over interval-start pairs).
bool has_interval_edge_property(const OrderedGraph& m, int t) {
    const int n = m.n();
    if (2 * t > n) return true;  // vacuous: no two disjoint intervals fit
    std::vector<std::vector<int>> diff(n + 2, std::vector<int>(n + 2, 0));
    for (const auto& [i, j] : m.edges()) {
        const int a_lo = std::max(1, i - t + 1), a_hi = i;
        const int b_lo = std::max(1, j - t + 1), b_hi = j;
        if (a_lo > a_hi || b_lo > b_hi) continue;
        diff[a_lo][b_lo] += 1;
        diff[a_hi + 1][b_lo] -= 1;
        diff[a_lo][b_hi + 1] -= 1;
        diff[a_hi + 1][b_hi + 1] += 1;
    }
    std::vector<int> row(n + 2, 0);
    std::vector<std::vector<int>> cov(n + 2, std::vector<int>(n + 2, 0));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            cov[a][b] = diff[a][b] + cov[a - 1][b] + cov[a][b - 1] - cov[a - 1][b - 1];
    for (int a = 1; a + t - 1 <= n; ++a)
        for (int b = a + t; b + t - 1 <= n; ++b)
            if (cov[a][b] == 0) return false;
    return true;
}

std::string fmt(const Rational& r) {
    std::ostringstream os;
    os << r.num();
    if (r.den() != 1) os << "/" << r.den();
    return os.str();
}

void criterion_1() {
    Criterion cr(1);
    std::ostringstream d;
    for (int n = 2; n <= 4; ++n) {
        const int expect = (n - 1) * (n - 1) + 1;
        auto res = ramsey_number({monotone_path(n), monotone_path(n)});
        if (!res.closed || res.value != expect) {
            cr.fail("r_<(P_" + std::to_string(n) + ") != " + std::to_string(expect));
            return;
        }
        if (expect > 1) {
            if (!res.avoidable_below || !verify_certificate(*res.avoidable_below).ok ||
                !verify_certificate(*res.unavoidable_at).ok) {
                cr.fail("certificate verification failed at n=" + std::to_string(n));
                return;
            }
        }
        d << "P_" << n << "=" << res.value << " ";
    }
    // Stretch (non-gating): n = 5 needs an external SAT solver on the
    // exported CNF; none is available in this environment, so only the
    // export itself is exercised.
    auto cnf = sat_export_text({{monotone_path(5), monotone_path(5)}, 17});
    d << "(verified certs); stretch n=5: CNF exported (" << cnf.size()
      << " bytes), no external SAT solver available — skipped";
    cr.note(d.str());
}

void criterion_2() {
    Criterion cr(2);
    std::ostringstream d;
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            const int expect = (m - 1) * (n - 1) + 1;
            RamseyQuery below{{monotone_path(m), complete(n)}, expect - 1};
            RamseyQuery at{{monotone_path(m), complete(n)}, expect};
            auto cb = decide(below);
            auto ca = decide(at);
            if (cb.unavoidable || !ca.unavoidable ||
                !verify_certificate(cb).ok) {
                cr.fail("r_<(P_" + std::to_string(m) + ",K_" + std::to_string(n) +
                        ") != " + std::to_string(expect));
                return;
            }
        }
    cr.note("r_<(P_m,K_n) = (m-1)(n-1)+1 for all m,n in {2,3,4}");
}

void criterion_3() {
    Criterion cr(3);
    auto res = ramsey_number({complete(3), complete(3)});
    if (!res.closed || res.value != 6)
        cr.fail("r_<(K_3) != 6");
    else
        cr.note("r_<(K_3) = 6");
}

void criterion_4() {
    Criterion cr(4);
    int checked = 0;
    auto run = [&](int n, int q) {
        auto c = es_path_coloring(n, q);
        for (int col = 0; col < q; ++col)
            if (longest_monotone_path(c, col) >= n) {
                cr.fail("monotone P_" + std::to_string(n) + " found in color " +
                        std::to_string(col) + " (q=" + std::to_string(q) + ")");
                return;
            }
        ++checked;
    };
    for (int n = 2; n <= 8 && cr.ok(); ++n) run(n, 2);
    for (int n = 2; n <= 4 && cr.ok(); ++n) run(n, 3);
    if (cr.ok())
        cr.note(std::to_string(checked) + " first-differing-coordinate colorings are P_n-free in every color");
}

void criterion_5() {
    Criterion cr(5);
    auto patterns = all_patterns_upto4();
    long long agreements = 0;
    for (const auto& p : patterns)
        for (int N = 2; N <= 6; ++N) {
            const bool a = decide({{p, p}, N}).unavoidable;
            const bool b = brute_force_oracle({p, p}, N);
            if (a != b) {
                std::ostringstream why;
                why << "disagreement at N=" << N << " on a " << p.n() << "-vertex pattern with "
                    << p.edge_count() << " edges";
                cr.fail(why.str());
                return;
            }
            ++agreements;
        }
    cr.note("decide == brute_force_oracle on all " + std::to_string(agreements) +
            " diagonal queries (patterns on <= 4 vertices, N <= 6)");
}

void criterion_6() {
    Criterion cr(6);
    std::mt19937_64 rng(2026);
    int embeds = 0, sparse = 0;
    auto run_one = [&](const OrderedGraph& h, const Rational& c, int s, int N, double p) {
        auto host = random_host(N, p, rng);
        const int d = degeneracy(h).d;
        const int delta = std::max(1, max_degree(h));
        const int n = h.n();
        EitherWitness w = greedy_embed_or_sparse(host, h, c, s);
        if (w.kind == EitherWitness::Kind::RedEmbedding) {
            if (!w.embedding.valid_shape(N) || !embedding_maps_edges(w.embedding, h, host)) {
                cr.fail("invalid embedding arm");
                return;
            }
            ++embeds;
            return;
        }
        // sparse arm: 2^s ordered sets, sizes >= c^{sd}N/(2^{sd+1} Delta n)^s,
        // pairwise density <= c — recomputed here from scratch
        if (w.sparse.sets.size() != std::size_t(1) << s) {
            cr.fail("sparse arm has the wrong number of sets");
            return;
        }
        Rational bound = c.pow(static_cast<unsigned>(s) * d) * Rational(N) /
                         Rational((1LL << (static_cast<long long>(s) * d + 1)) * delta * n).pow(s);
        int last = 0;
        for (const auto& set : w.sparse.sets) {
            if (set.empty() || Rational(static_cast<long long>(set.size())) < bound) {
                cr.fail("sparse arm set below the size bound");
                return;
            }
            if (set.front() <= last) {
                cr.fail("sparse arm sets are not ordered");
                return;
            }
            last = set.back();
        }
        for (std::size_t i = 0; i < w.sparse.sets.size(); ++i)
            for (std::size_t j = i + 1; j < w.sparse.sets.size(); ++j) {
                long long e = cross_edge_count(host, w.sparse.sets[i], w.sparse.sets[j]);
                long long pairs = static_cast<long long>(w.sparse.sets[i].size()) *
                                  w.sparse.sets[j].size();
                if (Rational(e) > c * Rational(pairs)) {
                    cr.fail("sparse arm pairwise density above c");
                    return;
                }
            }
        ++sparse;
    };
    auto p2 = monotone_path(2);
    auto p3 = monotone_path(3);
    std::uniform_real_distribution<double> dens(0.01, 0.5);
    for (int t = 0; t < 300 && cr.ok(); ++t)
        run_one(p2, Rational(1, 2), 1, 16 + static_cast<int>(rng() % 45), dens(rng));
    for (int t = 0; t < 180 && cr.ok(); ++t)
        run_one(p3, Rational(1, 2), 1, 48 + static_cast<int>(rng() % 33), dens(rng));
    for (int t = 0; t < 20 && cr.ok(); ++t)
        run_one(p2, Rational(1, 2), 2, 1024, dens(rng));
    if (cr.ok()) {
        std::ostringstream d;
        d << "500 instances: " << embeds << " embeddings, " << sparse
          << " sparse partitions, all re-verified";
        cr.note(d.str());
    }
}

void criterion_7() {
    Criterion cr(7);
    std::mt19937_64 rng(77);
    const OrderedGraph crossing(4, {{1, 3}, {2, 4}});

    for (int t = 0; t < 1000 && cr.ok(); ++t) {
        auto c = random_coloring(10, 2, rng);
        auto w = path_vs_clique(c, 4, 4);
        if (!embedding_has_color(w, c)) cr.fail("path_vs_clique witness failed at trial " + std::to_string(t));
        else if (w.kind == EitherWitness::Kind::RedEmbedding && !(w.pattern == monotone_path(4)))
            cr.fail("path_vs_clique red arm is not P_4");
        else if (w.kind == EitherWitness::Kind::BlueEmbedding && !(w.pattern == complete(4)))
            cr.fail("path_vs_clique blue arm is not K_4");
    }
    for (int t = 0; t < 1000 && cr.ok(); ++t) {
        auto c = random_coloring(8, 2, rng);
        auto w = match_vs_multipartite(c, crossing, 2, 2);
        if (!embedding_has_color(w, c))
            cr.fail("match_vs_multipartite witness failed at trial " + std::to_string(t));
        else if (w.kind == EitherWitness::Kind::RedEmbedding && !(w.pattern == crossing))
            cr.fail("match_vs_multipartite red arm is not the matching");
    }
    for (int t = 0; t < 1000 && cr.ok(); ++t) {
        auto c = random_coloring(27, 2, rng);
        auto w = bandwidth_embed(c, OrderedGraph(3, {{1, 2}}), 2);
        if (!embedding_has_color(w, c))
            cr.fail("bandwidth_embed witness failed at trial " + std::to_string(t));
        else if (w.kind == EitherWitness::Kind::BlueEmbedding && !(w.pattern == path_power(3, 2)))
            cr.fail("bandwidth_embed blue arm is not P_3^2");
    }
    // lex-product recursion over the same matching sub-embedder on both sides
    SubEmbedder sub = [&](const EdgeColoring& sc) {
        return match_vs_multipartite(sc, crossing, 2, 2);
    };
    auto blue_g = complete_multipartite_trivial({2, 2});
    for (int t = 0; t < 1000 && cr.ok(); ++t) {
        auto c = random_coloring(64, 2, rng);
        auto w = lex_product_embed(c, crossing, blue_g, blue_g, sub, sub, 8, 8);
        if (!embedding_has_color(w, c))
            cr.fail("lex_product_embed witness failed at trial " + std::to_string(t));
    }
    if (cr.ok())
        cr.note("4000 random colorings across four embedders, every witness re-verified");
}

void criterion_8() {
    Criterion cr(8);
    std::mt19937_64 rng(88);
    for (int t : {3, 4}) {
        const int N = (1 << (t * (t - 1) / 2)) + 1;
        for (int trial = 0; trial < 100 && cr.ok(); ++trial) {
            TripleColoring c(N, 2);
            for (int i = 1; i <= N - 2; ++i)
                for (int j = i + 1; j <= N - 1; ++j)
                    for (int k = j + 1; k <= N; ++k)
                        c.set_color(i, j, k, static_cast<uint8_t>(rng() & 1));
            auto res = erdos_rado_step(c, t);
            if (res.vertices.size() != static_cast<std::size_t>(t + 1)) {
                cr.fail("wrong vertex count at t=" + std::to_string(t));
                break;
            }
            for (int a = 1; a <= t && cr.ok(); ++a)
                for (int b = a + 1; b <= t && cr.ok(); ++b)
                    for (int j = b + 1; j <= t + 1; ++j)
                        if (c.color(res.vertices[a - 1], res.vertices[b - 1],
                                    res.vertices[j - 1]) != res.pair_coloring.color(a, b)) {
                            cr.fail("triple-color property violated at t=" + std::to_string(t));
                            break;
                        }
        }
    }
    if (cr.ok()) cr.note("t=3 (N=9) and t=4 (N=65), 100 colorings each, property exhaustive");
}

void criterion_9() {
    // This pipeline asks for a 20-vertex coloring with no blue
    // triangle and no red K_6. The classical Ramsey number R(3,6) = 18
    // means every 2-coloring of 18 or more vertices contains one of the
    // two, so no satisfying coloring exists and resampling cannot
    // converge. The run below is faithful (10 seeds, capped); the honest
    // outcome is FAIL and the criterion does not gate the exit code.
    Criterion cr(9, /*gating=*/false);
    BadEventFamily spec;
    spec.vertex_count = 20;
    spec.red_clique_order = 6;
    spec.red_family = {OrderedGraph(4, {{1, 3}, {2, 4}}),
                       OrderedGraph(6, {{1, 4}, {2, 5}, {3, 6}})};
    spec.p_blue = Rational(1, 4);
    int converged = 0, capped = 0;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        spec.seed = seed;
        try {
            auto c = moser_tardos_coloring(spec, nullptr, 100000);
            ++converged;
            // Faithful continuation, reachable only if a coloring appeared:
            auto big = offdiagonal_assembly(c, 4);
            if (find_monochromatic_copy(big, kBlue, complete(3))) {
                cr.fail("assembly contains a blue triangle");
                return;
            }
            auto jm = jumbled_matching(2);
            std::vector<int> h_emb;
            for (int i = 1; i <= jm.n(); ++i) h_emb.push_back(i);
            auto spread = spread_ordering(12, jm.edges(), jm, h_emb);
            if (find_monochromatic_copy(big, kRed, spread)) {
                cr.fail("assembly contains a red spread target");
                return;
            }
        } catch (const std::runtime_error&) {
            ++capped;
        }
    }
    if (converged < 10) {
        std::ostringstream why;
        why << capped << "/10 seeds hit the resample cap; the target is unsatisfiable: "
            << "R(3,6) = 18 <= 20, so no 20-vertex coloring avoids both a blue "
            << "triangle and a red K_6";
        cr.fail(why.str());
    } else {
        cr.note("all 10 seeds converged and the assemblies verified");
    }
}

void criterion_10() {
    Criterion cr(10);
    for (int t = 2; t <= 10; t += 2)
        if (!is_jumbled(jumbled_matching(t))) {
            cr.fail("jumbled_matching(" + std::to_string(t) + ") is not jumbled");
            return;
        }
    const int n = 1024, trials = 500;
    // threshold 4*sqrt(n log n), base-2 log, rounded up to even
    int t = static_cast<int>(std::ceil(4.0 * std::sqrt(n * std::log2(double(n)))));
    if (t % 2) ++t;
    int good = 0;
    for (int trial = 0; trial < trials; ++trial)
        if (has_interval_edge_property(random_matching(n, 9000 + trial), t)) ++good;
    const double frac = double(good) / trials;
    std::ostringstream d;
    d << "jumbled_matching(2..10) all jumbled; random matchings at n=1024: " << good << "/"
      << trials << " = " << frac << " have the interval-edge property (threshold " << t << ")";
    if (frac < 0.95)
        cr.fail(d.str() + " — below the 0.95 empirical gate");
    else
        cr.note(d.str());
}

void criterion_11() {
    Criterion cr(11);
    std::vector<Rational> ratios;
    for (int h = 2; h <= 7; ++h)
        ratios.push_back(interval_discrepancy(vdc_permutation(h)) / Rational(h));
    Rational max_ratio = ratios[0];
    for (const auto& r : ratios)
        if (r > max_ratio) max_ratio = r;
    const Rational gate = Rational(2) * ratios[2];  // ratio at h = 4
    std::ostringstream d;
    d << "bit-reversal discrepancy/log2(n) for n=4..128: max " << fmt(max_ratio)
      << ", stability gate 2*(ratio at h=4) = " << fmt(gate);
    if (max_ratio > gate)
        cr.fail(d.str() + " — exceeded");
    else
        cr.note(d.str());
}

void criterion_12() {
    Criterion cr(12);
    TripleSystem k43{4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};
    auto fam = s_family(k43);
    if (fam.size() != 1 || !(fam[0] == complete(3))) {
        cr.fail("full 4-vertex triple system did not yield exactly {K_3}");
        return;
    }
    TripleSystem minus{4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}};
    auto fam2 = s_family(minus);
    std::vector<OrderedGraph> want = {complete(3), OrderedGraph(3, {{1, 2}, {1, 3}}),
                                      OrderedGraph(3, {{1, 2}, {2, 3}})};
    bool match = fam2.size() == want.size();
    for (const auto& w : want) {
        bool found = false;
        for (const auto& g : fam2) found = found || g == w;
        match = match && found;
    }
    if (!match)
        cr.fail("one-triple-removed system did not yield the three expected graphs");
    else
        cr.note("both worked stepping-up examples reproduced exactly");
}

void criterion_13() {
    Criterion cr(13, /*gating=*/false);
    auto p = tight_path_3(4);
    auto at6 = ramsey3_decide({p, p}, 6);
    if (at6.unavoidable) {
        cr.fail("tight path unexpectedly unavoidable at N=6");
        return;
    }
    bool witness_ok = at6.witness.has_value();
    for (int col = 0; col < 2 && witness_ok; ++col)
        witness_ok = !find_mono_triple_copy(*at6.witness, col, p);
    if (!witness_ok) {
        cr.fail("avoiding witness at N=6 failed re-verification");
        return;
    }
    auto at7 = ramsey3_decide({p, p}, 7);
    if (!at7.unavoidable)
        cr.fail("tight path not unavoidable at N=7");
    else
        cr.note("r_<(tight P^(3)_4) = 7: avoidable at 6 (verified witness), unavoidable at 7");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    std::printf("%s: %d gating failure(s)\n", g_gating_failures ? "RED" : "GREEN",
                g_gating_failures);
    return g_gating_failures ? 1 : 0;
}
