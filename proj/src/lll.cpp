#include "ordramsey/lll.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "ordramsey/containment.hpp"
#include "ordramsey/generators.hpp"

namespace ordramsey {

namespace {

// exact threshold test: draw < p * 2^64
bool draw_blue(std::mt19937_64& rng, const Rational& p) {
    const uint64_t u = rng();
    return static_cast<unsigned __int128>(u) * static_cast<unsigned __int128>(p.den()) <
           static_cast<unsigned __int128>(p.num()) << 64;
}

} // namespace

EdgeColoring moser_tardos_coloring(const BadEventFamily& spec, ResampleStats* stats,
                                   long long resample_cap) {
    const int N = spec.vertex_count;
    if (N < 1) throw std::invalid_argument("moser_tardos_coloring: vertex_count >= 1 required");
    if (spec.red_clique_order < 2)
        throw std::invalid_argument("moser_tardos_coloring: red_clique_order >= 2 required");
    if (spec.p_blue <= Rational(0) || spec.p_blue > Rational(1))
        throw std::invalid_argument("moser_tardos_coloring: p_blue must lie in (0,1]");

    std::mt19937_64 rng(spec.seed);
    EdgeColoring c(N, 2);
    for (int i = 1; i < N; ++i)
        for (int j = i + 1; j <= N; ++j)
            c.set_color(i, j, draw_blue(rng, spec.p_blue) ? kBlue : kRed);

    const OrderedGraph triangle = complete(3);
    const OrderedGraph clique = complete(spec.red_clique_order);
    ResampleStats local;
    while (true) {
        const OrderedGraph red = c.color_class(kRed);
        const OrderedGraph blue = c.color_class(kBlue);
        // lowest violated event: blue triangles, then red family copies in
        // member order, then red cliques; each search is lex-first
        std::optional<Embedding> hit;
        const OrderedGraph* pattern = nullptr;
        long long* counter = nullptr;
        if (spec.blue_triangle) {
            hit = find_ordered_copy(blue, triangle);
            if (hit) {
                pattern = &triangle;
                counter = &local.blue_triangle_hits;
            }
        }
        if (!hit)
            for (const auto& h : spec.red_family) {
                hit = find_ordered_copy(red, h);
                if (hit) {
                    pattern = &h;
                    counter = &local.red_family_hits;
                    break;
                }
            }
        if (!hit) {
            hit = find_ordered_copy(red, clique);
            if (hit) {
                pattern = &clique;
                counter = &local.red_clique_hits;
            }
        }
        if (!hit) break;
        if (local.resamples >= resample_cap) {
            if (stats) *stats = local;
            throw std::runtime_error(
                "moser_tardos_coloring: resample cap " + std::to_string(resample_cap) +
                " exceeded (blue_triangle=" + std::to_string(local.blue_triangle_hits) +
                ", red_family=" + std::to_string(local.red_family_hits) +
                ", red_clique=" + std::to_string(local.red_clique_hits) + ")");
        }
        ++local.resamples;
        ++*counter;
        for (const auto& [a, b] : pattern->edges())
            c.set_color(hit->image[a - 1], hit->image[b - 1],
                        draw_blue(rng, spec.p_blue) ? kBlue : kRed);
    }

    // independent final scans
    if (spec.blue_triangle && find_monochromatic_copy(c, kBlue, triangle))
        throw std::logic_error("moser_tardos_coloring: blue triangle survived");
    for (const auto& h : spec.red_family)
        if (find_monochromatic_copy(c, kRed, h))
            throw std::logic_error("moser_tardos_coloring: red family copy survived");
    if (find_monochromatic_copy(c, kRed, clique))
        throw std::logic_error("moser_tardos_coloring: red clique survived");
    if (stats) *stats = local;
    return c;
}

} // namespace ordramsey
