#include <doctest.h>

#include "ordramsey/containment.hpp"
#include "ordramsey/generators.hpp"
#include "ordramsey/lll.hpp"

using namespace ordramsey;

TEST_CASE("resampling terminates on satisfiable instances and re-verifies") {
    BadEventFamily spec;
    spec.vertex_count = 8;
    spec.red_clique_order = 4;   // below the two-color Ramsey bound for (3,4)
    spec.p_blue = Rational(1, 4);
    spec.seed = 3;
    ResampleStats stats;
    auto c = moser_tardos_coloring(spec, &stats);
    CHECK(c.N() == 8);
    CHECK(!find_monochromatic_copy(c, kBlue, complete(3)));
    CHECK(!find_monochromatic_copy(c, kRed, complete(4)));
    CHECK(stats.resamples == stats.blue_triangle_hits + stats.red_family_hits +
                                 stats.red_clique_hits);
}

TEST_CASE("red family events are resampled too") {
    BadEventFamily spec;
    spec.vertex_count = 6;
    spec.red_clique_order = 6;
    spec.red_family = {OrderedGraph(4, {{1, 3}, {2, 4}})};
    spec.p_blue = Rational(1, 2);
    spec.seed = 11;
    auto c = moser_tardos_coloring(spec, nullptr);
    CHECK(!find_monochromatic_copy(c, kBlue, complete(3)));
    CHECK(!find_monochromatic_copy(c, kRed, spec.red_family[0]));
}

TEST_CASE("same seed, same coloring; different seed, usually different") {
    BadEventFamily spec;
    spec.vertex_count = 8;
    spec.red_clique_order = 4;
    spec.p_blue = Rational(1, 4);
    spec.seed = 5;
    auto a = moser_tardos_coloring(spec);
    auto b = moser_tardos_coloring(spec);
    CHECK(a == b);
    spec.seed = 6;
    auto c = moser_tardos_coloring(spec);
    CHECK(!(a == c));
}

TEST_CASE("the resample cap aborts with per-class counts in the message") {
    BadEventFamily spec;
    spec.vertex_count = 9;          // at the (3,4) Ramsey bound: unsatisfiable
    spec.red_clique_order = 4;
    spec.p_blue = Rational(1, 4);
    spec.seed = 1;
    ResampleStats stats;
    CHECK_THROWS_WITH_AS(moser_tardos_coloring(spec, &stats, 2000),
                         doctest::Contains("resample cap"), std::runtime_error);
    CHECK(stats.resamples == 2000);
}

TEST_CASE("parameter validation") {
    BadEventFamily spec;
    spec.vertex_count = 0;
    CHECK_THROWS(moser_tardos_coloring(spec));
    spec.vertex_count = 4;
    spec.p_blue = Rational(0);
    CHECK_THROWS(moser_tardos_coloring(spec));
    spec.p_blue = Rational(3, 2);
    CHECK_THROWS(moser_tardos_coloring(spec));
}
