#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordramsey/coloring.hpp"
#include "ordramsey/generators.hpp"
#include "ordramsey/graph.hpp"
#include "ordramsey/rational.hpp"

namespace ordramsey {

// Total q-coloring of all increasing triples of {1..N}, lexicographic order.
class TripleColoring {
public:
    TripleColoring() : N_(0), q_(2) {}
    TripleColoring(int N, int q, uint8_t fill = 0);
    TripleColoring(int N, int q, std::vector<uint8_t> colors);

    int N() const { return N_; }
    int q() const { return q_; }
    const std::vector<uint8_t>& colors() const { return colors_; }

    static std::size_t triple_index(int i, int j, int k, int N);

    uint8_t color(int i, int j, int k) const { return colors_[triple_index(i, j, k, N_)]; }
    void set_color(int i, int j, int k, uint8_t c) { colors_[triple_index(i, j, k, N_)] = c; }

    TripleSystem color_class(int c) const;

private:
    int N_;
    int q_;
    std::vector<uint8_t> colors_;
};

struct Point {
    Rational x;
    Rational y;
};

// CSV lines "x,y" with rational coordinates written as "p/q" or integers.
std::vector<Point> points_from_csv(const std::string& text);

// Cup/cap 2-coloring by exact orientation: color 0 (red) for cups, color 1
// (blue) for caps. Throws on duplicate x or collinear triples.
TripleColoring capcup_coloring(const std::vector<Point>& points);

// Embedding of the monotone tight path P^(3)_n into one color class, via
// the DP over (last two vertices) per color.
std::optional<Embedding> find_monochromatic_tight_path(const TripleColoring& c, int n);

struct ErdosRadoResult {
    std::vector<int> vertices;      // v_1 < ... < v_{t+1}
    EdgeColoring pair_coloring;     // chi on [t]
};

// Erdos-Rado extraction: increasing vertices v_1..v_{t+1} and a pair
// coloring chi such that every triple {v_i, v_j, w} with w a later sequence
// vertex has color chi(i,j). Requires N >= 2^C(t,2) + 1.
ErdosRadoResult erdos_rado_step(const TripleColoring& c, int t);

inline constexpr int kDefaultRamsey3Cap = 10;

struct Ramsey3Result {
    bool unavoidable = false;
    std::optional<TripleColoring> witness;  // avoiding coloring when avoidable
};

// Exhaustive backtracking over triples in lexicographic order; targets[c]
// is the pattern that must be avoided monochromatically in color c.
Ramsey3Result ramsey3_decide(const std::vector<TripleSystem>& targets, int N,
                             int size_cap = kDefaultRamsey3Cap);

// Ordered containment of a triple system pattern in one color class
// (increasing injection mapping pattern triples into the class).
std::optional<Embedding> find_mono_triple_copy(const TripleColoring& c, int color,
                                               const TripleSystem& pattern);

std::string triple_coloring_to_json(const TripleColoring& c);
TripleColoring triple_coloring_from_json(const std::string& text);

} // namespace ordramsey
