#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordramsey/graph.hpp"

namespace ordramsey {

// Color indices are 0-based; by convention color 0 is "red" and color 1 is
// "blue" wherever the two-color case is meant.
inline constexpr int kRed = 0;
inline constexpr int kBlue = 1;

// Total q-coloring of all pairs of {1..N}, stored in row-major
// upper-triangular order: (1,2),(1,3),...,(1,N),(2,3),...
class EdgeColoring {
public:
    EdgeColoring() : N_(0), q_(2) {}
    EdgeColoring(int N, int q, uint8_t fill = 0);
    EdgeColoring(int N, int q, std::vector<uint8_t> colors);

    int N() const { return N_; }
    int q() const { return q_; }
    const std::vector<uint8_t>& colors() const { return colors_; }

    static std::size_t pair_index(int i, int j, int N);

    uint8_t color(int i, int j) const { return colors_[pair_index(i, j, N_)]; }
    void set_color(int i, int j, uint8_t c) { colors_[pair_index(i, j, N_)] = c; }

    // Graph formed by the pairs of the given color.
    OrderedGraph color_class(int c) const;

    bool operator==(const EdgeColoring& o) const {
        return N_ == o.N_ && q_ == o.q_ && colors_ == o.colors_;
    }

private:
    int N_;
    int q_;
    std::vector<uint8_t> colors_;
};

// JSON file format: {"N": <int>, "q": <int>, "colors": [...]}.
std::string coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const std::string& text);
EdgeColoring load_coloring(const std::string& path);
void save_coloring(const EdgeColoring& c, const std::string& path);

} // namespace ordramsey
