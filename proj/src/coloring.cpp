#include "ordramsey/coloring.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ordramsey {

namespace {
std::size_t pair_count(int N) {
    return static_cast<std::size_t>(N) * (N - 1) / 2;
}
} // namespace

EdgeColoring::EdgeColoring(int N, int q, uint8_t fill)
    : N_(N), q_(q), colors_(pair_count(N), fill) {
    if (N < 0) throw std::invalid_argument("coloring: negative N");
    if (q < 2) throw std::invalid_argument("coloring: need at least 2 colors");
    if (fill >= q) throw std::invalid_argument("coloring: fill color out of range");
}

EdgeColoring::EdgeColoring(int N, int q, std::vector<uint8_t> colors)
    : N_(N), q_(q), colors_(std::move(colors)) {
    if (q < 2) throw std::invalid_argument("coloring: need at least 2 colors");
    if (colors_.size() != pair_count(N))
        throw std::invalid_argument("coloring: color array has wrong length");
    for (uint8_t c : colors_)
        if (c >= q) throw std::invalid_argument("coloring: color index out of range");
}

std::size_t EdgeColoring::pair_index(int i, int j, int N) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i - 1) * (2 * N - i) / 2 + (j - i - 1);
}

OrderedGraph EdgeColoring::color_class(int c) const {
    if (c < 0 || c >= q_) throw std::invalid_argument("color index out of range");
    std::vector<Edge> edges;
    for (int i = 1; i < N_; ++i)
        for (int j = i + 1; j <= N_; ++j)
            if (color(i, j) == c) edges.emplace_back(i, j);
    return OrderedGraph(N_, std::move(edges));
}

std::string coloring_to_json(const EdgeColoring& c) {
    nlohmann::json j;
    j["N"] = c.N();
    j["q"] = c.q();
    j["colors"] = c.colors();
    return j.dump();
}

EdgeColoring coloring_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    return EdgeColoring(j.at("N").get<int>(), j.at("q").get<int>(),
                        j.at("colors").get<std::vector<uint8_t>>());
}

EdgeColoring load_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return coloring_from_json(ss.str());
}

void save_coloring(const EdgeColoring& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << coloring_to_json(c) << "\n";
}

} // namespace ordramsey
