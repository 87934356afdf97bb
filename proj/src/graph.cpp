#include "ordramsey/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ordramsey {

void validate(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (const auto& [i, j] : edges) {
        if (i >= j) {
            if (i == j) throw std::invalid_argument("loop at vertex " + std::to_string(i));
            throw std::invalid_argument("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") not increasing");
        }
        if (i < 1 || j > n)
            throw std::invalid_argument("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") out of range for n=" + std::to_string(n));
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate edge");
}

OrderedGraph::OrderedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    validate(n_, edges_);
    std::sort(edges_.begin(), edges_.end());
    const std::size_t words = (static_cast<std::size_t>(n_) + 63) / 64;
    adj_.assign(n_, std::vector<uint64_t>(words, 0));
    for (const auto& [i, j] : edges_) {
        adj_[i - 1][(j - 1) / 64] |= uint64_t(1) << ((j - 1) % 64);
        adj_[j - 1][(i - 1) / 64] |= uint64_t(1) << ((i - 1) % 64);
    }
}

bool OrderedGraph::has_edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return (adj_[i - 1][(j - 1) / 64] >> ((j - 1) % 64)) & 1;
}

std::vector<int> OrderedGraph::neighbors(int v) const {
    std::vector<int> out;
    const auto& row = adj_[v - 1];
    for (std::size_t w = 0; w < row.size(); ++w) {
        uint64_t bits = row[w];
        while (bits) {
            int b = __builtin_ctzll(bits);
            out.push_back(static_cast<int>(w * 64 + b + 1));
            bits &= bits - 1;
        }
    }
    return out;
}

int OrderedGraph::degree(int v) const {
    int d = 0;
    for (uint64_t w : adj_[v - 1]) d += __builtin_popcountll(w);
    return d;
}

bool Embedding::valid_shape(int host_n) const {
    if (static_cast<int>(image.size()) != pattern_n) return false;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (image[i] < 1 || image[i] > host_n) return false;
        if (i > 0 && image[i] <= image[i - 1]) return false;
    }
    return true;
}

bool embedding_maps_edges(const Embedding& phi, const OrderedGraph& pattern,
                          const OrderedGraph& host) {
    if (phi.pattern_n != pattern.n() || !phi.valid_shape(host.n())) return false;
    for (const auto& [a, b] : pattern.edges())
        if (!host.has_edge(phi.image[a - 1], phi.image[b - 1])) return false;
    return true;
}

std::string graph_to_json(const OrderedGraph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    auto arr = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) arr.push_back({a, b});
    j["edges"] = arr;
    return j.dump();
}

OrderedGraph graph_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return OrderedGraph(j.at("n").get<int>(), std::move(edges));
}

OrderedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return graph_from_json(ss.str());
}

void save_graph(const OrderedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << graph_to_json(g) << "\n";
}

} // namespace ordramsey
