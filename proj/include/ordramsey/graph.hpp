#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ordramsey {

using Edge = std::pair<int, int>;

// Graph on vertex set {1..n} with an order-sensitive edge set: every edge
// (i,j) has i < j and embeddings must preserve the vertex order.
class OrderedGraph {
public:
    OrderedGraph() : n_(0) {}
    OrderedGraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int i, int j) const;

    // Neighbors of v as a bitset over {1..n}; bit v-1 of word (v-1)/64.
    const std::vector<uint64_t>& adjacency_row(int v) const { return adj_[v - 1]; }
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    bool operator==(const OrderedGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<Edge> edges_;            // sorted lexicographically
    std::vector<std::vector<uint64_t>> adj_;
};

// Throws std::invalid_argument naming the first violated invariant.
void validate(int n, const std::vector<Edge>& edges);

// Strictly increasing injection of pattern vertices into host vertices.
struct Embedding {
    int pattern_n = 0;
    std::vector<int> image;   // image[i] = phi(i+1), strictly increasing

    bool valid_shape(int host_n) const;
};

// Checks that phi maps every pattern edge onto a host edge.
bool embedding_maps_edges(const Embedding& phi, const OrderedGraph& pattern,
                          const OrderedGraph& host);

// JSON file format: {"n": <int>, "edges": [[i,j],...]} with i<j, sorted.
std::string graph_to_json(const OrderedGraph& g);
OrderedGraph graph_from_json(const std::string& text);
OrderedGraph load_graph(const std::string& path);
void save_graph(const OrderedGraph& g, const std::string& path);

} // namespace ordramsey
