#pragma once

#include <cstddef>
#include <vector>

namespace starprod {

// Small undirected simple graph on vertices 0..size()-1. Used as the host
// for adjacency codes (the auxiliary bipartite graph, test hosts).
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t vertex_count) : adj_(vertex_count) {}

    static SimpleGraph path(std::size_t order);
    static SimpleGraph cycle(std::size_t order);
    static SimpleGraph star(std::size_t leaves);  // center is vertex 0

    // Ignores duplicate edges; rejects loops and out-of-range endpoints.
    void add_edge(std::size_t u, std::size_t v);

    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_; }
    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
    bool adjacent(std::size_t u, std::size_t v) const;

    // Hop counts from src; -1 marks unreachable vertices.
    std::vector<int> bfs(std::size_t src) const;

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::size_t edges_ = 0;
};

}  // namespace starprod
