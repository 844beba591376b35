#include "starprod/simple_graph.hpp"

#include <algorithm>
#include <queue>

#include "starprod/errors.hpp"

namespace starprod {

SimpleGraph SimpleGraph::path(std::size_t order) {
    SimpleGraph g(order);
    for (std::size_t v = 1; v < order; ++v) g.add_edge(v - 1, v);
    return g;
}

SimpleGraph SimpleGraph::cycle(std::size_t order) {
    if (order < 3) throw InputError("a cycle needs at least 3 vertices");
    SimpleGraph g = path(order);
    g.add_edge(order - 1, 0);
    return g;
}

SimpleGraph SimpleGraph::star(std::size_t leaves) {
    SimpleGraph g(leaves + 1);
    for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size()) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("loops are not allowed");
    if (adjacent(u, v)) return;
    auto insert_sorted = [](std::vector<std::size_t>& list, std::size_t x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++edges_;
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<int> SimpleGraph::bfs(std::size_t src) const {
    std::vector<int> dist(size(), -1);
    std::queue<std::size_t> frontier;
    dist.at(src) = 0;
    frontier.push(src);
    while (!frontier.empty()) {
        std::size_t u = frontier.front();
        frontier.pop();
        for (std::size_t w : adj_[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

}  // namespace starprod
