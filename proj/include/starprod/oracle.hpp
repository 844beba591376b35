#pragma once

// Brute-force ground truth for small instances. Nothing here uses the
// closed-form distance table or the constructive bases: distances come from
// breadth-first search over GridGraph::neighbors(), and resolvability is
// decided by partition refinement over exhaustively enumerated subsets.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "starprod/grid.hpp"
#include "starprod/resolver.hpp"
#include "starprod/simple_graph.hpp"

namespace starprod {

struct SearchBudget {
    int max_subset_size = 64;
    // Cap on the number of candidate subsets a search may have to visit,
    // estimated as the sum of C(|V|, k) over the levels it would run.
    std::uint64_t max_candidates = 100'000'000;
    // Only visit subsets in a canonical form under row and column
    // permutations of the grid.
    bool use_symmetry = false;
    unsigned workers = 1;
    std::size_t max_vertices = 2000;  // cap for the all-pairs BFS table
};

// Row-major |V| x |V| table of hop counts, indexed by canonical position.
class DistanceTable {
public:
    DistanceTable() = default;
    explicit DistanceTable(std::size_t size) : size_(size), data_(size * size, 0) {}

    std::size_t size() const { return size_; }
    std::uint8_t at(std::size_t u, std::size_t v) const { return data_[u * size_ + v]; }
    void set(std::size_t u, std::size_t v, std::uint8_t d) { data_[u * size_ + v] = d; }
    const std::uint8_t* row(std::size_t u) const { return data_.data() + u * size_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint8_t> data_;
};

// Throws BudgetError when the grid has more than vertex_cap vertices.
DistanceTable bfs_distances(const GridGraph& g, std::size_t vertex_cap = 2000);

struct OracleResult {
    int dimension = 0;
    ResolvingSet witness;          // first resolving set of that size found
    std::uint64_t nodes_visited = 0;
};

// Smallest k for which some k-subset resolves g, by ascending exhaustive
// search. Throws BudgetError rather than returning an unproven answer.
OracleResult brute_force_dimension(const GridGraph& g, const SearchBudget& budget = {});

// Every resolving k-subset, in lexicographic canonical order. With
// use_symmetry only canonical representatives of each orbit are returned.
std::vector<ResolvingSet> enumerate_minimum_bases(const GridGraph& g, int k, const SearchBudget& budget = {});

// Smallest adjacency resolving set of the whole host. A single-vertex host
// counts as 1; an empty host is rejected.
int brute_force_adjacency_dimension(const SimpleGraph& host, const SearchBudget& budget = {});

// Whether some resolving k-subset avoids the hub.
bool exists_hub_free_basis(const GridGraph& g, int k, const SearchBudget& budget = {});

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace starprod
