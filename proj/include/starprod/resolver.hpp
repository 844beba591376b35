#pragma once

// Metric and adjacency codes, and checks that a landmark set resolves a
// vertex universe.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starprod/grid.hpp"
#include "starprod/simple_graph.hpp"

namespace starprod {

// Hop distances to each landmark, in landmark order.
using MetricCode = std::vector<int>;
// min(2, hop distance) to each landmark: 0 = is the landmark, 1 = adjacent.
using AdjacencyCode = std::vector<int>;

// Outcome of an injectivity check: either the codes are distinct, or the
// first colliding pair (x < y) in canonical order.
template <typename T>
struct Verdict {
    std::optional<std::pair<T, T>> witness;

    bool ok() const { return !witness.has_value(); }
    explicit operator bool() const { return ok(); }
};

enum class Provenance { RegimeA, RegimeB, RegimeC, RegimeD, Oracle, User };

std::string to_string(Provenance p);

// Ordered, duplicate-free landmark list with a record of where it came from
// and which grid (if any) it has been verified to resolve.
class ResolvingSet {
public:
    ResolvingSet() = default;
    // Throws InputError on duplicate landmarks.
    explicit ResolvingSet(std::vector<Vertex> landmarks, Provenance provenance = Provenance::User);

    const std::vector<Vertex>& landmarks() const { return landmarks_; }
    std::size_t size() const { return landmarks_.size(); }
    bool empty() const { return landmarks_.empty(); }
    bool contains(const Vertex& v) const;
    Provenance provenance() const { return provenance_; }

    auto begin() const { return landmarks_.begin(); }
    auto end() const { return landmarks_.end(); }
    const Vertex& operator[](std::size_t k) const { return landmarks_[k]; }

    bool verified() const { return verified_for_.has_value(); }
    bool verified_for(const GridGraph& g) const { return verified_for_ && *verified_for_ == g; }

    // Runs is_resolving against g and records success.
    Verdict<Vertex> verify(const GridGraph& g);

private:
    std::vector<Vertex> landmarks_;
    Provenance provenance_ = Provenance::User;
    std::optional<GridGraph> verified_for_;
};

// Entry k is the distance from v to landmarks[k]. Throws InputError on an
// empty landmark list or vertices outside g.
MetricCode metric_code(const GridGraph& g, const Vertex& v, std::span<const Vertex> landmarks);

AdjacencyCode adjacency_code(const GridGraph& g, const Vertex& v, std::span<const Vertex> landmarks);
AdjacencyCode adjacency_code(const SimpleGraph& host, std::size_t v, std::span<const std::size_t> landmarks);

// Whether every vertex of g gets a distinct metric code.
//
// Codes are bucketed by an additive hash built from per-row and per-column
// aggregates (O(|V| + |W|) instead of O(|V|*|W|)); buckets with more than one
// member are then compared entry by entry, so the verdict is exact.
Verdict<Vertex> is_resolving(const GridGraph& g, std::span<const Vertex> landmarks);

// Whether the adjacency codes of the vertices in `universe` are distinct.
Verdict<std::size_t> is_adjacency_resolving(const SimpleGraph& host,
                                            std::span<const std::size_t> universe,
                                            std::span<const std::size_t> landmarks);

// Same question answered through neighbourhoods: N(v) ∩ S must differ for
// all v in universe \ S. Agrees with is_adjacency_resolving on every input.
Verdict<std::size_t> is_adjacency_resolving_by_neighborhoods(const SimpleGraph& host,
                                                             std::span<const std::size_t> universe,
                                                             std::span<const std::size_t> landmarks);

namespace detail {
// Materialises every code and sorts them. Reference for is_resolving.
Verdict<Vertex> is_resolving_by_sorting(const GridGraph& g, std::span<const Vertex> landmarks);
}  // namespace detail

}  // namespace starprod
