#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "starprod/aux_graph.hpp"
#include "starprod/errors.hpp"
#include "starprod/resolver.hpp"

using namespace starprod;
using starprod::testing::vs;

namespace {

std::vector<Vertex> random_subset(const GridGraph& g, std::size_t k, std::mt19937_64& rng) {
    auto all = g.vertices();
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(k, all.size()));
    return all;
}

}  // namespace

TEST_CASE("metric codes") {
    CHECK(metric_code(GridGraph(1, 5), Vertex::hub(), vs({"c1", "c2", "a1,3", "a1,4"})) == MetricCode{1, 1, 2, 2});
    CHECK(metric_code(GridGraph(2, 2), Vertex::cell(2, 1), vs({"a1,1", "a1,2"})) == MetricCode{2, 4});

    GridGraph g(3, 4);
    auto w = vs({"r2", "c3", "a1,4", "hub"});
    for (std::size_t k = 0; k < w.size(); ++k) CHECK(metric_code(g, w[k], w)[k] == 0);

    CHECK_THROWS_AS(metric_code(g, Vertex::hub(), {}), InputError);
    CHECK_THROWS_AS(metric_code(g, Vertex::hub(), vs({"r4"})), InputError);
}

TEST_CASE("code entries by vertex class") {
    GridGraph g(4, 5);
    auto all = g.vertices();
    for (const auto& v : all) {
        MetricCode code = metric_code(g, v, all);
        for (std::size_t k = 0; k < all.size(); ++k) {
            int d = code[k];
            if (v.is_hub()) CHECK((d <= 2));
            else if (v.is_cell()) CHECK(d % 2 == (all[k].is_row() || all[k].is_col() ? 1 : 0));
            else CHECK(d <= 3);
        }
    }
}

TEST_CASE("is_resolving examples") {
    auto verdict = is_resolving(GridGraph(1, 1), vs({"r1", "c1"}));
    REQUIRE_FALSE(verdict.ok());
    CHECK(verdict.witness->first == Vertex::hub());
    CHECK(verdict.witness->second == Vertex::cell(1, 1));

    CHECK(is_resolving(GridGraph(1, 1), vs({"r1", "a1,1"})).ok());

    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            GridGraph g(m, n);
            CHECK(is_resolving(g, g.vertices()).ok());
        }

    CHECK_THROWS_AS(is_resolving(GridGraph(2, 2), vs({"a3,1"})), InputError);
}

TEST_CASE("fast and reference resolvability checks agree") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 3000; ++trial) {
        int m = 1 + static_cast<int>(rng() % 7);
        int n = 1 + static_cast<int>(rng() % 7);
        GridGraph g(m, n);
        std::size_t k = 1 + rng() % std::min<std::size_t>(10, g.vertex_count());
        auto w = random_subset(g, k, rng);
        auto fast = is_resolving(g, w);
        auto slow = detail::is_resolving_by_sorting(g, w);
        REQUIRE(fast.ok() == slow.ok());
        if (!fast.ok()) CHECK(*fast.witness == *slow.witness);
    }
}

TEST_CASE("witness is the first collision in canonical order") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        GridGraph g(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4));
        auto w = random_subset(g, 1 + rng() % 3, rng);
        auto verdict = is_resolving(g, w);
        auto all = g.vertices();
        std::optional<std::pair<Vertex, Vertex>> first;
        for (std::size_t x = 0; x < all.size() && !first; ++x)
            for (std::size_t y = x + 1; y < all.size() && !first; ++y)
                if (metric_code(g, all[x], w) == metric_code(g, all[y], w)) first = {all[x], all[y]};
        CHECK(verdict.witness == first);
    }
}

TEST_CASE("resolvability is monotone") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        GridGraph g(2 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 4));
        auto w = random_subset(g, 2 + rng() % 6, rng);
        if (!is_resolving(g, w).ok()) continue;
        auto extra = random_subset(g, 3, rng);
        for (const auto& v : extra)
            if (std::find(w.begin(), w.end(), v) == w.end()) w.push_back(v);
        CHECK(is_resolving(g, w).ok());
    }
}

TEST_CASE("resolving set bookkeeping") {
    CHECK_THROWS_AS(ResolvingSet(vs({"r1", "r1"})), InputError);
    ResolvingSet s(vs({"r1", "a1,1"}));
    CHECK_FALSE(s.verified());
    GridGraph g(1, 1);
    CHECK(s.verify(g).ok());
    CHECK(s.verified_for(g));
    CHECK_FALSE(s.verified_for(GridGraph(1, 2)));
    CHECK(s.contains(Vertex::cell(1, 1)));
    CHECK(to_string(Provenance::RegimeD) == "constructed-regime-D");
    CHECK(to_string(Provenance::Oracle) == "oracle");
}

TEST_CASE("adjacency codes") {
    GridGraph g(3, 3);
    auto s = vs({"a1,1", "r2"});
    CHECK(adjacency_code(g, Vertex::cell(1, 1), s) == AdjacencyCode{0, 2});
    CHECK(adjacency_code(g, Vertex::row(1), s) == AdjacencyCode{1, 2});
    CHECK(adjacency_code(g, Vertex::cell(2, 3), s) == AdjacencyCode{2, 1});

    SimpleGraph host(4);
    host.add_edge(0, 1);
    std::vector<std::size_t> landmarks{0};
    CHECK(adjacency_code(host, 3, landmarks) == AdjacencyCode{2});

    AuxGraph h(GridGraph(2, 2), vs({"a1,1", "a2,1"}));
    auto left = h.left_nodes();
    CHECK(adjacency_code(h.graph(), h.right_node(Vertex::col(1)), left) == AdjacencyCode{1, 1});
}

TEST_CASE("adjacency resolvability") {
    // Path 0-1-2-3-4 with S = {1, 3}: vertex 2 touches both, 0 and 4 differ.
    SimpleGraph p = SimpleGraph::path(5);
    std::vector<std::size_t> all{0, 1, 2, 3, 4};
    std::vector<std::size_t> s{1, 3};
    CHECK(is_adjacency_resolving(p, all, s).ok());

    // One untouched vertex is allowed, two are not.
    SimpleGraph q(4);
    q.add_edge(0, 1);
    std::vector<std::size_t> s0{0};
    std::vector<std::size_t> u1{0, 1, 2};
    std::vector<std::size_t> u2{0, 1, 2, 3};
    CHECK(is_adjacency_resolving(q, u1, s0).ok());
    auto bad = is_adjacency_resolving(q, u2, s0);
    REQUIRE_FALSE(bad.ok());
    CHECK(*bad.witness == std::pair<std::size_t, std::size_t>{2, 3});
}

TEST_CASE("code and neighbourhood definitions of adjacency resolvability agree") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        std::size_t order = 2 + rng() % 8;
        SimpleGraph host(order);
        for (std::size_t u = 0; u < order; ++u)
            for (std::size_t v = u + 1; v < order; ++v)
                if (rng() % 3 == 0) host.add_edge(u, v);
        std::vector<std::size_t> universe, landmarks;
        for (std::size_t v = 0; v < order; ++v) {
            if (rng() % 4 != 0) universe.push_back(v);
            if (rng() % 3 == 0) landmarks.push_back(v);
        }
        if (landmarks.empty()) landmarks.push_back(rng() % order);
        CHECK(is_adjacency_resolving(host, universe, landmarks).ok() ==
              is_adjacency_resolving_by_neighborhoods(host, universe, landmarks).ok());
    }
}
