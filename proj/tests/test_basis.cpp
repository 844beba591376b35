#include <doctest.h>

#include "helpers.hpp"
#include "starprod/aux_graph.hpp"
#include "starprod/basis.hpp"
#include "starprod/errors.hpp"

using namespace starprod;
using starprod::testing::vs;

TEST_CASE("dimension values") {
    CHECK(dimension(1, 1) == 2);
    CHECK(dimension(1, 4) == 4);
    CHECK(dimension(1, 5) == 4);
    CHECK(dimension(2, 5) == 4);
    CHECK(dimension(3, 3) == 4);
    CHECK(dimension(4, 4) == 5);
    CHECK(dimension(4, 5) == 6);
    CHECK(dimension(4, 6) == 6);
    CHECK(dimension(14, 14) == 18);
    CHECK_THROWS_AS(dimension(0, 4), InputError);
    CHECK_THROWS_AS(dimension(3, -2), InputError);
}

TEST_CASE("dimension is symmetric and weakly monotone") {
    for (int m = 1; m <= 200; ++m)
        for (int n = 1; n <= 200; ++n) {
            int d = dimension(m, n);
            if (d != dimension(n, m)) FAIL("asymmetric at " << m << "," << n);
            if (m > 1 && dimension(m - 1, n) > d) FAIL("not monotone in m at " << m << "," << n);
            if (n > 1 && dimension(m, n - 1) > d) FAIL("not monotone in n at " << m << "," << n);
        }
}

TEST_CASE("regime dispatch") {
    CHECK(regime_of(1, 9).tag == RegimeTag::A);
    CHECK(regime_of(2, 5).tag == RegimeTag::B);
    CHECK(regime_of(5, 10).tag == RegimeTag::D);
    CHECK(regime_of(4, 8).tag == RegimeTag::C);
    CHECK(regime_of(4, 9).tag == RegimeTag::B);
    CHECK(regime_of(5, 11).tag == RegimeTag::B);

    Regime swapped = regime_of(7, 3);
    CHECK(swapped.tag == RegimeTag::B);
    CHECK(swapped.normalized);
    CHECK_FALSE(regime_of(3, 7).normalized);
}

TEST_CASE("published constructions") {
    CHECK(build_basis(1, 7).landmarks() == vs({"c1", "c2", "a1,3", "a1,4", "a1,5", "a1,6"}));
    CHECK(build_basis(3, 8).landmarks() == vs({"a1,1", "a1,2", "a2,3", "a2,4", "a3,5", "a3,6", "a3,7"}));
    CHECK(build_basis(4, 4).landmarks() == vs({"a1,1", "a1,2", "a2,3", "a3,3", "r4"}));
    CHECK(build_basis(4, 5).landmarks() == vs({"a1,1", "a1,2", "a2,3", "a3,3", "a4,4", "a4,5"}));
    CHECK(build_basis(2, 3).landmarks() == vs({"a1,1", "a1,2", "r2"}));
    CHECK(build_basis(1, 2).landmarks() == vs({"a1,1", "a1,2"}));
    CHECK(build_basis(1, 1).landmarks() == vs({"r1", "a1,1"}));
    CHECK(build_basis(3, 3).landmarks() == vs({"a1,1", "a1,2", "a2,3", "r2"}));
    CHECK_FALSE(is_resolving(GridGraph(3, 3), vs({"a1,1", "a1,2", "a2,3", "a3,3"})).ok());
    CHECK(build_basis(5, 5).landmarks() == vs({"a1,1", "a2,1", "a3,2", "a4,2", "a5,3", "a5,4"}));
}

TEST_CASE("provenance follows the regime") {
    CHECK(build_basis(1, 6).provenance() == Provenance::RegimeA);
    CHECK(build_basis(2, 6).provenance() == Provenance::RegimeB);
    CHECK(build_basis(3, 4).provenance() == Provenance::RegimeC);
    CHECK(build_basis(6, 7).provenance() == Provenance::RegimeD);
}

TEST_CASE("swapped inputs are mapped back") {
    GridGraph g(7, 3);
    ResolvingSet b = build_basis(7, 3);
    CHECK(b.verified_for(g));
    std::vector<Vertex> expected;
    for (const auto& v : build_basis(3, 7)) expected.push_back(transpose(v));
    CHECK(b.landmarks() == expected);
}

TEST_CASE("tiling plans") {
    TilingPlan p66 = tiling_plan(6, 6);
    CHECK(p66.r == 0);
    CHECK(p66.s == 2);
    CHECK(p66.t == 2);
    CHECK(p66.basis_size() == 8);
    CHECK(p66.singles.empty());
    CHECK_FALSE(p66.isolated);

    TilingPlan p59 = tiling_plan(5, 9);
    CHECK(p59.r == 2);
    CHECK(p59.s == 0);
    CHECK(p59.t == 4);
    CHECK(p59.singles == vs({"r5"}));
    CHECK(p59.isolated == Vertex::col(9));
    CHECK(p59.basis_size() == 9);

    TilingPlan p57 = tiling_plan(5, 7);
    CHECK(p57.r == 0);
    CHECK(p57.s == 1);
    CHECK(p57.t == 3);
    CHECK(p57.basis_size() == 8);

    TilingPlan p55 = tiling_plan(5, 5);
    CHECK(p55.r == 1);
    CHECK(p55.isolated == Vertex::col(5));

    CHECK_THROWS_AS(tiling_plan(4, 4), InputError);
    CHECK_THROWS_AS(tiling_plan(5, 11), InputError);
    CHECK_THROWS_AS(tiling_plan(9, 5), InputError);
}

TEST_CASE("tiling covers every row and column once") {
    for (int m = 5; m <= 120; ++m)
        for (int n = m; n <= 2 * m; ++n) {
            TilingPlan p = tiling_plan(m, n);
            int single_rows = 0;
            int single_cols = 0;
            for (const auto& v : p.singles) (v.is_row() ? single_rows : single_cols) += 1;
            bool ok = p.s >= 0 && p.t >= 0 && 2 * p.s + p.t + single_rows == m &&
                      p.s + 2 * p.t + single_cols + (p.isolated ? 1 : 0) == n &&
                      p.basis_size() == static_cast<std::size_t>(dimension(m, n));
            if (!ok) FAIL("bad plan at " << m << "," << n);
        }
}

TEST_CASE("constructed bases are minimum-size, verified and hub-free") {
    for (int m = 1; m <= 60; ++m)
        for (int n = 1; n <= 60; ++n) {
            GridGraph g(m, n);
            ResolvingSet b = build_basis(m, n);
            bool ok = b.size() == static_cast<std::size_t>(dimension(m, n)) && b.verified_for(g) &&
                      is_resolving(g, b.landmarks()).ok() && !b.contains(Vertex::hub());
            if (!ok) FAIL("bad basis at " << m << "," << n);
        }
}

TEST_CASE("regime D aux graph is made of five-vertex paths") {
    for (int m = 5; m <= 40; ++m)
        for (int n = m; n <= 2 * m; ++n) {
            TilingPlan p = tiling_plan(m, n);
            ResolvingSet b = build_basis(m, n);
            ComponentReport rep = classify_components(AuxGraph(GridGraph(m, n), b.landmarks()));
            CHECK(rep.non_path_count == 0);
            CHECK(rep.count_paths_of_order(5) == p.s + p.t);
            CHECK(rep.count_paths_of_order(2) == static_cast<int>(p.singles.size()));
            CHECK(rep.isolated_right == (p.isolated ? 1 : 0));
        }
}

TEST_CASE("boundary n = 2m matches the row-pairing size") {
    for (int m = 5; m <= 50; ++m) {
        CHECK(build_basis(m, 2 * m).size() == static_cast<std::size_t>(2 * m));
        CHECK(regime_of(m, 2 * m).tag == RegimeTag::D);
    }
}

TEST_CASE("non-positive input") {
    CHECK_THROWS_AS(build_basis(0, 1), InputError);
    CHECK_THROWS_AS(regime_of(1, 0), InputError);
}
