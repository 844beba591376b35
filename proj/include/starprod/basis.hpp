#pragma once

// Closed-form metric dimension of the star product and an O(m+n)
// construction of a minimum resolving set.
//
// After normalising to m <= n the parameter space splits into four regimes:
//   A  m = 1
//   B  2 <= m < n/2                  dim = n - 1
//   C  n/2 <= m <= n, m <= 4         dim = n + floor((2m - n) / 3)
//   D  n/2 <= m <= n, m >= 5         dim = n + floor((2m - n) / 3)
// Regime D bases are tiled from two-landmark blocks whose auxiliary graph
// component is a 5-vertex path (see aux_graph.hpp).

#include <optional>
#include <vector>

#include "starprod/grid.hpp"
#include "starprod/resolver.hpp"

namespace starprod {

enum class RegimeTag { A, B, C, D };

char to_char(RegimeTag tag);

struct Regime {
    RegimeTag tag;
    bool normalized;  // true when (m, n) was swapped to enforce m <= n
};

struct TilingPlan {
    int s = 0;  // row-pair tiles: two cells sharing a column
    int t = 0;  // column-pair tiles: two cells sharing a row
    int r = 0;  // (m + n) mod 3
    std::vector<Vertex> singles;    // row/column vertices placed directly
    std::optional<Vertex> isolated;  // column left without landmarks

    std::size_t basis_size() const { return 2 * static_cast<std::size_t>(s + t) + singles.size(); }
};

int dimension(int m, int n);

Regime regime_of(int m, int n);

// Only defined for regime D (after normalisation); m <= n is required.
TilingPlan tiling_plan(int m, int n);

// Minimum resolving set, verified before it is returned. Inputs with m > n
// are solved transposed and mapped back. Never contains the hub.
ResolvingSet build_basis(int m, int n);

}  // namespace starprod
