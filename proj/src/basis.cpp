#include "starprod/basis.hpp"

#include <string>
#include <utility>

#include "starprod/errors.hpp"

namespace starprod {

namespace {

void require_positive(int m, int n) {
    if (m < 1 || n < 1)
        throw InputError("star sizes must be positive (got m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                         ")");
}

RegimeTag classify(int m, int n) {  // m <= n
    if (m == 1) return RegimeTag::A;
    if (2 * m < n) return RegimeTag::B;
    if (m <= 4) return RegimeTag::C;
    return RegimeTag::D;
}

// Row i receives cells (i, 2i-1) and (i, 2i) for i = 1..rows.
void add_row_pairs(std::vector<Vertex>& out, int rows) {
    for (int i = 1; i <= rows; ++i) {
        out.push_back(Vertex::cell(i, 2 * i - 1));
        out.push_back(Vertex::cell(i, 2 * i));
    }
}

std::vector<Vertex> regime_a(int n) {
    std::vector<Vertex> out;
    if (n == 1) return {Vertex::row(1), Vertex::cell(1, 1)};
    if (n <= 4) {
        for (int j = 1; j <= n; ++j) out.push_back(Vertex::cell(1, j));
        return out;
    }
    out = {Vertex::col(1), Vertex::col(2)};
    for (int j = 3; j <= n - 1; ++j) out.push_back(Vertex::cell(1, j));
    return out;
}

std::vector<Vertex> regime_b(int m, int n) {
    std::vector<Vertex> out;
    add_row_pairs(out, m);
    for (int j = 2 * m + 1; j <= n - 1; ++j) out.push_back(Vertex::cell(m, j));
    return out;
}

std::vector<Vertex> regime_c(int m, int n) {
    std::vector<Vertex> out;
    switch (2 * m - n) {
        case 0:
            add_row_pairs(out, m);
            return out;
        case 1:
            add_row_pairs(out, m - 1);
            out.push_back(Vertex::row(m));
            return out;
        case 2:
            add_row_pairs(out, m - 1);
            return out;
        default:
            break;
    }
    // 2m - n >= 3 with m <= 4 leaves exactly (3,3), (4,4), (4,5).
    // On (3,3) the hub and a(1,3) both see {a11, a12, a23, a33} at distance 2,
    // so r2 takes the place of a33 there.
    if (m == 3) return {Vertex::cell(1, 1), Vertex::cell(1, 2), Vertex::cell(2, 3), Vertex::row(2)};
    out = {Vertex::cell(1, 1), Vertex::cell(1, 2), Vertex::cell(2, 3), Vertex::cell(3, 3)};
    if (m == 4 && n == 4) out.push_back(Vertex::row(4));
    if (m == 4 && n == 5) {
        out.push_back(Vertex::cell(4, 4));
        out.push_back(Vertex::cell(4, 5));
    }
    return out;
}

std::vector<Vertex> regime_d(int m, int n) {
    TilingPlan plan = tiling_plan(m, n);
    std::vector<Vertex> out;
    out.reserve(plan.basis_size());
    for (int i = 1; i <= plan.s; ++i) {
        out.push_back(Vertex::cell(2 * i - 1, i));
        out.push_back(Vertex::cell(2 * i, i));
    }
    for (int j = 1; j <= plan.t; ++j) {
        int row = 2 * plan.s + j;
        out.push_back(Vertex::cell(row, plan.s + 2 * j - 1));
        out.push_back(Vertex::cell(row, plan.s + 2 * j));
    }
    out.insert(out.end(), plan.singles.begin(), plan.singles.end());
    return out;
}

Provenance provenance_of(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::A: return Provenance::RegimeA;
        case RegimeTag::B: return Provenance::RegimeB;
        case RegimeTag::C: return Provenance::RegimeC;
        case RegimeTag::D: return Provenance::RegimeD;
    }
    return Provenance::User;
}

}  // namespace

char to_char(RegimeTag tag) {
    return static_cast<char>('A' + static_cast<int>(tag));
}

int dimension(int m, int n) {
    require_positive(m, n);
    if (m > n) std::swap(m, n);
    if (m == 1) return n == 1 ? 2 : n <= 4 ? n : n - 1;
    if (2 * m < n) return n - 1;
    return n + (2 * m - n) / 3;  // 2m - n >= 0 here, so '/' is floor
}

Regime regime_of(int m, int n) {
    require_positive(m, n);
    bool swapped = m > n;
    if (swapped) std::swap(m, n);
    return {classify(m, n), swapped};
}

TilingPlan tiling_plan(int m, int n) {
    require_positive(m, n);
    if (m > n || classify(m, n) != RegimeTag::D)
        throw InputError("tiling plan requires 5 <= m <= n <= 2m (got m=" + std::to_string(m) +
                         ", n=" + std::to_string(n) + ")");
    TilingPlan plan;
    plan.r = (m + n) % 3;
    switch (plan.r) {
        case 0:
            plan.s = (2 * m - n) / 3;
            plan.t = (2 * n - m) / 3;
            break;
        case 1:
            plan.s = (2 * m - n + 1) / 3;
            plan.t = (2 * n - m - 2) / 3;
            plan.isolated = Vertex::col(n);
            break;
        default:
            plan.s = (2 * m - n - 1) / 3;
            plan.t = (2 * n - m - 1) / 3;
            plan.singles.push_back(Vertex::row(m));
            plan.isolated = Vertex::col(n);
            break;
    }
    return plan;
}

ResolvingSet build_basis(int m, int n) {
    Regime regime = regime_of(m, n);
    int lo = regime.normalized ? n : m;
    int hi = regime.normalized ? m : n;

    std::vector<Vertex> landmarks;
    switch (regime.tag) {
        case RegimeTag::A: landmarks = regime_a(hi); break;
        case RegimeTag::B: landmarks = regime_b(lo, hi); break;
        case RegimeTag::C: landmarks = regime_c(lo, hi); break;
        case RegimeTag::D: landmarks = regime_d(lo, hi); break;
    }
    if (regime.normalized)
        for (auto& v : landmarks) v = transpose(v);

    ResolvingSet basis(std::move(landmarks), provenance_of(regime.tag));
    GridGraph g(m, n);
    if (basis.size() != static_cast<std::size_t>(dimension(m, n)))
        throw InternalError("constructed basis has the wrong size for m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
    if (auto verdict = basis.verify(g); !verdict)
        throw InternalError("constructed basis does not resolve m=" + std::to_string(m) + ", n=" +
                            std::to_string(n) + ": " + to_string(verdict.witness->first) + " ~ " +
                            to_string(verdict.witness->second));
    return basis;
}

}  // namespace starprod
