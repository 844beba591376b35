#include "starprod/resolver.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <unordered_set>

#include "starprod/errors.hpp"

namespace starprod {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void require_nonempty(std::size_t size) {
    if (size == 0) throw InputError("landmark set must be nonempty");
}

template <typename T>
void keep_min(std::optional<std::pair<T, T>>& best, std::pair<T, T> candidate) {
    if (!best || candidate < *best) best = candidate;
}

// Given (key, id) records, returns the lexicographically smallest pair of
// ids (a < b) sharing a key.
template <typename Key>
std::optional<std::pair<std::size_t, std::size_t>> first_collision(std::vector<std::pair<Key, std::size_t>> records) {
    std::sort(records.begin(), records.end());
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t a = 0; a < records.size();) {
        std::size_t b = a + 1;
        while (b < records.size() && records[b].first == records[a].first) ++b;
        // Within a group ids are ascending, so the first two are the group's minimum pair.
        if (b - a >= 2) keep_min(best, {records[a].second, records[a + 1].second});
        a = b;
    }
    return best;
}

}  // namespace

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::RegimeA: return "constructed-regime-A";
        case Provenance::RegimeB: return "constructed-regime-B";
        case Provenance::RegimeC: return "constructed-regime-C";
        case Provenance::RegimeD: return "constructed-regime-D";
        case Provenance::Oracle: return "oracle";
        case Provenance::User: return "user";
    }
    return "?";
}

ResolvingSet::ResolvingSet(std::vector<Vertex> landmarks, Provenance provenance)
    : landmarks_(std::move(landmarks)), provenance_(provenance) {
    std::unordered_set<Vertex> seen;
    for (const auto& v : landmarks_)
        if (!seen.insert(v).second) throw InputError("duplicate landmark " + to_string(v));
}

bool ResolvingSet::contains(const Vertex& v) const {
    return std::find(landmarks_.begin(), landmarks_.end(), v) != landmarks_.end();
}

Verdict<Vertex> ResolvingSet::verify(const GridGraph& g) {
    verified_for_.reset();
    auto verdict = is_resolving(g, landmarks_);
    if (verdict.ok()) verified_for_ = g;
    return verdict;
}

MetricCode metric_code(const GridGraph& g, const Vertex& v, std::span<const Vertex> landmarks) {
    require_nonempty(landmarks.size());
    MetricCode code;
    code.reserve(landmarks.size());
    for (const auto& w : landmarks) code.push_back(g.distance(v, w));
    return code;
}

AdjacencyCode adjacency_code(const GridGraph& g, const Vertex& v, std::span<const Vertex> landmarks) {
    AdjacencyCode code = metric_code(g, v, landmarks);
    for (int& e : code) e = std::min(e, 2);
    return code;
}

AdjacencyCode adjacency_code(const SimpleGraph& host, std::size_t v, std::span<const std::size_t> landmarks) {
    require_nonempty(landmarks.size());
    if (v >= host.size()) throw InputError("vertex out of range for host graph");
    AdjacencyCode code;
    code.reserve(landmarks.size());
    for (std::size_t w : landmarks) {
        if (w >= host.size()) throw InputError("landmark out of range for host graph");
        code.push_back(v == w ? 0 : host.adjacent(v, w) ? 1 : 2);
    }
    return code;
}

Verdict<Vertex> is_resolving(const GridGraph& g, std::span<const Vertex> landmarks) {
    require_nonempty(landmarks.size());
    for (const auto& w : landmarks) g.require(w);

    const int m = g.m(), n = g.n();
    const std::size_t total = g.vertex_count();

    // salt[k][d]: contribution of distance d at landmark position k.
    std::vector<std::array<std::uint64_t, 5>> salt(landmarks.size());
    for (std::size_t k = 0; k < landmarks.size(); ++k)
        for (int d = 0; d < 5; ++d) salt[k][static_cast<std::size_t>(d)] = splitmix64(k * 8 + static_cast<std::uint64_t>(d));
    auto h = [&](std::size_t k, int d) { return salt[k][static_cast<std::size_t>(d)]; };

    // Distances from an "unrelated" row/col/cell to each landmark kind
    // (index by VertexKind), plus per-row / per-column corrections for the
    // landmarks that share that row or column.
    constexpr std::array<int, 4> row_default{1, 2, 2, 3};
    constexpr std::array<int, 4> cell_default{2, 3, 3, 4};

    std::uint64_t hub_hash = 0, line_base = 0, cell_base = 0;
    std::vector<std::uint64_t> row_delta(static_cast<std::size_t>(m) + 1, 0), col_delta(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint64_t> cell_row_delta(static_cast<std::size_t>(m) + 1, 0), cell_col_delta(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<std::size_t, std::uint64_t>> cell_fix;

    for (std::size_t k = 0; k < landmarks.size(); ++k) {
        const Vertex& w = landmarks[k];
        auto kind = static_cast<std::size_t>(w.kind);
        hub_hash += h(k, w.is_hub() ? 0 : w.is_cell() ? 2 : 1);
        line_base += h(k, row_default[kind]);
        cell_base += h(k, cell_default[kind]);
        auto wi = static_cast<std::size_t>(w.i), wj = static_cast<std::size_t>(w.j);
        switch (w.kind) {
            case VertexKind::Hub: break;
            case VertexKind::Row:
                row_delta[wi] += h(k, 0) - h(k, 2);
                cell_row_delta[wi] += h(k, 1) - h(k, 3);
                break;
            case VertexKind::Col:
                col_delta[wj] += h(k, 0) - h(k, 2);
                cell_col_delta[wj] += h(k, 1) - h(k, 3);
                break;
            case VertexKind::Cell:
                row_delta[wi] += h(k, 1) - h(k, 3);
                col_delta[wj] += h(k, 1) - h(k, 3);
                cell_row_delta[wi] += h(k, 2) - h(k, 4);
                cell_col_delta[wj] += h(k, 2) - h(k, 4);
                // The landmark's own cell was counted from both sides.
                cell_fix.emplace_back(g.index_of(w), (h(k, 0) - h(k, 4)) - 2 * (h(k, 2) - h(k, 4)));
                break;
        }
    }

    std::vector<std::uint64_t> hash(total);
    hash[0] = hub_hash;
    for (int i = 1; i <= m; ++i) hash[static_cast<std::size_t>(i)] = line_base + row_delta[static_cast<std::size_t>(i)];
    for (int j = 1; j <= n; ++j)
        hash[static_cast<std::size_t>(m + j)] = line_base + col_delta[static_cast<std::size_t>(j)];
    std::size_t idx = 1 + static_cast<std::size_t>(m) + static_cast<std::size_t>(n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j, ++idx)
            hash[idx] = cell_base + cell_row_delta[static_cast<std::size_t>(i)] + cell_col_delta[static_cast<std::size_t>(j)];
    for (auto [pos, fix] : cell_fix) hash[pos] += fix;

    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return hash[a] != hash[b] ? hash[a] < hash[b] : a < b;
    });

    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t a = 0; a < total;) {
        std::size_t b = a + 1;
        while (b < total && hash[order[b]] == hash[order[a]]) ++b;
        if (b - a >= 2) {
            // Equal hashes: settle it on the actual codes.
            std::vector<std::pair<MetricCode, std::size_t>> bucket;
            bucket.reserve(b - a);
            for (std::size_t t = a; t < b; ++t)
                bucket.emplace_back(metric_code(g, g.vertex_at(order[t]), landmarks), order[t]);
            if (auto hit = first_collision(std::move(bucket))) keep_min(best, *hit);
        }
        a = b;
    }

    Verdict<Vertex> verdict;
    if (best) verdict.witness = std::pair{g.vertex_at(best->first), g.vertex_at(best->second)};
    return verdict;
}

Verdict<std::size_t> is_adjacency_resolving(const SimpleGraph& host,
                                            std::span<const std::size_t> universe,
                                            std::span<const std::size_t> landmarks) {
    require_nonempty(landmarks.size());
    std::vector<std::pair<AdjacencyCode, std::size_t>> records;
    records.reserve(universe.size());
    for (std::size_t u : universe) records.emplace_back(adjacency_code(host, u, landmarks), u);
    return {first_collision(std::move(records))};
}

Verdict<std::size_t> is_adjacency_resolving_by_neighborhoods(const SimpleGraph& host,
                                                             std::span<const std::size_t> universe,
                                                             std::span<const std::size_t> landmarks) {
    require_nonempty(landmarks.size());
    for (std::size_t w : landmarks)
        if (w >= host.size()) throw InputError("landmark out of range for host graph");
    std::vector<std::size_t> sorted_landmarks(landmarks.begin(), landmarks.end());
    std::sort(sorted_landmarks.begin(), sorted_landmarks.end());

    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> records;
    for (std::size_t u : universe) {
        if (u >= host.size()) throw InputError("vertex out of range for host graph");
        if (std::binary_search(sorted_landmarks.begin(), sorted_landmarks.end(), u)) continue;
        std::vector<std::size_t> hits;
        std::set_intersection(host.neighbors(u).begin(), host.neighbors(u).end(), sorted_landmarks.begin(),
                              sorted_landmarks.end(), std::back_inserter(hits));
        records.emplace_back(std::move(hits), u);
    }
    return {first_collision(std::move(records))};
}

namespace detail {

Verdict<Vertex> is_resolving_by_sorting(const GridGraph& g, std::span<const Vertex> landmarks) {
    require_nonempty(landmarks.size());
    std::vector<std::pair<MetricCode, std::size_t>> records;
    records.reserve(g.vertex_count());
    for (std::size_t idx = 0; idx < g.vertex_count(); ++idx)
        records.emplace_back(metric_code(g, g.vertex_at(idx), landmarks), idx);
    Verdict<Vertex> verdict;
    if (auto hit = first_collision(std::move(records)))
        verdict.witness = std::pair{g.vertex_at(hit->first), g.vertex_at(hit->second)};
    return verdict;
}

}  // namespace detail

}  // namespace starprod
