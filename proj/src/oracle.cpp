#include "starprod/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <string>
#include <thread>

#include "starprod/errors.hpp"

namespace starprod {

namespace {

constexpr int kRadix = 5;  // distances in the grid are 0..4

struct SymmetryTag {
    VertexKind kind;
    int row;
    int col;
};

enum class Mode { FirstHit, All };

using Subset = std::vector<std::size_t>;  // vertex indices, ascending

// Exhaustive k-subset search over a fixed candidate list. A subset resolves
// the universe (all vertices of the distance table) when refining the
// trivial partition by each landmark's distances yields singletons.
class SubsetSearch {
public:
    SubsetSearch(const DistanceTable& dist, std::vector<std::size_t> candidates, std::vector<SymmetryTag> tags)
        : dist_(dist), cand_(std::move(candidates)), tags_(std::move(tags)) {
        const std::size_t n = dist_.size();
        // last_split_[x*n + y]: last candidate position whose landmark
        // separates x and y, or -1. A partial subset whose open pairs have no
        // separator at or after the next position can never be completed.
        last_split_.assign(n * n, -1);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = x + 1; y < n; ++y) {
                int last = -1;
                for (std::size_t p = cand_.size(); p-- > 0;) {
                    if (dist_.at(x, cand_[p]) != dist_.at(y, cand_[p])) {
                        last = static_cast<int>(p);
                        break;
                    }
                }
                last_split_[x * n + y] = last;
                last_split_[y * n + x] = last;
            }
        }
    }

    std::vector<Subset> run(int k, Mode mode, unsigned workers, std::uint64_t& nodes) const {
        const std::size_t positions = cand_.size();
        if (k <= 0 || static_cast<std::size_t>(k) > positions) return {};
        const std::size_t roots = positions - static_cast<std::size_t>(k) + 1;
        workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(roots)));

        std::atomic<std::size_t> best_root{std::numeric_limits<std::size_t>::max()};
        std::mutex merge;
        std::map<std::size_t, std::vector<Subset>> by_root;
        std::atomic<std::uint64_t> total_nodes{0};

        auto job = [&](unsigned id) {
            Walker walker(*this, k, mode);
            for (std::size_t root = id; root < roots; root += workers) {
                if (mode == Mode::FirstHit && root > best_root.load()) break;
                walker.search_root(root);
                if (walker.hits.empty()) continue;
                if (mode == Mode::FirstHit) {
                    std::size_t cur = best_root.load();
                    while (root < cur && !best_root.compare_exchange_weak(cur, root)) {
                    }
                }
                std::lock_guard lock(merge);
                by_root[root] = std::move(walker.hits);
                walker.hits.clear();
            }
            total_nodes += walker.nodes;
        };

        if (workers == 1) {
            job(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned id = 0; id < workers; ++id) pool.emplace_back(job, id);
            for (auto& t : pool) t.join();
        }
        nodes += total_nodes.load();

        std::vector<Subset> out;
        for (auto& [root, hits] : by_root) {
            out.insert(out.end(), std::make_move_iterator(hits.begin()), std::make_move_iterator(hits.end()));
            if (mode == Mode::FirstHit) break;
        }
        return out;
    }

private:
    struct Walker {
        const SubsetSearch& s;
        int k;
        Mode mode;
        std::size_t n;
        std::vector<std::vector<std::uint16_t>> cls;  // partition after `depth` landmarks
        std::vector<int> class_count;
        std::vector<int> max_row, max_col;
        std::vector<int> remap, first;
        std::vector<std::size_t> touched;
        Subset chosen;
        std::vector<Subset> hits;
        std::uint64_t nodes = 0;

        Walker(const SubsetSearch& search, int k_, Mode mode_)
            : s(search), k(k_), mode(mode_), n(search.dist_.size()),
              cls(static_cast<std::size_t>(k_) + 1, std::vector<std::uint16_t>(search.dist_.size(), 0)),
              class_count(static_cast<std::size_t>(k_) + 1, 1),
              max_row(static_cast<std::size_t>(k_) + 1, 0), max_col(static_cast<std::size_t>(k_) + 1, 0),
              remap(search.dist_.size() * kRadix, -1), first(search.dist_.size(), -1) {}

        // Symmetry breaking: scanning the subset in canonical order, every
        // newly used row (column) index must be the next unused one.
        bool admissible(std::size_t depth, std::size_t pos) {
            auto d = depth;
            max_row[d + 1] = max_row[d];
            max_col[d + 1] = max_col[d];
            if (s.tags_.empty()) return true;
            const SymmetryTag& tag = s.tags_[s.cand_[pos]];
            if (tag.row > max_row[d] + 1 || tag.col > max_col[d] + 1) return false;
            max_row[d + 1] = std::max(max_row[d], tag.row);
            max_col[d + 1] = std::max(max_col[d], tag.col);
            return true;
        }

        // Refines the partition at `depth` by the landmark at `pos`. Returns
        // false when the branch is dead (or, at full depth, not resolving).
        bool refine(std::size_t depth, std::size_t pos) {
            ++nodes;
            const auto& prev = cls[depth];
            auto& next = cls[depth + 1];
            // The table is symmetric, so the landmark's row holds d(v, landmark).
            const std::uint8_t* dist_row = s.dist_.row(s.cand_[pos]);
            int count = 0;
            touched.clear();
            for (std::size_t v = 0; v < n; ++v) {
                std::size_t key = static_cast<std::size_t>(prev[v]) * kRadix + dist_row[v];
                if (remap[key] < 0) {
                    remap[key] = count++;
                    touched.push_back(key);
                }
                next[v] = static_cast<std::uint16_t>(remap[key]);
            }
            for (std::size_t key : touched) remap[key] = -1;
            class_count[depth + 1] = count;

            const int remaining = k - static_cast<int>(depth) - 1;
            if (remaining == 0) return static_cast<std::size_t>(count) == n;

            // Each further landmark splits a class into at most kRadix parts.
            std::uint64_t reach = static_cast<std::uint64_t>(count);
            for (int r = 0; r < remaining && reach < n; ++r) reach *= kRadix;
            if (reach < n) return false;

            const int next_pos = static_cast<int>(pos) + 1;
            std::fill(first.begin(), first.begin() + count, -1);
            for (std::size_t v = 0; v < n; ++v) {
                int c = next[v];
                if (first[static_cast<std::size_t>(c)] < 0) {
                    first[static_cast<std::size_t>(c)] = static_cast<int>(v);
                } else if (s.last_split_[static_cast<std::size_t>(first[static_cast<std::size_t>(c)]) * n + v] <
                           next_pos) {
                    return false;
                }
            }
            return true;
        }

        bool descend(std::size_t depth, std::size_t start) {
            const std::size_t positions = s.cand_.size();
            const std::size_t need = static_cast<std::size_t>(k) - depth;
            for (std::size_t pos = start; pos + need <= positions; ++pos) {
                if (!admissible(depth, pos)) continue;
                bool alive = refine(depth, pos);
                if (!alive) continue;
                chosen.push_back(s.cand_[pos]);
                if (depth + 1 == static_cast<std::size_t>(k)) {
                    hits.push_back(chosen);
                    if (mode == Mode::FirstHit) return true;
                } else if (descend(depth + 1, pos + 1)) {
                    return true;
                }
                chosen.pop_back();
            }
            return false;
        }

        void search_root(std::size_t root) {
            chosen.clear();
            if (!admissible(0, root) || !refine(0, root)) return;
            chosen.push_back(s.cand_[root]);
            if (k == 1) {
                hits.push_back(chosen);
                return;
            }
            descend(1, root + 1);
        }
    };

    const DistanceTable& dist_;
    std::vector<std::size_t> cand_;
    std::vector<SymmetryTag> tags_;
    std::vector<int> last_split_;
};

std::vector<SymmetryTag> symmetry_tags(const GridGraph& g) {
    std::vector<SymmetryTag> tags;
    tags.reserve(g.vertex_count());
    for (const auto& v : g.vertices()) tags.push_back({v.kind, v.i, v.j});
    return tags;
}

ResolvingSet to_set(const GridGraph& g, const Subset& subset) {
    std::vector<Vertex> landmarks;
    landmarks.reserve(subset.size());
    for (std::size_t idx : subset) landmarks.push_back(g.vertex_at(idx));
    return ResolvingSet(std::move(landmarks), Provenance::Oracle);
}

[[noreturn]] void over_budget(const std::string& what, std::uint64_t estimate, const SearchBudget& budget) {
    throw BudgetError(what + ": estimated " + std::to_string(estimate) + " candidate subsets exceeds the cap of " +
                      std::to_string(budget.max_candidates));
}

void check_subset_size(int k, const SearchBudget& budget) {
    if (k > budget.max_subset_size)
        throw BudgetError("subset size " + std::to_string(k) + " exceeds max_subset_size " +
                          std::to_string(budget.max_subset_size));
}

}  // namespace

__extension__ typedef unsigned __int128 u128;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

DistanceTable bfs_distances(const GridGraph& g, std::size_t vertex_cap) {
    const std::size_t n = g.vertex_count();
    if (n > vertex_cap)
        throw BudgetError("all-pairs table for " + std::to_string(n) + " vertices exceeds the cap of " +
                          std::to_string(vertex_cap));
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t u = 0; u < n; ++u)
        for (const auto& w : g.neighbors(g.vertex_at(u))) adj[u].push_back(g.index_of(w));

    DistanceTable table(n);
    std::vector<int> dist(n);
    std::queue<std::size_t> frontier;
    for (std::size_t src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        frontier.push(src);
        while (!frontier.empty()) {
            std::size_t u = frontier.front();
            frontier.pop();
            for (std::size_t w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    frontier.push(w);
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) table.set(src, v, static_cast<std::uint8_t>(dist[v]));
    }
    return table;
}

OracleResult brute_force_dimension(const GridGraph& g, const SearchBudget& budget) {
    const DistanceTable dist = bfs_distances(g, budget.max_vertices);
    const std::size_t n = dist.size();
    std::vector<std::size_t> candidates(n);
    for (std::size_t v = 0; v < n; ++v) candidates[v] = v;
    SubsetSearch search(dist, candidates, budget.use_symmetry ? symmetry_tags(g) : std::vector<SymmetryTag>{});

    OracleResult result;
    std::uint64_t estimate = 0;
    for (int k = 1; static_cast<std::size_t>(k) <= n; ++k) {
        check_subset_size(k, budget);
        estimate += binomial(n, static_cast<std::uint64_t>(k));
        if (estimate > budget.max_candidates) over_budget("metric dimension search", estimate, budget);
        auto hits = search.run(k, Mode::FirstHit, budget.workers, result.nodes_visited);
        if (!hits.empty()) {
            result.dimension = k;
            result.witness = to_set(g, hits.front());
            return result;
        }
    }
    throw InternalError("no resolving set found, but the full vertex set always resolves");
}

std::vector<ResolvingSet> enumerate_minimum_bases(const GridGraph& g, int k, const SearchBudget& budget) {
    if (k < 1) throw InputError("subset size must be positive");
    check_subset_size(k, budget);
    const DistanceTable dist = bfs_distances(g, budget.max_vertices);
    const std::size_t n = dist.size();
    std::uint64_t estimate = binomial(n, static_cast<std::uint64_t>(k));
    if (estimate > budget.max_candidates) over_budget("basis enumeration", estimate, budget);
    std::vector<std::size_t> candidates(n);
    for (std::size_t v = 0; v < n; ++v) candidates[v] = v;
    SubsetSearch search(dist, candidates, budget.use_symmetry ? symmetry_tags(g) : std::vector<SymmetryTag>{});
    std::uint64_t nodes = 0;
    std::vector<ResolvingSet> out;
    for (const auto& subset : search.run(k, Mode::All, budget.workers, nodes)) out.push_back(to_set(g, subset));
    return out;
}

int brute_force_adjacency_dimension(const SimpleGraph& host, const SearchBudget& budget) {
    const std::size_t n = host.size();
    if (n == 0) throw InputError("host graph is empty");
    if (n == 1) return 1;
    if (n > budget.max_vertices) throw BudgetError("host graph exceeds the vertex cap");
    DistanceTable table(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) table.set(u, v, u == v ? 0 : host.adjacent(u, v) ? 1 : 2);
    std::vector<std::size_t> candidates(n);
    for (std::size_t v = 0; v < n; ++v) candidates[v] = v;
    SubsetSearch search(table, candidates, {});
    std::uint64_t estimate = 0, nodes = 0;
    for (int k = 1; static_cast<std::size_t>(k) <= n; ++k) {
        check_subset_size(k, budget);
        estimate += binomial(n, static_cast<std::uint64_t>(k));
        if (estimate > budget.max_candidates) over_budget("adjacency dimension search", estimate, budget);
        if (!search.run(k, Mode::FirstHit, budget.workers, nodes).empty()) return k;
    }
    throw InternalError("no adjacency resolving set found, but the full vertex set always resolves");
}

bool exists_hub_free_basis(const GridGraph& g, int k, const SearchBudget& budget) {
    if (k < 1) throw InputError("subset size must be positive");
    check_subset_size(k, budget);
    const DistanceTable dist = bfs_distances(g, budget.max_vertices);
    const std::size_t n = dist.size();
    std::uint64_t estimate = binomial(n - 1, static_cast<std::uint64_t>(k));
    if (estimate > budget.max_candidates) over_budget("hub-free basis search", estimate, budget);
    std::vector<std::size_t> candidates;
    for (std::size_t v = 1; v < n; ++v) candidates.push_back(v);  // position 0 is the hub
    SubsetSearch search(dist, candidates, budget.use_symmetry ? symmetry_tags(g) : std::vector<SymmetryTag>{});
    std::uint64_t nodes = 0;
    return !search.run(k, Mode::FirstHit, budget.workers, nodes).empty();
}

}  // namespace starprod
