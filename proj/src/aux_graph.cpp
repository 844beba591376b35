#include "starprod/aux_graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_set>

#include "starprod/errors.hpp"

namespace starprod {

AuxGraph::AuxGraph(const GridGraph& g, std::span<const Vertex> landmarks)
    : grid_(g), left_(landmarks.begin(), landmarks.end()) {
    std::unordered_set<Vertex> seen;
    for (const auto& b : left_) {
        g.require(b);
        if (b.is_hub()) throw InputError("the hub cannot be a landmark of the auxiliary graph");
        if (!seen.insert(b).second) throw InputError("duplicate landmark " + to_string(b));
    }
    right_.reserve(static_cast<std::size_t>(g.m() + g.n()));
    for (int i = 1; i <= g.m(); ++i) right_.push_back(Vertex::row(i));
    for (int j = 1; j <= g.n(); ++j) right_.push_back(Vertex::col(j));

    graph_ = SimpleGraph(left_.size() + right_.size());
    const std::size_t offset = left_.size();
    for (std::size_t k = 0; k < left_.size(); ++k) {
        const Vertex& b = left_[k];
        std::vector<Vertex> ends;
        if (b.is_cell()) ends = {Vertex::row(b.i), Vertex::col(b.j)};
        else ends = {b};
        for (const auto& e : ends) {
            std::size_t node = right_node(e);
            graph_.add_edge(k, node);
            edges_.emplace_back(k, node - offset);
        }
    }
    std::sort(edges_.begin(), edges_.end());
}

std::size_t AuxGraph::right_node(const Vertex& v) const {
    grid_.require(v);
    if (v.is_row()) return left_.size() + static_cast<std::size_t>(v.i - 1);
    if (v.is_col()) return left_.size() + static_cast<std::size_t>(grid_.m() + v.j - 1);
    throw InputError("only row and column vertices are in the right part");
}

std::vector<std::size_t> AuxGraph::left_nodes() const {
    std::vector<std::size_t> out(left_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = k;
    return out;
}

std::vector<std::size_t> AuxGraph::right_nodes() const {
    std::vector<std::size_t> out(right_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = left_.size() + k;
    return out;
}

std::string AuxGraph::label(std::size_t node) const {
    if (node >= node_count()) throw InputError("aux node out of range");
    if (is_left(node)) return "p_" + to_string(left_[node]);
    return to_string(right_[node - left_.size()]);
}

AuxGraph build_aux(const GridGraph& g, std::span<const Vertex> landmarks) {
    return AuxGraph(g, landmarks);
}

std::vector<Component> components(const AuxGraph& h) {
    const SimpleGraph& graph = h.graph();
    std::vector<bool> seen(graph.size(), false);
    std::vector<Component> out;
    for (std::size_t root = 0; root < graph.size(); ++root) {
        if (seen[root]) continue;
        Component comp;
        std::size_t degree_sum = 0;
        std::queue<std::size_t> frontier;
        frontier.push(root);
        seen[root] = true;
        while (!frontier.empty()) {
            std::size_t u = frontier.front();
            frontier.pop();
            comp.nodes.push_back(u);
            degree_sum += graph.degree(u);
            comp.max_degree = std::max(comp.max_degree, graph.degree(u));
            for (std::size_t w : graph.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    frontier.push(w);
                }
            }
        }
        std::sort(comp.nodes.begin(), comp.nodes.end());
        comp.edge_count = degree_sum / 2;
        out.push_back(std::move(comp));
    }
    return out;
}

int ComponentReport::count_paths_of_order(int order) const {
    return static_cast<int>(std::count(path_orders.begin(), path_orders.end(), order));
}

ComponentReport classify_components(const AuxGraph& h) {
    ComponentReport report;
    for (const auto& comp : components(h)) {
        if (comp.is_path()) report.path_orders.push_back(static_cast<int>(comp.nodes.size()));
        else ++report.non_path_count;
    }
    std::sort(report.path_orders.begin(), report.path_orders.end(), std::greater<>());
    for (std::size_t node : h.right_nodes())
        if (h.graph().degree(node) == 0) ++report.isolated_right;
    for (std::size_t node = 0; node < h.node_count(); ++node)
        report.max_degree = std::max(report.max_degree, static_cast<int>(h.graph().degree(node)));
    return report;
}

Verdict<Vertex> check_B_prime_resolves(const AuxGraph& h) {
    Verdict<Vertex> verdict;
    const auto universe = h.right_nodes();
    if (h.left().empty()) {
        // Every code is empty, so any two right vertices collide.
        if (universe.size() >= 2) verdict.witness = std::pair{h.right()[0], h.right()[1]};
        return verdict;
    }
    const auto landmarks = h.left_nodes();
    auto raw = is_adjacency_resolving(h.graph(), universe, landmarks);
    if (raw.witness) {
        const std::size_t offset = h.left().size();
        verdict.witness = std::pair{h.right()[raw.witness->first - offset], h.right()[raw.witness->second - offset]};
    }
    return verdict;
}

bool AuditReport::passed() const {
    return std::all_of(rules.begin(), rules.end(), [](const AuditRule& r) { return r.informational || r.passed; });
}

const AuditRule* AuditReport::find(const std::string& name) const {
    for (const auto& r : rules)
        if (r.name == name) return &r;
    return nullptr;
}

AuditReport structural_audit(const AuxGraph& h, bool strict_regime_d) {
    AuditReport audit;
    const ComponentReport report = classify_components(h);
    auto add = [&](std::string name, bool passed, std::string detail, bool informational = false) {
        audit.rules.push_back({std::move(name), passed, std::move(detail), informational});
    };

    add("at_most_one_isolated", report.isolated_right <= 1,
        std::to_string(report.isolated_right) + " isolated row/column vertices");

    int p3 = report.count_paths_of_order(3);
    add("no_p3", p3 == 0, std::to_string(p3) + " paths of order 3");

    int long_even = 0, too_long = 0;
    for (int order : report.path_orders) {
        if (order % 2 == 0 && order > 4) ++long_even;
        if (order > 9) ++too_long;
    }
    add("even_paths_at_most_4", long_even == 0, std::to_string(long_even) + " even paths longer than 4");
    add("paths_at_most_9", too_long == 0, std::to_string(too_long) + " paths longer than 9");
    int p7 = report.count_paths_of_order(7), p9 = report.count_paths_of_order(9);
    add("at_most_one_p9", p9 <= 1, std::to_string(p9) + " paths of order 9");
    add("at_most_two_p7", p7 <= 2, std::to_string(p7) + " paths of order 7");
    add("not_p7_and_p9", p7 == 0 || p9 == 0,
        std::to_string(p7) + " paths of order 7, " + std::to_string(p9) + " of order 9");

    auto resolves = check_B_prime_resolves(h);
    add("b_prime_resolves", resolves.ok(),
        resolves.ok() ? "rows and columns have distinct adjacency codes"
                      : to_string(resolves.witness->first) + " ~ " + to_string(resolves.witness->second));

    if (strict_regime_d) {
        int foreign = report.non_path_count, leftovers = 0;
        for (int order : report.path_orders) {
            if (order == 1 || order == 2) ++leftovers;
            else if (order != 5) ++foreign;
        }
        add("only_p5_p2_p1", foreign == 0, std::to_string(foreign) + " components other than P5, P2, P1");
        add("leftovers_at_most_two", leftovers <= 2, std::to_string(leftovers) + " single edges + isolated vertices");
    }

    const int m = h.grid().m();
    for (std::size_t node : h.right_nodes()) {
        auto deg = h.graph().degree(node);
        auto& hist = (node - h.left().size() < static_cast<std::size_t>(m)) ? audit.row_degree_histogram
                                                                             : audit.col_degree_histogram;
        if (hist.size() <= deg) hist.resize(deg + 1, 0);
        ++hist[deg];
    }
    auto count_at_least = [](const std::vector<int>& hist, std::size_t from) {
        int total = 0;
        for (std::size_t d = from; d < hist.size(); ++d) total += hist[d];
        return total;
    };
    auto count_exactly = [](const std::vector<int>& hist, std::size_t d) { return d < hist.size() ? hist[d] : 0; };
    bool hypothesis = count_at_least(audit.row_degree_histogram, 3) > 0 && count_at_least(audit.col_degree_histogram, 3) > 0;
    if (!hypothesis) {
        add("degree3_when_both_parts", true, "hypothesis not met", true);
    } else {
        bool holds = count_at_least(audit.row_degree_histogram, 3) == 1 &&
                     count_exactly(audit.row_degree_histogram, 3) == 1 &&
                     count_at_least(audit.col_degree_histogram, 3) == 1 &&
                     count_exactly(audit.col_degree_histogram, 3) == 1;
        add("degree3_when_both_parts", holds, "rows and columns both have a vertex of degree >= 3", true);
    }
    return audit;
}

}  // namespace starprod
