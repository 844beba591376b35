#pragma once

// Auxiliary bipartite graph H(G, B) for a landmark set B of the star product.
//
// Left part: one primed copy b' per landmark. Right part: all row and column
// vertices. A cell landmark a(i,j) contributes edges r_i--a'(i,j) and
// c_j--a'(i,j); a row or column landmark x contributes the edge x--x'.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starprod/grid.hpp"
#include "starprod/resolver.hpp"
#include "starprod/simple_graph.hpp"

namespace starprod {

class AuxGraph {
public:
    // Throws InputError if B contains the hub, a duplicate, or a vertex
    // outside g.
    AuxGraph(const GridGraph& g, std::span<const Vertex> landmarks);

    const GridGraph& grid() const { return grid_; }

    // Landmarks in the order given; node k of the graph is the copy of left()[k].
    const std::vector<Vertex>& left() const { return left_; }
    // Rows r1..rm then columns c1..cn; node left().size() + k is right()[k].
    const std::vector<Vertex>& right() const { return right_; }

    const SimpleGraph& graph() const { return graph_; }
    // (left position, right position) pairs, sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    std::size_t node_count() const { return graph_.size(); }
    bool is_left(std::size_t node) const { return node < left_.size(); }
    std::size_t right_node(const Vertex& v) const;
    std::vector<std::size_t> left_nodes() const;
    std::vector<std::size_t> right_nodes() const;

    // "p_<vertex>" for primed landmarks, the plain vertex text otherwise.
    std::string label(std::size_t node) const;

private:
    GridGraph grid_;
    std::vector<Vertex> left_;
    std::vector<Vertex> right_;
    SimpleGraph graph_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

AuxGraph build_aux(const GridGraph& g, std::span<const Vertex> landmarks);

struct Component {
    std::vector<std::size_t> nodes;  // ascending
    std::size_t edge_count = 0;
    std::size_t max_degree = 0;
    bool is_path() const { return edge_count + 1 == nodes.size() && max_degree <= 2; }
};

std::vector<Component> components(const AuxGraph& h);

struct ComponentReport {
    std::vector<int> path_orders;  // orders of path components, descending
    int non_path_count = 0;
    int isolated_right = 0;
    int max_degree = 0;

    int count_paths_of_order(int order) const;
};

ComponentReport classify_components(const AuxGraph& h);

// Whether B' gives the row and column vertices distinct adjacency codes in H.
Verdict<Vertex> check_B_prime_resolves(const AuxGraph& h);

struct AuditRule {
    std::string name;
    bool passed = true;
    std::string detail;
    bool informational = false;  // reported, but not counted by AuditReport::passed()
};

struct AuditReport {
    std::vector<AuditRule> rules;
    // Index = degree in H, value = number of row (resp. column) vertices.
    std::vector<int> row_degree_histogram;
    std::vector<int> col_degree_histogram;

    bool passed() const;
    const AuditRule* find(const std::string& name) const;
};

// Checks the component structure that minimum bases are known to produce:
//   at_most_one_isolated   <= 1 isolated row/column vertex
//   no_p3                  no component is a 3-vertex path
//   even_paths_at_most_4   every even-order path component has order <= 4
//   paths_at_most_9        no path component longer than 9 vertices
//   at_most_one_p9, at_most_two_p7, not_p7_and_p9
//   b_prime_resolves       B' adjacency-resolves the rows and columns
// With strict_regime_d, additionally:
//   only_p5_p2_p1          every component is a P5, single edge or isolated vertex
//   leftovers_at_most_two  single edges + isolated vertices <= 2
// degree3_when_both_parts is informational.
AuditReport structural_audit(const AuxGraph& h, bool strict_regime_d);

}  // namespace starprod
