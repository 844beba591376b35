#include "starprod/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "starprod/errors.hpp"

namespace starprod {

namespace {

std::string trim(const std::string& s) {
    auto lo = s.find_first_not_of(" \t\r");
    if (lo == std::string::npos) return {};
    auto hi = s.find_last_not_of(" \t\r");
    return s.substr(lo, hi - lo + 1);
}

std::string quoted(const std::string& s) {
    return "\"" + s + "\"";
}

}  // namespace

std::vector<Vertex> read_landmarks(std::istream& in) {
    std::vector<Vertex> out;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        try {
            out.push_back(parse_vertex(text));
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<Vertex> read_landmarks_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open landmark file '" + path + "'");
    return read_landmarks(in);
}

void write_landmarks_text(std::ostream& out, const ResolvingSet& set) {
    for (const auto& v : set) out << to_string(v) << '\n';
}

void write_landmarks_csv(std::ostream& out, const ResolvingSet& set) {
    bool first = true;
    for (const auto& v : set) {
        out << (first ? "" : ",") << to_string(v);
        first = false;
    }
    out << '\n';
}

Json landmarks_json(const std::vector<Vertex>& landmarks) {
    Json arr = Json::array();
    for (const auto& v : landmarks) arr.push_back(to_string(v));
    return arr;
}

namespace {

template <typename Fn>
void for_each_edge(const GridGraph& g, Fn&& fn) {
    // Each edge once, from its endpoint that comes first in canonical order.
    for (const auto& u : g.vertices())
        for (const auto& w : g.neighbors(u))
            if (u < w) fn(u, w);
}

}  // namespace

void write_grid_edgelist(std::ostream& out, const GridGraph& g) {
    for_each_edge(g, [&](const Vertex& u, const Vertex& w) { out << to_string(u) << ' ' << to_string(w) << '\n'; });
}

void write_grid_dot(std::ostream& out, const GridGraph& g) {
    out << "graph G {\n";
    out << "  graph [m=\"" << g.m() << "\", n=\"" << g.n() << "\"];\n";
    for (const auto& v : g.vertices()) out << "  " << quoted(to_string(v)) << ";\n";
    for_each_edge(g, [&](const Vertex& u, const Vertex& w) {
        out << "  " << quoted(to_string(u)) << " -- " << quoted(to_string(w)) << ";\n";
    });
    out << "}\n";
}

Json grid_json(const GridGraph& g) {
    Json j;
    j["m"] = g.m();
    j["n"] = g.n();
    j["vertices"] = landmarks_json(g.vertices());
    Json edges = Json::array();
    for_each_edge(g, [&](const Vertex& u, const Vertex& w) { edges.push_back({to_string(u), to_string(w)}); });
    j["edges"] = std::move(edges);
    return j;
}

void write_aux_dot(std::ostream& out, const AuxGraph& h) {
    out << "graph H {\n";
    out << "  graph [m=\"" << h.grid().m() << "\", n=\"" << h.grid().n() << "\", basis_size=\"" << h.left().size()
        << "\"];\n";
    for (std::size_t node = 0; node < h.node_count(); ++node) out << "  " << quoted(h.label(node)) << ";\n";
    const std::size_t offset = h.left().size();
    for (auto [l, r] : h.edges())
        out << "  " << quoted(h.label(l)) << " -- " << quoted(h.label(offset + r)) << ";\n";
    out << "}\n";
}

Json component_report_json(const ComponentReport& report) {
    Json j;
    j["path_orders"] = report.path_orders;
    j["non_path_count"] = report.non_path_count;
    j["isolated_right"] = report.isolated_right;
    j["max_degree"] = report.max_degree;
    return j;
}

Json audit_json(const AuditReport& audit) {
    Json j;
    j["passed"] = audit.passed();
    Json rules = Json::array();
    for (const auto& r : audit.rules) {
        Json rule;
        rule["name"] = r.name;
        rule["passed"] = r.passed;
        rule["detail"] = r.detail;
        if (r.informational) rule["informational"] = true;
        rules.push_back(std::move(rule));
    }
    j["rules"] = std::move(rules);
    j["row_degree_histogram"] = audit.row_degree_histogram;
    j["col_degree_histogram"] = audit.col_degree_histogram;
    return j;
}

Json localization_json(const LocalizationRecord& r) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["basis_size"] = r.basis_size;
    j["metric"] = to_string(r.metric);
    j["p"] = r.p;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["misidentification_rate"] = r.misidentification_rate;
    j["ambiguity_rate"] = r.ambiguity_rate;
    j["min_pairwise_l1"] = r.min_pairwise_l1;
    return j;
}

}  // namespace starprod
