#pragma once

// File formats: landmark-set files, grid and auxiliary-graph exports, and
// the JSON records emitted by the command-line tool.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "starprod/aux_graph.hpp"
#include "starprod/basis.hpp"
#include "starprod/grid.hpp"
#include "starprod/localization.hpp"

namespace starprod {

using Json = nlohmann::ordered_json;

// One vertex per line; lines starting with '#' and blank lines are skipped.
// Throws InputError naming the offending line.
std::vector<Vertex> read_landmarks(std::istream& in);
std::vector<Vertex> read_landmarks_file(const std::string& path);

void write_landmarks_text(std::ostream& out, const ResolvingSet& set);
void write_landmarks_csv(std::ostream& out, const ResolvingSet& set);
Json landmarks_json(const std::vector<Vertex>& landmarks);

void write_grid_edgelist(std::ostream& out, const GridGraph& g);
void write_grid_dot(std::ostream& out, const GridGraph& g);
Json grid_json(const GridGraph& g);

void write_aux_dot(std::ostream& out, const AuxGraph& h);
Json component_report_json(const ComponentReport& report);
Json audit_json(const AuditReport& audit);

struct LocalizationRecord {
    int m = 0;
    int n = 0;
    std::size_t basis_size = 0;
    DecodeMetric metric = DecodeMetric::Hamming;
    double p = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double misidentification_rate = 0.0;
    double ambiguity_rate = 0.0;
    int min_pairwise_l1 = 0;
};

Json localization_json(const LocalizationRecord& record);

}  // namespace starprod
