#pragma once

// Landmark-based localization on the star-product grid: every vertex is
// identified by its hop-count vector to a resolving set, and noisy vectors
// are decoded to the nearest ideal code.

#include <cstdint>
#include <string>
#include <vector>

#include "starprod/grid.hpp"
#include "starprod/resolver.hpp"

namespace starprod {

enum class DecodeMetric { Hamming, L1 };

std::string to_string(DecodeMetric metric);
DecodeMetric parse_decode_metric(const std::string& text);

class CodeTable {
public:
    // Throws InputError unless basis has been verified to resolve g.
    CodeTable(const GridGraph& g, const ResolvingSet& basis);

    const GridGraph& graph() const { return graph_; }
    const ResolvingSet& basis() const { return basis_; }
    std::size_t size() const { return codes_.size(); }
    std::size_t code_length() const { return basis_.size(); }

    // Codes in canonical vertex order.
    const MetricCode& code(std::size_t index) const { return codes_.at(index); }
    const MetricCode& code_of(const Vertex& v) const { return codes_.at(graph_.index_of(v)); }

    // Smallest L1 distance between the codes of two distinct vertices.
    int min_pairwise_l1() const { return min_pairwise_l1_; }

private:
    GridGraph graph_;
    ResolvingSet basis_;
    std::vector<MetricCode> codes_;
    int min_pairwise_l1_ = 0;
};

CodeTable code_table(const GridGraph& g, const ResolvingSet& basis);

struct DecodeResult {
    std::vector<Vertex> nearest;  // every vertex at the minimum distance, canonical order
    int distance = 0;

    bool unique() const { return nearest.size() == 1; }
};

// Nearest ideal code under the chosen metric. Ties are reported, not broken.
DecodeResult decode(const MetricCode& code, const CodeTable& table, DecodeMetric metric = DecodeMetric::Hamming);

// Each coordinate is perturbed with probability p by +1 or -1 hop (equal
// odds), clamped at 0. Trial t draws from a stream derived from (seed, t).
struct NoiseModel {
    double flip_probability = 0.0;
    std::uint64_t seed = 0;
};

MetricCode perturb(const MetricCode& ideal, const NoiseModel& noise, std::uint64_t trial);

struct SimulationResult {
    std::uint64_t trials = 0;
    std::uint64_t misidentified = 0;  // decoded uniquely to the wrong vertex
    std::uint64_t ambiguous = 0;      // tie between several vertices
    double misidentification_rate = 0.0;
    double ambiguity_rate = 0.0;
};

// Trial t localizes vertex t mod |V| (canonical order). Results do not
// depend on the worker count.
SimulationResult simulate(const CodeTable& table, const NoiseModel& noise, std::uint64_t trials,
                          DecodeMetric metric = DecodeMetric::Hamming, unsigned workers = 1);

}  // namespace starprod
