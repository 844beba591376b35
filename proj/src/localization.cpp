#include "starprod/localization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "starprod/errors.hpp"

namespace starprod {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits; avoids implementation-defined
// distribution objects so streams match across standard libraries.
double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int code_distance(const MetricCode& a, const MetricCode& b, DecodeMetric metric) {
    int total = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        int diff = std::abs(a[k] - b[k]);
        total += metric == DecodeMetric::Hamming ? (diff != 0) : diff;
    }
    return total;
}

}  // namespace

std::string to_string(DecodeMetric metric) {
    return metric == DecodeMetric::Hamming ? "hamming" : "l1";
}

DecodeMetric parse_decode_metric(const std::string& text) {
    if (text == "hamming") return DecodeMetric::Hamming;
    if (text == "l1") return DecodeMetric::L1;
    throw InputError("unknown metric '" + text + "' (expected hamming or l1)");
}

CodeTable::CodeTable(const GridGraph& g, const ResolvingSet& basis) : graph_(g), basis_(basis) {
    if (!basis.verified_for(g)) throw InputError("code table needs a basis verified for this grid");
    codes_.reserve(g.vertex_count());
    for (const auto& v : g.vertices()) codes_.push_back(metric_code(g, v, basis.landmarks()));

    min_pairwise_l1_ = std::numeric_limits<int>::max();
    for (std::size_t a = 0; a < codes_.size(); ++a)
        for (std::size_t b = a + 1; b < codes_.size(); ++b)
            min_pairwise_l1_ = std::min(min_pairwise_l1_, code_distance(codes_[a], codes_[b], DecodeMetric::L1));
    if (codes_.size() < 2) min_pairwise_l1_ = 0;
}

CodeTable code_table(const GridGraph& g, const ResolvingSet& basis) {
    return CodeTable(g, basis);
}

DecodeResult decode(const MetricCode& code, const CodeTable& table, DecodeMetric metric) {
    if (code.size() != table.code_length())
        throw InputError("code has " + std::to_string(code.size()) + " entries, table expects " +
                         std::to_string(table.code_length()));
    DecodeResult result;
    result.distance = std::numeric_limits<int>::max();
    std::vector<std::size_t> best;
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        int d = code_distance(code, table.code(idx), metric);
        if (d < result.distance) {
            result.distance = d;
            best.assign(1, idx);
        } else if (d == result.distance) {
            best.push_back(idx);
        }
    }
    for (std::size_t idx : best) result.nearest.push_back(table.graph().vertex_at(idx));
    return result;
}

MetricCode perturb(const MetricCode& ideal, const NoiseModel& noise, std::uint64_t trial) {
    std::mt19937_64 rng(mix(mix(noise.seed) ^ trial));
    MetricCode out = ideal;
    for (int& entry : out) {
        if (unit(rng) < noise.flip_probability) {
            int step = (rng() & 1U) ? 1 : -1;
            entry = std::max(0, entry + step);
        }
    }
    return out;
}

SimulationResult simulate(const CodeTable& table, const NoiseModel& noise, std::uint64_t trials, DecodeMetric metric,
                          unsigned workers) {
    if (trials < 1) throw InputError("trials must be at least 1");
    if (!(noise.flip_probability >= 0.0 && noise.flip_probability <= 1.0))
        throw InputError("flip probability must lie in [0, 1]");

    workers = std::max(1u, workers);
    std::vector<SimulationResult> partial(workers);
    auto job = [&](unsigned id) {
        // Contiguous shard [lo, hi) of the trial range.
        std::uint64_t lo = trials * id / workers, hi = trials * (id + 1) / workers;
        SimulationResult& acc = partial[id];
        for (std::uint64_t t = lo; t < hi; ++t) {
            std::size_t truth = static_cast<std::size_t>(t % table.size());
            auto result = decode(perturb(table.code(truth), noise, t), table, metric);
            if (!result.unique()) ++acc.ambiguous;
            else if (result.nearest.front() != table.graph().vertex_at(truth)) ++acc.misidentified;
        }
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(job, id);
        for (auto& t : pool) t.join();
    }

    SimulationResult total;
    total.trials = trials;
    for (const auto& p : partial) {
        total.misidentified += p.misidentified;
        total.ambiguous += p.ambiguous;
    }
    total.misidentification_rate = static_cast<double>(total.misidentified) / static_cast<double>(trials);
    total.ambiguity_rate = static_cast<double>(total.ambiguous) / static_cast<double>(trials);
    return total;
}

}  // namespace starprod
