#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "starprod/aux_graph.hpp"
#include "starprod/basis.hpp"
#include "starprod/errors.hpp"
#include "starprod/io.hpp"
#include "starprod/localization.hpp"
#include "starprod/oracle.hpp"
#include "starprod/resolver.hpp"

namespace starprod::cli {

namespace {

struct Options {
    int m = 0;
    int n = 0;
    std::string format;
    std::string set_file;
    bool strict = false;
    std::uint64_t max_candidates = SearchBudget{}.max_candidates;
    bool symmetry = false;
    bool enumerate = false;
    unsigned workers = 1;
    int n_max = 0;
    int fixed_n = 0;
    std::string out_file;
    double noise = 0.05;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    std::string metric = "hamming";
};

void add_grid(CLI::App* cmd, Options& opt) {
    cmd->add_option("--m", opt.m, "leaves of the first star")->required();
    cmd->add_option("--n", opt.n, "leaves of the second star")->required();
}

int cmd_dim(const Options& opt, std::ostream& out) {
    Json j;
    j["m"] = opt.m;
    j["n"] = opt.n;
    j["dim"] = dimension(opt.m, opt.n);
    j["regime"] = std::string(1, to_char(regime_of(opt.m, opt.n).tag));
    out << j.dump() << '\n';
    return kOk;
}

int cmd_basis(const Options& opt, std::ostream& out) {
    ResolvingSet basis = build_basis(opt.m, opt.n);
    if (opt.format == "json") {
        Json j;
        j["m"] = opt.m;
        j["n"] = opt.n;
        j["dim"] = basis.size();
        j["regime"] = std::string(1, to_char(regime_of(opt.m, opt.n).tag));
        j["provenance"] = to_string(basis.provenance());
        j["landmarks"] = landmarks_json(basis.landmarks());
        out << j.dump() << '\n';
    } else if (opt.format == "csv") {
        write_landmarks_csv(out, basis);
    } else {
        write_landmarks_text(out, basis);
    }
    return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    GridGraph g(opt.m, opt.n);
    ResolvingSet set(read_landmarks_file(opt.set_file));
    auto verdict = set.verify(g);
    if (verdict) {
        out << "resolving\n";
        return kOk;
    }
    out << to_string(verdict.witness->first) << ' ' << to_string(verdict.witness->second) << '\n';
    return kNegative;
}

int cmd_hgraph(const Options& opt, std::ostream& out) {
    GridGraph g(opt.m, opt.n);
    auto landmarks = read_landmarks_file(opt.set_file);
    AuxGraph h(g, landmarks);
    ComponentReport report = classify_components(h);
    AuditReport audit = structural_audit(h, opt.strict);
    if (opt.format == "dot") {
        out << "// path_orders:";
        for (int order : report.path_orders) out << ' ' << order;
        out << "\n// non_path_count: " << report.non_path_count << "\n// isolated_right: " << report.isolated_right
            << "\n// max_degree: " << report.max_degree << '\n';
        for (const auto& rule : audit.rules)
            out << "// audit " << rule.name << ": " << (rule.passed ? "pass" : "FAIL") << " (" << rule.detail << ")\n";
        write_aux_dot(out, h);
    } else {
        Json j;
        j["m"] = opt.m;
        j["n"] = opt.n;
        j["basis_size"] = landmarks.size();
        j["landmarks"] = landmarks_json(landmarks);
        Json edges = Json::array();
        for (auto [l, r] : h.edges()) edges.push_back({h.label(l), h.label(h.left().size() + r)});
        j["edges"] = std::move(edges);
        j["report"] = component_report_json(report);
        j["audit"] = audit_json(audit);
        out << j.dump() << '\n';
    }
    return kOk;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
    GridGraph g(opt.m, opt.n);
    SearchBudget budget;
    budget.max_candidates = opt.max_candidates;
    budget.use_symmetry = opt.symmetry;
    budget.workers = opt.workers;
    OracleResult result = brute_force_dimension(g, budget);
    Json j;
    j["m"] = opt.m;
    j["n"] = opt.n;
    j["dim"] = result.dimension;
    j["witness"] = landmarks_json(result.witness.landmarks());
    if (opt.enumerate) {
        auto bases = enumerate_minimum_bases(g, result.dimension, budget);
        Json list = Json::array();
        for (const auto& b : bases) list.push_back(landmarks_json(b.landmarks()));
        j["count"] = bases.size();
        j["bases"] = std::move(list);
    }
    j["nodes_visited"] = result.nodes_visited;
    out << j.dump() << '\n';
    return kOk;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!opt.out_file.empty()) {
        file.open(opt.out_file);
        if (!file) throw InputError("cannot write '" + opt.out_file + "'");
        sink = &file;
    }
    *sink << "m,n,dim\n";
    if (opt.fixed_n > 0) {
        for (int m = 1; m <= opt.fixed_n; ++m) *sink << m << ',' << opt.fixed_n << ',' << dimension(m, opt.fixed_n) << '\n';
    } else {
        for (int m = 1; m <= opt.n_max; ++m)
            for (int n = m; n <= opt.n_max; ++n) *sink << m << ',' << n << ',' << dimension(m, n) << '\n';
    }
    return kOk;
}

int cmd_localize(const Options& opt, std::ostream& out) {
    if (!(opt.noise >= 0.0 && opt.noise <= 1.0)) throw InputError("--noise must lie in [0, 1]");
    if (opt.trials < 1) throw InputError("--trials must be at least 1");
    GridGraph g(opt.m, opt.n);
    DecodeMetric metric = parse_decode_metric(opt.metric);
    CodeTable table(g, build_basis(opt.m, opt.n));
    NoiseModel noise{opt.noise, opt.seed};
    SimulationResult sim = simulate(table, noise, opt.trials, metric, opt.workers);

    LocalizationRecord record;
    record.m = opt.m;
    record.n = opt.n;
    record.basis_size = table.code_length();
    record.metric = metric;
    record.p = opt.noise;
    record.trials = opt.trials;
    record.seed = opt.seed;
    record.misidentification_rate = sim.misidentification_rate;
    record.ambiguity_rate = sim.ambiguity_rate;
    record.min_pairwise_l1 = table.min_pairwise_l1();
    out << localization_json(record).dump() << '\n';
    return kOk;
}

int cmd_export(const Options& opt, std::ostream& out) {
    GridGraph g(opt.m, opt.n);
    if (opt.format == "dot") write_grid_dot(out, g);
    else if (opt.format == "json") out << grid_json(g).dump() << '\n';
    else write_grid_edgelist(out, g);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Metric dimension and minimum resolving sets of star-product grids"};
    app.require_subcommand(1);
    Options opt;

    auto* dim = app.add_subcommand("dim", "closed-form metric dimension");
    add_grid(dim, opt);

    auto* basis = app.add_subcommand("basis", "minimum resolving set");
    add_grid(basis, opt);
    basis->add_option("--format", opt.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_val("text");

    auto* verify = app.add_subcommand("verify", "check that a landmark file resolves the grid");
    add_grid(verify, opt);
    verify->add_option("--set", opt.set_file, "landmark file")->required();

    auto* hgraph = app.add_subcommand("hgraph", "auxiliary bipartite graph of a landmark file");
    add_grid(hgraph, opt);
    hgraph->add_option("--set", opt.set_file, "landmark file")->required();
    hgraph->add_option("--format", opt.format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}))
        ->default_val("json");
    hgraph->add_flag("--strict", opt.strict, "also audit the P5/P2/P1-only structure");

    auto* oracle = app.add_subcommand("oracle", "brute-force metric dimension");
    add_grid(oracle, opt);
    oracle->add_option("--max-candidates", opt.max_candidates, "cap on candidate subsets");
    oracle->add_flag("--symmetry", opt.symmetry, "search row/column-permutation representatives only");
    oracle->add_flag("--enumerate", opt.enumerate, "list every minimum resolving set");
    oracle->add_option("--workers", opt.workers, "worker threads")->check(CLI::PositiveNumber);

    auto* sweep = app.add_subcommand("sweep", "dimension table as CSV");
    auto* range = sweep->add_option_group("range", "exactly one of");
    range->add_option("--n-max", opt.n_max, "all 1 <= m <= n <= N0")->check(CLI::PositiveNumber);
    range->add_option("--fixed-n", opt.fixed_n, "m = 1..N for a fixed n")->check(CLI::PositiveNumber);
    range->require_option(1);
    sweep->add_option("--out", opt.out_file, "output file (default: stdout)");

    auto* localize = app.add_subcommand("localize", "noisy hop-count localization simulation");
    add_grid(localize, opt);
    localize->add_option("--noise", opt.noise, "per-coordinate perturbation probability");
    localize->add_option("--trials", opt.trials, "number of trials");
    localize->add_option("--seed", opt.seed, "random seed");
    localize->add_option("--metric", opt.metric, "hamming or l1")->check(CLI::IsMember({"hamming", "l1"}));
    localize->add_option("--workers", opt.workers, "worker threads")->check(CLI::PositiveNumber);

    auto* exp = app.add_subcommand("export", "dump the whole grid graph");
    add_grid(exp, opt);
    exp->add_option("--format", opt.format, "dot, json or edgelist")
        ->check(CLI::IsMember({"dot", "json", "edgelist"}))
        ->default_val("edgelist");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (dim->parsed()) return cmd_dim(opt, out);
        if (basis->parsed()) return cmd_basis(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
        if (hgraph->parsed()) return cmd_hgraph(opt, out);
        if (oracle->parsed()) return cmd_oracle(opt, out);
        if (sweep->parsed()) return cmd_sweep(opt, out);
        if (localize->parsed()) return cmd_localize(opt, out);
        if (exp->parsed()) return cmd_export(opt, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    }
    return kUsage;
}

}  // namespace starprod::cli
