#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using starprod::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& body) {
    fs::path p = fs::temp_directory_path() / ("starprod_cli_" + name);
    std::ofstream(p) << body;
    return p.string();
}

}  // namespace

TEST_CASE("dim") {
    Result r = call({"dim", "--m", "2", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"m\":2,\"n\":5,\"dim\":4,\"regime\":\"B\"}\n");
    CHECK(call({"dim", "--m", "0", "--n", "5"}).code == 2);
    CHECK(nlohmann::json::parse(call({"dim", "--m", "14", "--n", "14"}).out)["dim"] == 18);
    CHECK(call({"dim", "--m", "3"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("basis formats") {
    Result text = call({"basis", "--m", "4", "--n", "4"});
    CHECK(text.code == 0);
    CHECK(text.out == "a1,1\na1,2\na2,3\na3,3\nr4\n");
    CHECK(call({"basis", "--m", "1", "--n", "6", "--format", "csv"}).out == "c1,c2,a1,3,a1,4,a1,5\n");

    auto j = nlohmann::json::parse(call({"basis", "--m", "6", "--n", "6", "--format", "json"}).out);
    CHECK(j["dim"] == 8);
    CHECK(j["regime"] == "D");
    CHECK(j["provenance"] == "constructed-regime-D");
    CHECK(j["landmarks"].size() == 8);
    CHECK(call({"basis", "--m", "4", "--n", "4", "--format", "xml"}).code == 2);
}

TEST_CASE("verify") {
    std::string built = write_file("built.txt", call({"basis", "--m", "7", "--n", "9"}).out);
    Result ok = call({"verify", "--m", "7", "--n", "9", "--set", built});
    CHECK(ok.code == 0);
    CHECK(ok.out == "resolving\n");

    std::string rc = write_file("rc.txt", "r1\nc1\n");
    Result neg = call({"verify", "--m", "1", "--n", "1", "--set", rc});
    CHECK(neg.code == 1);
    CHECK(neg.out == "hub a1,1\n");

    std::string bad = write_file("bad.txt", "r1\nnot-a-vertex\n");
    CHECK(call({"verify", "--m", "1", "--n", "1", "--set", bad}).code == 2);
    std::string out_of_range = write_file("oor.txt", "r3\n");
    CHECK(call({"verify", "--m", "2", "--n", "2", "--set", out_of_range}).code == 2);
    CHECK(call({"verify", "--m", "2", "--n", "2", "--set", "/nonexistent"}).code == 2);
}

TEST_CASE("basis then verify for every small grid") {
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= 12; ++n) {
            std::string ms = std::to_string(m), ns = std::to_string(n);
            std::string f = write_file("rt.txt", call({"basis", "--m", ms, "--n", ns}).out);
            CHECK(call({"verify", "--m", ms, "--n", ns, "--set", f}).code == 0);
        }
}

TEST_CASE("hgraph") {
    std::string d66 = write_file("d66.txt", call({"basis", "--m", "6", "--n", "6"}).out);
    auto j = nlohmann::json::parse(call({"hgraph", "--m", "6", "--n", "6", "--set", d66, "--strict"}).out);
    CHECK(j["report"]["path_orders"] == nlohmann::json::array({5, 5, 5, 5}));
    CHECK(j["audit"]["passed"] == true);
    CHECK(j["edges"].size() == 16);

    std::string empty = write_file("empty.txt", "# nothing\n");
    Result e = call({"hgraph", "--m", "2", "--n", "3", "--set", empty});
    CHECK(e.code == 0);
    auto je = nlohmann::json::parse(e.out);
    CHECK(je["report"]["isolated_right"] == 5);
    CHECK(je["audit"]["passed"] == false);

    std::string hub = write_file("hub.txt", "hub\nr1\n");
    CHECK(call({"hgraph", "--m", "2", "--n", "3", "--set", hub}).code == 2);

    Result dot = call({"hgraph", "--m", "6", "--n", "6", "--set", d66, "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("// path_orders: 5 5 5 5\n", 0) == 0);
    CHECK(dot.out.find("graph H {") != std::string::npos);
}

TEST_CASE("oracle") {
    auto j = nlohmann::json::parse(call({"oracle", "--m", "3", "--n", "3"}).out);
    CHECK(j["dim"] == 4);
    CHECK(j["witness"].size() == 4);

    Result over = call({"oracle", "--m", "10", "--n", "10"});
    CHECK(over.code == 3);
    CHECK(over.err.find("budget") != std::string::npos);

    auto e = nlohmann::json::parse(call({"oracle", "--m", "1", "--n", "1", "--enumerate"}).out);
    CHECK(e["count"] == e["bases"].size());
    bool hub_free = false;
    for (const auto& b : e["bases"]) {
        bool has_hub = false;
        for (const auto& v : b) has_hub = has_hub || v == "hub";
        hub_free = hub_free || !has_hub;
    }
    CHECK(hub_free);

    auto s = nlohmann::json::parse(call({"oracle", "--m", "3", "--n", "4", "--symmetry", "--workers", "2"}).out);
    CHECK(s["dim"] == 4);
    CHECK(call({"oracle", "--m", "3", "--n", "3", "--max-candidates", "10"}).code == 3);
}

TEST_CASE("sweep") {
    Result r = call({"sweep", "--n-max", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "m,n,dim\n1,1,2\n1,2,2\n1,3,3\n2,2,2\n2,3,3\n3,3,4\n");

    Result f = call({"sweep", "--fixed-n", "14"});
    std::istringstream lines(f.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "m,n,dim");
    std::vector<int> dims;
    while (std::getline(lines, line)) dims.push_back(std::stoi(line.substr(line.rfind(',') + 1)));
    CHECK(dims == std::vector<int>{13, 13, 13, 13, 13, 13, 14, 14, 15, 16, 16, 17, 18, 18});

    CHECK(call({"sweep"}).code == 2);
    CHECK(call({"sweep", "--n-max", "3", "--fixed-n", "4"}).code == 2);

    fs::path out = fs::temp_directory_path() / "starprod_cli_sweep.csv";
    CHECK(call({"sweep", "--n-max", "3", "--out", out.string()}).out.empty());
    std::ifstream in(out);
    std::stringstream body;
    body << in.rdbuf();
    CHECK(body.str() == r.out);
}

TEST_CASE("localize") {
    auto j = nlohmann::json::parse(call({"localize", "--m", "5", "--n", "7", "--noise", "0"}).out);
    CHECK(j["misidentification_rate"] == 0.0);
    CHECK(j["ambiguity_rate"] == 0.0);
    CHECK(j["min_pairwise_l1"] == 2);
    CHECK(j["basis_size"] == 8);
    CHECK(j["metric"] == "hamming");

    std::vector<std::string> args{"localize", "--m", "5", "--n", "7", "--noise", "0.05", "--seed", "42"};
    CHECK(call(args).out == call(args).out);
    args.insert(args.end(), {"--workers", "3"});
    CHECK(call(args).out == call({"localize", "--m", "5", "--n", "7", "--noise", "0.05", "--seed", "42"}).out);

    CHECK(call({"localize", "--m", "5", "--n", "7", "--noise", "1.5"}).code == 2);
    CHECK(call({"localize", "--m", "5", "--n", "7", "--metric", "euclid"}).code == 2);
    CHECK(call({"localize", "--m", "5", "--n", "7", "--trials", "0"}).code == 2);
}

TEST_CASE("export") {
    Result r = call({"export", "--m", "1", "--n", "1"});
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
    auto j = nlohmann::json::parse(call({"export", "--m", "3", "--n", "4", "--format", "json"}).out);
    CHECK(j["edges"].size() == 3 + 4 + 24);
    CHECK(call({"export", "--m", "2", "--n", "2", "--format", "dot"}).out.rfind("graph G {", 0) == 0);
}
