#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "starprod/errors.hpp"
#include "starprod/io.hpp"

using namespace starprod;
using starprod::testing::vs;

TEST_CASE("landmark files") {
    std::istringstream in("# regime C\nr1\n\na2,3\n#c1\nc4\n");
    CHECK(read_landmarks(in) == vs({"r1", "a2,3", "c4"}));

    std::istringstream bad("r1\nrow2\n");
    try {
        read_landmarks(bad);
        FAIL("expected an input error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    CHECK_THROWS_AS(read_landmarks_file("/nonexistent/landmarks.txt"), InputError);
}

TEST_CASE("landmark writers") {
    ResolvingSet b(vs({"c1", "c2", "a1,3"}));
    std::ostringstream text, csv;
    write_landmarks_text(text, b);
    write_landmarks_csv(csv, b);
    CHECK(text.str() == "c1\nc2\na1,3\n");
    CHECK(csv.str() == "c1,c2,a1,3\n");

    std::istringstream back(text.str());
    CHECK(read_landmarks(back) == b.landmarks());
    CHECK(landmarks_json(b.landmarks()).dump() == R"(["c1","c2","a1,3"])");
}

TEST_CASE("grid exports") {
    GridGraph g(1, 1);
    std::ostringstream edges;
    write_grid_edgelist(edges, g);
    std::string s = edges.str();
    CHECK(std::count(s.begin(), s.end(), '\n') == 4);

    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            GridGraph h(m, n);
            Json j = grid_json(h);
            CHECK(j["edges"].size() == static_cast<std::size_t>(m + n + 2 * m * n));
            CHECK(j["vertices"].size() == h.vertex_count());
        }

    std::ostringstream dot;
    write_grid_dot(dot, GridGraph(2, 2));
    CHECK(dot.str().rfind("graph G {", 0) == 0);
    CHECK(dot.str().find("\"hub\" -- \"r1\";") != std::string::npos);
    CHECK(dot.str().find("\"a2,2\"") != std::string::npos);
}

TEST_CASE("aux graph exports") {
    AuxGraph h(GridGraph(2, 2), vs({"a1,1", "a2,1"}));
    std::ostringstream dot;
    write_aux_dot(dot, h);
    CHECK(dot.str().find("basis_size=\"2\"") != std::string::npos);
    CHECK(dot.str().find("\"p_a1,1\" -- \"r1\";") != std::string::npos);

    Json rep = component_report_json(classify_components(h));
    CHECK(rep.dump() == R"({"path_orders":[5,1],"non_path_count":0,"isolated_right":1,"max_degree":2})");

    Json audit = audit_json(structural_audit(h, false));
    CHECK(audit["passed"] == true);
}

TEST_CASE("localization record keys") {
    LocalizationRecord r;
    r.m = 5;
    r.n = 7;
    Json j = localization_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"m", "n", "basis_size", "metric", "p", "trials", "seed",
                                           "misidentification_rate", "ambiguity_rate", "min_pairwise_l1"});
}
