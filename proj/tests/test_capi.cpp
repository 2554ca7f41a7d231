#include <doctest.h>

#include <cstring>
#include <string>

#include "daisycube.h"

TEST_CASE("constructors and basic queries") {
    dc_graph* g = nullptr;
    REQUIRE(dc_graph_fibonacci(4, 0, &g) == DC_OK);
    REQUIRE(g != nullptr);
    CHECK(dc_graph_dimension(g) == 4);
    CHECK(dc_graph_vertex_count(g) == 8);
    CHECK(dc_graph_edge_count(g) == 10);
    dc_graph_free(g);

    g = nullptr;
    const char* gens[] = {"110", "011"};
    REQUIRE(dc_graph_daisy(3, gens, 2, 0, &g) == DC_OK);
    REQUIRE(g != nullptr);
    CHECK(dc_graph_vertex_count(g) == 6);
    dc_graph_free(g);
}

TEST_CASE("size limit and parse errors surface as status codes") {
    dc_graph* g = nullptr;
    CHECK(dc_graph_hypercube(25, 0, &g) == DC_ERR_SIZE_LIMIT);
    CHECK(std::strlen(dc_last_error()) > 0);
    CHECK(dc_graph_from_json("{bad", &g) == DC_ERR_PARSE);
    CHECK(dc_graph_from_json(R"({"n":2,"vertices":["00","00"]})", &g) == DC_ERR_PARSE);
    CHECK(dc_graph_fibonacci(-1, 0, &g) == DC_ERR_INVALID_ARG);
    CHECK(dc_graph_avoiding_pattern(3, nullptr, 0, &g) == DC_ERR_INVALID_ARG);
}

TEST_CASE("JSON round trip through the C surface") {
    dc_graph* g = nullptr;
    REQUIRE(dc_graph_lucas(3, 0, &g) == DC_OK);
    REQUIRE(g != nullptr);
    char* text = nullptr;
    REQUIRE(dc_graph_to_json(g, &text) == DC_OK);
    dc_graph* back = nullptr;
    REQUIRE(dc_graph_from_json(text, &back) == DC_OK);
    CHECK(dc_graph_vertex_count(back) == dc_graph_vertex_count(g));
    char* text2 = nullptr;
    REQUIRE(dc_graph_to_json(back, &text2) == DC_OK);
    CHECK(std::string(text) == text2);
    dc_string_free(text);
    dc_string_free(text2);
    dc_graph_free(back);
    dc_graph_free(g);
}

TEST_CASE("index methods agree on a daisy cube") {
    dc_graph* g = nullptr;
    REQUIRE(dc_graph_fibonacci(4, 0, &g) == DC_OK);
    REQUIRE(g != nullptr);
    dc_index_report semi, oracle, cor;
    REQUIRE(dc_graph_indices(g, DC_METHOD_SEMICUBE, &semi) == DC_OK);
    REQUIRE(dc_graph_indices(g, DC_METHOD_ORACLE, &oracle) == DC_OK);
    REQUIRE(dc_graph_indices(g, DC_METHOD_COROLLARY, &cor) == DC_OK);
    CHECK(semi.wiener == 54);
    CHECK(semi.mostar == 28);
    CHECK(oracle.wiener == 54);
    CHECK(oracle.mostar == 28);
    CHECK(cor.wiener == 54);
    CHECK(cor.mostar == 28);
    CHECK(semi.relation_holds == 1);
    CHECK(semi.residual == 0);
    dc_graph_free(g);
}

TEST_CASE("method preconditions are enforced") {
    // C_6 minus a vertex: connected but not isometric
    dc_graph* g = nullptr;
    REQUIRE(dc_graph_from_json(R"({"n":3,"vertices":["000","100","110","001","011"]})", &g) ==
            DC_OK);
    dc_index_report r;
    CHECK(dc_graph_indices(g, DC_METHOD_SEMICUBE, &r) == DC_ERR_NOT_ISOMETRIC);
    dc_graph_free(g);

    // C_6 itself: isometric but not downward-closed
    g = nullptr;
    REQUIRE(dc_graph_from_json(R"({"n":3,"vertices":["000","100","110","001","011","111"]})",
                               &g) == DC_OK);
    CHECK(dc_graph_indices(g, DC_METHOD_COROLLARY, &r) == DC_ERR_NOT_DAISY);
    CHECK(dc_graph_indices(g, DC_METHOD_ORACLE, &r) == DC_OK);
    CHECK(r.wiener == 27);
    CHECK(r.mostar == 0);
    CHECK(r.residual == 18);
    CHECK(r.relation_holds == 0);
    dc_graph_free(g);

    // two antipodal vertices: disconnected
    g = nullptr;
    REQUIRE(dc_graph_from_json(R"({"n":3,"vertices":["000","110"]})", &g) == DC_OK);
    CHECK(dc_graph_indices(g, DC_METHOD_ORACLE, &r) == DC_ERR_DISCONNECTED);
    dc_graph_free(g);
}

TEST_CASE("direction profile export") {
    dc_graph* g = nullptr;
    REQUIRE(dc_graph_fibonacci(3, 0, &g) == DC_OK);
    REQUIRE(g != nullptr);
    uint64_t e[3], w0[3], w1[3];
    REQUIRE(dc_graph_direction_profile(g, e, w0, w1) == DC_OK);
    CHECK(w1[0] == 2);
    CHECK(w1[1] == 1);
    CHECK(w1[2] == 2);
    CHECK(w0[1] == 4);
    CHECK(e[1] == 1);
    dc_graph_free(g);
}

TEST_CASE("verify reports") {
    dc_graph* g = nullptr;
    REQUIRE(dc_graph_fibonacci(8, 0, &g) == DC_OK);
    REQUIRE(g != nullptr);
    char* report = nullptr;
    int ok = -1;
    REQUIRE(dc_graph_verify(g, &report, &ok) == DC_OK);
    CHECK(ok == 1);
    CHECK(std::string(report).find("\"ok\":true") != std::string::npos);
    dc_string_free(report);
    dc_graph_free(g);

    g = nullptr;
    REQUIRE(dc_graph_from_json(R"({"n":3,"vertices":["000","100","110","001","011","111"]})",
                               &g) == DC_OK);
    report = nullptr;
    ok = -1;
    REQUIRE(dc_graph_verify(g, &report, &ok) == DC_OK);
    CHECK(ok == 0);
    std::string text(report);
    CHECK(text.find("\"first_failure\":\"downward_closed\"") != std::string::npos);
    CHECK(text.find("\"residual\":18") != std::string::npos);
    dc_string_free(report);
    dc_graph_free(g);
}
