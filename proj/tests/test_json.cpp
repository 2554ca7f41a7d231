#include <doctest.h>

#include <random>

#include "daisy/core.hpp"
#include "daisy/json_io.hpp"

using namespace daisy;

TEST_CASE("graph JSON round trip") {
    auto g = fibonacci_cube(3);
    auto text = graph_to_json(g);
    CHECK(text == R"({"n":3,"vertices":["000","100","010","001","101"]})");
    auto back = graph_from_json(text);
    CHECK(back.n == g.n);
    CHECK(back.vertices == g.vertices);

    SUBCASE("byte-stable: serializing twice is identical") {
        CHECK(graph_to_json(back) == text);
    }
}

TEST_CASE("K_1 serializes as the empty string vertex") {
    auto text = graph_to_json(hypercube(0));
    CHECK(text == R"({"n":0,"vertices":[""]})");
    CHECK(graph_from_json(text).vertices == std::vector<Label>{0});
}

TEST_CASE("graph JSON rejects malformed input") {
    CHECK_THROWS_AS(graph_from_json("not json"), Error);
    CHECK_THROWS_AS(graph_from_json(R"({"vertices":[]})"), Error);
    CHECK_THROWS_AS(graph_from_json(R"({"n":2,"vertices":["00","00"]})"), Error);
    CHECK_THROWS_AS(graph_from_json(R"({"n":2,"vertices":["000"]})"), Error);
    CHECK_THROWS_AS(graph_from_json(R"({"n":2,"vertices":["0x"]})"), Error);
    CHECK_THROWS_AS(graph_from_json(R"({"n":2,"vertices":[]})"), Error);
    CHECK_THROWS_AS(graph_from_json(R"({"n":-1,"vertices":["0"]})"), Error);
}

TEST_CASE("generator JSON") {
    auto gen = generators_from_json(R"({"n":3,"generators":["110","100","011"]})");
    CHECK(gen.n == 3);
    CHECK(gen.maximal.size() == 2); // "100" is dominated by "110"
    CHECK(daisy_closure(gen).vertices.size() == 6);

    CHECK_THROWS_AS(generators_from_json(R"({"n":3,"generators":[]})"), Error);
    CHECK_THROWS_AS(generators_from_json(R"({"n":3})"), Error);
}

TEST_CASE("report and profile serialization") {
    auto g = fibonacci_cube(3);
    auto p = direction_profile(g);
    auto r = indices_from_profile(p, g.vertices.size());
    CHECK(report_to_json(r) ==
          R"({"E":5,"Mo":7,"V":5,"W":16,"method":"corollary","relation_holds":true,"residual":0})");
    CHECK(profile_to_json(p) == R"({"e":[2,1,2],"n":3,"w0":[3,4,3],"w1":[2,1,2]})");
}

TEST_CASE("round trip holds on random daisy cubes") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        std::vector<Label> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(rng() & ((Label{1} << n) - 1));
        auto g = daisy_closure(make_generator_set(n, gens));
        auto back = graph_from_json(graph_to_json(g));
        CHECK(back.n == g.n);
        CHECK(back.vertices == g.vertices);
    }
}
