#include <doctest.h>

#include "daisy/core.hpp"
#include "daisy/invariants.hpp"
#include "daisy/oracle.hpp"

using namespace daisy;

namespace {

CubeSubgraph c6_labeling() {
    // 6-cycle embedded isometrically in Q_3 but not downward-closed
    return {3, {0b000, 0b001, 0b011, 0b100, 0b110, 0b111}};
}

} // namespace

TEST_CASE("direction profile") {
    SUBCASE("Fibonacci cube of dimension 3") {
        auto p = direction_profile(fibonacci_cube(3));
        CHECK(p.w1 == std::vector<std::uint64_t>{2, 1, 2});
        CHECK(p.w0 == std::vector<std::uint64_t>{3, 4, 3});
        CHECK(p.e == std::vector<std::uint64_t>{2, 1, 2});
        CHECK(p.total_edges() == 5);
    }
    SUBCASE("hypercube is balanced in every direction") {
        auto p = direction_profile(hypercube(3));
        for (int i = 0; i < 3; ++i) {
            CHECK(p.w0[i] == 4);
            CHECK(p.w1[i] == 4);
            CHECK(p.e[i] == 4);
        }
    }
    SUBCASE("Lucas cube of dimension 3 is the star K_1,3") {
        auto p = direction_profile(lucas_cube(3));
        for (int i = 0; i < 3; ++i) {
            CHECK(p.w1[i] == 1);
            CHECK(p.w0[i] == 3);
            CHECK(p.e[i] == 1);
        }
    }
}

TEST_CASE("wiener_semicube") {
    CHECK(wiener_semicube(direction_profile(fibonacci_cube(3))) == 16);
    CHECK(wiener_semicube(direction_profile(hypercube(3))) == 48);
    CHECK(wiener_semicube(direction_profile(hypercube(0))) == 0); // empty sum for K_1
}

TEST_CASE("mostar_semicube") {
    CHECK(mostar_semicube(direction_profile(fibonacci_cube(3))) == 7);
    CHECK(mostar_semicube(direction_profile(hypercube(4))) == 0);
    CHECK(mostar_semicube(direction_profile(lucas_cube(3))) == 6);

    SUBCASE("refuses a direction with w0 < w1") {
        CubeSubgraph g{1, {1}}; // the single vertex "1": w0 = 0, w1 = 1
        CHECK_THROWS_AS(mostar_semicube(direction_profile(g)), Error);
    }
}

TEST_CASE("indices_from_profile") {
    SUBCASE("Fibonacci cube of dimension 3") {
        auto r = indices_from_profile(direction_profile(fibonacci_cube(3)), 5);
        CHECK(r.wiener == 16);
        CHECK(r.mostar == 7);
        CHECK(r.method == "corollary");
        CHECK(r.residual == 0);
    }
    SUBCASE("Fibonacci cube of dimension 4") {
        auto g = fibonacci_cube(4);
        auto p = direction_profile(g);
        CHECK(p.e == std::vector<std::uint64_t>{3, 2, 2, 3});
        auto r = indices_from_profile(p, g.vertices.size());
        CHECK(r.vertex_count == 8);
        CHECK(r.edge_count == 10);
        CHECK(r.wiener == 54);
        CHECK(r.mostar == 28);
    }
    SUBCASE("hypercube of dimension 2") {
        auto r = indices_from_profile(direction_profile(hypercube(2)), 4);
        CHECK(r.wiener == 8);
        CHECK(r.mostar == 0);
    }
    SUBCASE("refuses e_i != w1_i") {
        CHECK_THROWS_AS(indices_from_profile(direction_profile(c6_labeling()), 6), Error);
    }
}

TEST_CASE("relation verifier") {
    auto gamma3 = make_report(5, 5, 16, 7, "oracle");
    CHECK(verify_relation(gamma3)); // 2*16 - 7 = 25 = 5*5
    CHECK(gamma3.residual == 0);

    auto lambda3 = make_report(4, 3, 9, 6, "oracle");
    CHECK(verify_relation(lambda3)); // 2*9 - 6 = 12 = 4*3

    auto c6 = make_report(6, 6, 27, 0, "oracle");
    CHECK_FALSE(verify_relation(c6));
    CHECK(c6.residual == 18); // 54 - 36; non-daisy labelings may miss
}

TEST_CASE("difference identity W - Mo = sum w1^2") {
    for (int n = 0; n <= 8; ++n) {
        auto g = fibonacci_cube(n);
        auto p = direction_profile(g);
        auto r = make_report(g.vertices.size(), p.total_edges(), wiener_semicube(p),
                             mostar_semicube(p), "semicube");
        CHECK(verify_difference_identity(r, p));
    }
}

TEST_CASE("complementarity of semicubes") {
    for (const auto& g : {fibonacci_cube(6), lucas_cube(6), vertex_deleted_cube(5), c6_labeling()}) {
        auto p = direction_profile(g);
        for (int i = 0; i < p.n; ++i) CHECK(p.w0[i] + p.w1[i] == g.vertices.size());
    }
}

TEST_CASE("semicube formulas agree with the oracle on partial cubes") {
    // Theorem applies to all isometric labelings, daisy or not: C_6 included.
    auto g = c6_labeling();
    auto a = build_adjacency(g);
    REQUIRE(is_isometric(a));
    CHECK(wiener_semicube(direction_profile(g)) == wiener_bruteforce(a));
    CHECK(wiener_bruteforce(a) == 27);
    CHECK(mostar_bruteforce(a) == 0);
}
