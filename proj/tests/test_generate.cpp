#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tridecomp/generate.hpp"
#include "tridecomp/separation.hpp"

using namespace tridecomp;

TEST_CASE("fixed families validate") {
    for (const char* name : {"triangle", "k4", "octahedron", "icosahedron", "doublewheel:7"}) {
        const auto g = generate(parse_family(name));
        CHECK(validate(g.map, MapKind::Triangulation).empty());
    }
    CHECK(icosahedron_map().vertex_count() == 12);
    CHECK(icosahedron_map().edge_count() == 30);
    for (int v = 0; v < 12; ++v) {
        CHECK(icosahedron_map().degree(v) == 5);
    }
}

TEST_CASE("doublewheels are 4-connected") {
    for (int c = 4; c <= 12; ++c) {
        const auto g = generate(parse_family("doublewheel:" + std::to_string(c)));
        CHECK(g.four_connected);
        CHECK(classify_triangles(g.map).filled.size() == 1);
    }
    const auto oct = octahedron_map();
    for (int v = 0; v < 6; ++v) {
        CHECK(oct.degree(v) == 4);
    }
}

TEST_CASE("apollonian stacks add one filled triangle each") {
    for (int t = 0; t <= 10; ++t) {
        const auto g = generate(parse_family("apollonian:" + std::to_string(t) + ":3"));
        CHECK(g.map.vertex_count() == 4 + t);
        CHECK(separation_tree(g.map).size() == t + 1);
    }
}

TEST_CASE("polygon_ham returns its Hamiltonian cycle") {
    for (int n : {3, 4, 5, 8, 20, 60}) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto g = generate({.family = Family::PolygonHam, .n = n, .seed = seed});
            REQUIRE(g.ham_cycle.has_value());
            const auto& c = *g.ham_cycle;
            CHECK(static_cast<int>(c.size()) == n);
            for (int i = 0; i < n; ++i) {
                CHECK(g.map.adjacent(c[i], c[(i + 1) % n]));
            }
        }
    }
}

TEST_CASE("generation is reproducible") {
    CHECK(generate(parse_family("polygon_ham:30:9")).map ==
          generate(parse_family("polygon_ham:30:9")).map);
    CHECK(generate(parse_family("flipwalk:15:300:2")).map ==
          generate(parse_family("flipwalk:15:300:2")).map);
    CHECK(!(generate(parse_family("apollonian:8:1")).map ==
            generate(parse_family("apollonian:8:2")).map));
}

TEST_CASE("flipwalk keeps 4-connectivity when asked") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        FamilySpec spec{.family = Family::FlipWalk, .n = 14, .steps = 400, .seed = seed,
                        .keep_four_connected = true};
        CHECK(generate(spec).four_connected);
    }
}

TEST_CASE("bad specs are rejected") {
    CHECK_THROWS_AS((void)parse_family("doublewheel"), InputError);
    CHECK_THROWS_AS((void)parse_family("nonsense"), InputError);
    CHECK_THROWS_AS((void)generate(parse_family("doublewheel:3")), InputError);
    CHECK_THROWS_AS((void)generate(parse_family("polygon_ham:2:1")), InputError);
}
