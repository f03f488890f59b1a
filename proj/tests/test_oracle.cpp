#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tridecomp/decompose.hpp"
#include "tridecomp/generate.hpp"
#include "tridecomp/oracle.hpp"

#include <algorithm>
#include <random>

using namespace tridecomp;

TEST_CASE("explicit K4 witness for (2,0)") {
    const auto k4 = k4_map();
    const std::array<std::vector<Edge>, 3> parts{
        std::vector<Edge>{Edge(0, 1), Edge(1, 2), Edge(2, 3)},
        std::vector<Edge>{Edge(0, 2), Edge(0, 3), Edge(1, 3)}, std::vector<Edge>{}};
    CHECK(check_decomposition(k4, parts, {.d = 0}).empty());
    const auto v = brute_decide(k4, {.d = 0});
    REQUIRE(v.status == Status::Sat);
    CHECK(check_decomposition(k4, *v.witness, {.d = 0}).empty());
}

TEST_CASE("icosahedron is not (2,1) by counting") {
    const auto v = brute_decide(icosahedron_map(), {.d = 1});
    CHECK(v.status == Status::Unsat);
    CHECK(v.nodes_explored == 1);
}

TEST_CASE("octahedron (2,1) is decided by search") {
    const auto oct = octahedron_map();
    const auto v = brute_decide(oct, {.d = 1});
    CHECK(v.status != Status::Unknown);
    if (v.status == Status::Sat) {
        CHECK(check_decomposition(oct, *v.witness, {.d = 1}).empty());
    }
    // Two spanning trees use 10 of 12 edges; the rest is a matching.
    CHECK(v.status == Status::Sat);
}

TEST_CASE("monotone in d and consistent with the pipelines") {
    std::vector<PlaneMap> maps{k4_map(), octahedron_map()};
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        maps.push_back(generate({.family = Family::Apollonian, .t = 1 + static_cast<int>(seed % 5),
                                 .seed = seed})
                           .map);
    }
    for (const auto& g : maps) {
        const auto d = general(g);
        CHECK(check_decomposition(g, d).empty());
        for (auto third : {ThirdPart::Arbitrary, ThirdPart::Tree}) {
            bool sat_before = false;
            for (int deg = 0; deg <= 4; ++deg) {
                const DecisionSpec spec{.d = deg, .third = third};
                const auto v = brute_decide(g, spec);
                REQUIRE(v.status != Status::Unknown);
                if (sat_before) {
                    CHECK(v.status == Status::Sat);
                }
                if (v.status == Status::Sat) {
                    sat_before = true;
                    CHECK(check_decomposition(g, *v.witness, spec).empty());
                }
            }
            CHECK(sat_before);
        }
    }
}

TEST_CASE("forest regions restrict H") {
    const auto k4 = k4_map();
    const std::vector<Edge> region{Edge(0, 3), Edge(1, 3), Edge(2, 3)};
    const std::array<std::vector<Edge>, 3> parts{
        std::vector<Edge>{Edge(0, 1), Edge(1, 2)}, std::vector<Edge>{Edge(0, 2)},
        std::vector<Edge>{Edge(0, 3), Edge(1, 3), Edge(2, 3)}};
    CHECK(check_decomposition(k4, parts, {.d = 3}).empty());
    CHECK(check_decomposition(k4, parts, {.d = 3, .forest_regions = {region}}).empty());
    const std::vector<Edge> cyc{Edge(0, 3), Edge(1, 3), Edge(0, 1)};
    const std::array<std::vector<Edge>, 3> bad{
        std::vector<Edge>{Edge(1, 2), Edge(2, 3)}, std::vector<Edge>{Edge(0, 2)},
        std::vector<Edge>{Edge(0, 1), Edge(0, 3), Edge(1, 3)}};
    CHECK(check_decomposition(k4, bad, {.d = 2}).empty());
    CHECK(!check_decomposition(k4, bad, {.d = 2, .forest_regions = {cyc}}).empty());
}

TEST_CASE("tree components count") {
    std::vector<Edge> path;
    for (int i = 0; i + 1 < 7; ++i) {
        path.emplace_back(i, i + 1);
    }
    CHECK(count_tree_components(7, {path}) == 1);
    CHECK(count_tree_components(4, {{Edge(0, 1), Edge(1, 2), Edge(2, 3)},
                                    {Edge(0, 2), Edge(0, 3), Edge(1, 3)}}) == 2);
    CHECK_THROWS_AS((void)count_tree_components(4, {{Edge(0, 1), Edge(1, 2), Edge(2, 0),
                                                     Edge(0, 3)}}),
                    InputError);

    // Random tree-or-cycle components, compared with k*n - |E|.
    std::mt19937_64 rng(7);
    for (int sample = 0; sample < 1000; ++sample) {
        const int n = 3 + static_cast<int>(rng() % 12);
        const int k = 1 + static_cast<int>(rng() % 3);
        std::vector<std::vector<Edge>> parts(k);
        std::size_t total = 0;
        for (auto& part : parts) {
            std::vector<int> order(n);
            for (int i = 0; i < n; ++i) {
                order[i] = i;
            }
            std::shuffle(order.begin(), order.end(), rng);
            int i = 0;
            while (i < n) {
                const int len = 1 + static_cast<int>(rng() % (n - i));
                for (int j = i; j + 1 < i + len; ++j) {
                    part.emplace_back(order[j], order[j + 1]);
                }
                if (len >= 3 && rng() % 2) {
                    part.emplace_back(order[i], order[i + len - 1]);
                }
                i += len;
            }
            total += part.size();
        }
        CHECK(count_tree_components(n, parts) == k * n - static_cast<int>(total));
    }
}

TEST_CASE("Hamiltonian cycle search") {
    for (const auto& g : {k4_map(), octahedron_map(), icosahedron_map()}) {
        const auto h = find_ham_cycle(g);
        REQUIRE(h.status == Status::Sat);
        CHECK(ham_cycle_violations(g, *h.cycle).empty());
    }
}

TEST_CASE("drawings") {
    for (const auto& g : {k4_map(), octahedron_map(), icosahedron_map(), doublewheel_map(7)}) {
        const auto& o = g.outer();
        const auto d = fpp_draw(g, Edge(o[0], o[1]));
        CHECK(check_drawing(g, d).empty());
        auto broken = d;
        std::swap(broken.coords[o[0]], broken.coords[o[1]]);
        CHECK(!check_drawing(g, broken).empty());
    }
}
