#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tridecomp/decompose.hpp"
#include "tridecomp/generate.hpp"
#include "tridecomp/oracle.hpp"
#include "tridecomp/separation.hpp"

#include <algorithm>

using namespace tridecomp;

namespace {

std::vector<int> t0_degrees(const PlaneMap& g, const Decomposition& d) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (const auto& e : d.parts[0]) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

void expect_clean(const PlaneMap& g, const Decomposition& d) {
    const auto report = check_decomposition(g, d);
    CHECK(report.empty());
    if (!report.empty()) {
        MESSAGE(report.front());
    }
    const int n = g.vertex_count();
    CHECK(d.parts[0].size() == static_cast<std::size_t>(n - 1));
    CHECK(d.parts[1].size() == static_cast<std::size_t>(n - 3));
    CHECK(d.parts[2].size() == static_cast<std::size_t>(n - 2));
}

}  // namespace

TEST_CASE("K3 base case") {
    const auto g = triangle_map();
    const auto d = four_connected(g);
    CHECK(d.parts[0].size() == 2);
    CHECK(d.parts[1].empty());
    CHECK(d.parts[2].size() == 1);
    expect_clean(g, d);
}

TEST_CASE("four-connected pipeline gives a Hamiltonian path") {
    const auto oct = octahedron_map();
    const auto d = four_connected(oct);
    expect_clean(oct, d);
    CHECK(d.parts[0].size() == 5);
    const auto deg = t0_degrees(oct, d);
    CHECK(deg[d.w[0]] == 2);
    CHECK(std::count(deg.begin(), deg.end(), 1) == 2);
    const auto a = zero_assignment(oct, oct.outer()[0]);
    CHECK(degree_law_violations(oct, a, d).empty());

    const auto ico = four_connected(icosahedron_map());
    CHECK(ico.parts[0].size() == 11);
    CHECK(ico.parts[1].size() == 9);
    CHECK(ico.parts[2].size() == 10);

    for (int c = 4; c <= 20; ++c) {
        const auto g = doublewheel_map(c);
        expect_clean(g, four_connected(g));
    }
    const auto ap = generate({.family = Family::Apollonian, .t = 1, .seed = 0}).map;
    CHECK_THROWS_AS((void)four_connected(ap), InputError);
}

TEST_CASE("perturbed output is rejected") {
    const auto oct = octahedron_map();
    auto d = four_connected(oct);
    d.parts[1].push_back(d.parts[0].back());
    d.parts[0].pop_back();
    CHECK(!check_decomposition(oct, d).empty());
}

TEST_CASE("general pipeline and the degree law") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g =
            generate({.family = Family::Apollonian, .t = 2 + 3 * static_cast<int>(seed), .seed = seed})
                .map;
        const auto d = general(g);
        expect_clean(g, d);
        CHECK(d.degree_bound == 4);
        const auto deg = t0_degrees(g, d);
        CHECK(*std::max_element(deg.begin(), deg.end()) <= 4);
    }
    const auto ap = generate({.family = Family::Apollonian, .t = 46, .seed = 5}).map;
    REQUIRE(ap.vertex_count() == 50);
    const auto d = general(ap);
    CHECK(d.parts[0].size() == 49);
    CHECK(d.parts[1].size() == 47);
    CHECK(d.parts[2].size() == 48);

    // The degree law holds with equality on from_assignment output.
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto g = generate({.family = Family::FlipWalk, .n = 15 + static_cast<int>(seed),
                                 .steps = 25, .seed = seed})
                           .map;
        const Edge e = find_free_edge(g);
        const int c = g.face_left_of(e.u, e.v)[2];
        const PlaneMap r = reroot(g, Triangle(e.u, e.v, c));
        const auto a = two_assignment(r, e.u);
        const auto dec = from_assignment(r, a, {e.u, c, e.v});
        expect_clean(r, dec);
        const auto law = degree_law_violations(r, a, dec);
        CHECK(law.empty());
        if (!law.empty()) {
            MESSAGE(law.front());
        }
    }
}

TEST_CASE("Hamiltonian pipeline") {
    const auto k4 = k4_map();
    const auto d4 = hamiltonian(k4, {0, 1, 2, 3});
    expect_clean(k4, d4);
    CHECK(d4.parts[0].size() == 3);
    CHECK(d4.parts[1].size() == 1);
    CHECK(d4.parts[2].size() == 2);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto gen = generate(
            {.family = Family::PolygonHam, .n = 6 + static_cast<int>(seed % 30), .seed = seed});
        const auto d = hamiltonian(gen.map, *gen.ham_cycle);
        expect_clean(gen.map, d);
        CHECK(d.degree_bound == 3);
    }
    CHECK_THROWS_AS((void)hamiltonian(k4, {0, 1, 2}), InputError);
    CHECK(!ham_cycle_violations(k4, {0, 1, 1, 2}).empty());
}
