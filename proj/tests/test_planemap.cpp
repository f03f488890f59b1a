#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tridecomp/planemap.hpp"

#include <algorithm>
#include <set>

using namespace tridecomp;

namespace {

PlaneMap k4() { return PlaneMap({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}, {2, 3, 1}); }

PlaneMap octahedron() {
    // top 0, ring 1..4, bottom 5
    std::vector<std::array<int, 3>> faces;
    for (int i = 0; i < 4; ++i) {
        const int a = 1 + i;
        const int b = 1 + (i + 1) % 4;
        faces.push_back({0, a, b});
        faces.push_back({5, b, a});
    }
    return map_from_faces(6, faces, faces[0]);
}

}  // namespace

TEST_CASE("validate accepts K4 and the octahedron") {
    const auto g = k4();
    CHECK(validate(g, MapKind::Triangulation).empty());
    CHECK(g.edge_count() == 6);
    CHECK(g.faces().size() == 4);

    const auto oct = octahedron();
    CHECK(validate(oct, MapKind::Triangulation).empty());
    CHECK(oct.edge_count() == 12);
    CHECK(oct.faces().size() == 8);
}

TEST_CASE("validate reports a scrambled rotation") {
    const PlaneMap bad({{1, 3, 2}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}, {2, 3, 1});
    const auto report = validate(bad, MapKind::Triangulation);
    REQUIRE(!report.empty());
    CHECK(report[0].find("face tracing gives F=2, Euler fails") != std::string::npos);
    CHECK_THROWS_AS(require_valid(bad, MapKind::Triangulation), InputError);
}

TEST_CASE("validate rejects asymmetric rotations and bad outer cycles") {
    const PlaneMap asym({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2}}, {2, 3, 1});
    CHECK(!validate(asym, MapKind::Triangulation).empty());
    const PlaneMap wrong_outer({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}, {1, 3, 2});
    CHECK(!validate(wrong_outer, MapKind::Triangulation).empty());
}

TEST_CASE("reroot and mirror") {
    const auto oct = octahedron();
    for (const auto& f : oct.faces()) {
        const auto r = reroot(oct, Triangle(f[0], f[1], f[2]));
        CHECK(validate(r, MapKind::Triangulation).empty());
        CHECK(r.edges() == oct.edges());
        CHECK(Triangle(r.outer()[0], r.outer()[1], r.outer()[2]) == Triangle(f[0], f[1], f[2]));
    }
    CHECK_THROWS_AS((void)reroot(oct, Triangle(0, 5, 1)), InputError);

    const auto m = mirror(oct);
    CHECK(validate(m, MapKind::Triangulation).empty());
    CHECK(m.edges() == oct.edges());
    CHECK(mirror(m) == oct);
}

TEST_CASE("outer paths and inner neighbors") {
    const auto g = k4();
    CHECK(outer_path(g, 2, 1) == OuterPath{2, 3, 1});
    CHECK(outer_path(g, 3, 3) == OuterPath{3});
    for (int v : g.outer()) {
        CHECK(g.inner_neighbors(v) == std::vector<int>{0});
    }
}

TEST_CASE("region_subgraph extracts the disk inside a separating cycle") {
    const auto oct = octahedron();
    // The ring 1,2,3,4 bounds a disk containing vertex 0 on one side.
    const auto outer = oct.outer();
    const auto sub = region_subgraph(oct, outer);
    CHECK(sub.map.vertex_count() == 6);
    CHECK(validate(sub.map, MapKind::Triangulation).empty());

    std::vector<int> ring{1, 2, 3, 4};
    const auto side_a = region_subgraph(oct, ring);
    std::vector<int> rev(ring.rbegin(), ring.rend());
    const auto side_b = region_subgraph(oct, rev);
    CHECK(side_a.map.vertex_count() == 5);
    CHECK(side_b.map.vertex_count() == 5);
    CHECK(validate(side_a.map, MapKind::InnerDisk).empty());
    CHECK(validate(side_b.map, MapKind::InnerDisk).empty());
    CHECK(side_a.to_parent[4] != side_b.to_parent[4]);
}

TEST_CASE("stack_vertex and flip_edge keep a valid triangulation") {
    auto g = octahedron();
    const auto f = g.faces()[3];
    g = stack_vertex(g, {f[0], f[1], f[2]});
    CHECK(validate(g, MapKind::Triangulation).empty());
    CHECK(g.degree(6) == 3);

    const auto& o = g.outer();
    const auto outer_walk = g.face_left_of(o[1], o[0]);
    auto h = stack_vertex(g, {outer_walk[0], outer_walk[1], outer_walk[2]});
    CHECK(validate(h, MapKind::Triangulation).empty());
    CHECK(std::count(h.outer().begin(), h.outer().end(), 7) == 1);

    const auto oct = octahedron();
    const auto flipped = flip_edge(oct, 2, 3);
    REQUIRE(flipped.has_value());
    CHECK(validate(*flipped, MapKind::Triangulation).empty());
    CHECK(flipped->adjacent(0, 5));
    CHECK(!flipped->adjacent(2, 3));
    // Outer edges never flip.
    CHECK(!flip_edge(oct, oct.outer()[0], oct.outer()[1]).has_value());
}

TEST_CASE("fpp drawing is monotone along every non-base edge") {
    const auto oct = octahedron();
    for (int i = 0; i < 3; ++i) {
        const Edge base(oct.outer()[i], oct.outer()[(i + 1) % 3]);
        const auto d = fpp_draw(oct, base);
        std::set<std::array<std::int64_t, 2>> pts(d.coords.begin(), d.coords.end());
        CHECK(pts.size() == 6);
        for (const auto& e : oct.edges()) {
            if (e == base) {
                continue;
            }
            CHECK(d.coords[e.u][1] != d.coords[e.v][1]);
        }
        for (const auto& c : d.coords) {
            CHECK(c[0] >= 0);
            CHECK(c[0] <= 2 * 6 - 4);
            CHECK(c[1] <= 6 - 2);
        }
    }
}
