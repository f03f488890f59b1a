#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tridecomp/generate.hpp"
#include "tridecomp/separation.hpp"

#include <algorithm>
#include <map>

using namespace tridecomp;

namespace {

// K4 (outer 0 1 2, center 3) with a vertex stacked into face 0 1 3.
PlaneMap apollonian5() { return stack_vertex(k4_map(), {0, 1, 3}); }

PlaneMap two_stacks() { return stack_vertex(apollonian5(), {1, 2, 3}); }

int hull_edge_sum(const PlaneMap& map) {
    const auto tree = separation_tree(map);
    int sum = 0;
    for (int i = 0; i < tree.size(); ++i) {
        sum += hull_of(map, tree, i).map.edge_count() - 3;
    }
    return sum;
}

}  // namespace

TEST_CASE("classify_triangles on small maps") {
    const auto oct = octahedron_map();
    auto cls = classify_triangles(oct);
    CHECK(cls.filled.size() == 1);
    CHECK(cls.faces.size() == 7);

    cls = classify_triangles(k4_map());
    CHECK(cls.filled.size() == 1);
    CHECK(cls.faces.size() == 3);

    cls = classify_triangles(apollonian5());
    CHECK(cls.filled.size() == 2);
    CHECK(cls.faces.size() == 5);
    CHECK(cls.all.size() == 7);
}

TEST_CASE("separation tree shapes") {
    const auto oct = separation_tree(octahedron_map());
    CHECK(oct.size() == 1);
    CHECK(oct.parent[0] == -1);

    const auto ap = separation_tree(apollonian5());
    REQUIRE(ap.size() == 2);
    CHECK(ap.nodes[1] == Triangle(0, 1, 3));
    CHECK(ap.parent[1] == 0);
    CHECK(ap.interior[1] == std::vector<int>{4});

    const auto star = separation_tree(two_stacks());
    REQUIRE(star.size() == 3);
    CHECK(star.children[0] == std::vector<int>{1, 2});
    CHECK(star.parent[1] == 0);
    CHECK(star.parent[2] == 0);
}

TEST_CASE("hulls partition the edges") {
    const auto ap = apollonian5();
    const auto tree = separation_tree(ap);
    const auto root_hull = hull_of(ap, tree, 0);
    CHECK(root_hull.map.vertex_count() == 4);
    CHECK(validate(root_hull.map, MapKind::Triangulation).empty());
    CHECK(hull_edge_sum(ap) == ap.edge_count() - 3);

    const auto oct = octahedron_map();
    const auto oh = hull_of(oct, Triangle(oct.outer()[0], oct.outer()[1], oct.outer()[2]));
    std::vector<Edge> back;
    for (const auto& e : oh.map.edges()) {
        back.emplace_back(oh.to_parent[e.u], oh.to_parent[e.v]);
    }
    std::sort(back.begin(), back.end());
    CHECK(back == oct.edges());

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto g = generate({.family = Family::Apollonian, .t = 12, .seed = seed}).map;
        CHECK(hull_edge_sum(g) == g.edge_count() - 3);
        const auto t = separation_tree(g);
        CHECK(t.size() == 13);
        // Each separating triangle is an inner face of exactly one hull.
        std::map<Triangle, int> seen;
        for (int i = 0; i < t.size(); ++i) {
            const auto h = hull_of(g, t, i);
            CHECK(validate(h.map, MapKind::Triangulation).empty());
            for (const auto& f : h.map.faces()) {
                const Triangle tri(h.to_parent[f[0]], h.to_parent[f[1]], h.to_parent[f[2]]);
                if (tri != t.nodes[i]) {
                    ++seen[tri];
                }
            }
        }
        for (int i = 1; i < t.size(); ++i) {
            CHECK(seen[t.nodes[i]] == 1);
        }
    }
}

TEST_CASE("g_bracket edge counts") {
    const auto k4 = k4_map();
    const auto b = g_bracket(k4, Triangle(0, 1, 2));
    CHECK(b.edges.size() == 3);
    const auto oct = octahedron_map();
    const auto& o = oct.outer();
    CHECK(g_bracket(oct, Triangle(o[0], o[1], o[2])).edges.size() == 9);
    CHECK_THROWS_AS((void)g_bracket(k4, Triangle(0, 1, 3)), InputError);
}

TEST_CASE("special vertices and free edges") {
    const auto sv = special_vertices(k4_map());
    CHECK(sv.u == std::array<int, 3>{3, 3, 3});

    const auto oct = octahedron_map();
    for (const auto& e : oct.edges()) {
        CHECK(!edge_in_separating_triangle(oct, e));
    }
    const auto ap = apollonian5();
    CHECK(edge_in_separating_triangle(ap, Edge(0, 1)));
    CHECK(edge_in_separating_triangle(ap, Edge(1, 3)));
    CHECK(edge_in_separating_triangle(ap, Edge(0, 3)));
    for (int w : {0, 1, 3}) {
        CHECK(!edge_in_separating_triangle(ap, Edge(w, 4)));
    }
    CHECK(find_free_edge(ap) == Edge(0, 2));

    // Special vertices sit on faces of the hull touching two outer vertices.
    const auto sv_oct = special_vertices(oct);
    for (int i = 0; i < 3; ++i) {
        CHECK(oct.adjacent(sv_oct.u[i], oct.outer()[(i + 1) % 3]));
        CHECK(oct.adjacent(sv_oct.u[i], oct.outer()[(i + 2) % 3]));
    }
}
