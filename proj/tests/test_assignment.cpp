#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tridecomp/assignment.hpp"
#include "tridecomp/generate.hpp"
#include "tridecomp/separation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace tridecomp;

namespace {

struct Components {
    std::vector<int> parent;
    explicit Components(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[a] = b;
        return true;
    }
};

std::set<int> touched(const std::vector<Edge>& part) {
    std::set<int> s;
    for (const auto& e : part) {
        s.insert(e.u);
        s.insert(e.v);
    }
    return s;
}

// Number of trees of an acyclic edge set over its touched vertices, or -1 on a cycle.
int tree_count(int n, const std::vector<Edge>& part) {
    Components c(n);
    for (const auto& e : part) {
        if (!c.unite(e.u, e.v)) {
            return -1;
        }
    }
    return static_cast<int>(touched(part).size() - part.size());
}

std::set<int> all_but(int n, std::initializer_list<int> drop) {
    std::set<int> s;
    for (int v = 0; v < n; ++v) {
        s.insert(v);
    }
    for (int v : drop) {
        s.erase(v);
    }
    return s;
}

void check_inner(const PlaneMap& hull, std::array<int, 3> roles) {
    const auto d = inner_decomposition(hull, roles);
    const int n = hull.vertex_count();
    const auto [vx, vy, vz] = roles;
    CAPTURE(n);
    CAPTURE(vx);
    CAPTURE(vy);
    CAPTURE(vz);

    std::vector<Edge> all = d.fx;
    all.insert(all.end(), d.fy.begin(), d.fy.end());
    all.insert(all.end(), d.fz.begin(), d.fz.end());
    std::sort(all.begin(), all.end());
    std::vector<Edge> want;
    const Triangle out(hull.outer()[0], hull.outer()[1], hull.outer()[2]);
    for (const auto& e : hull.edges()) {
        if (!(out.has(e.u) && out.has(e.v))) {
            want.push_back(e);
        }
    }
    CHECK(all == want);

    // F_x: path from v_x to u_x through every vertex but v_y, v_z.
    CHECK(touched(d.fx) == all_but(n, {vy, vz}));
    CHECK(tree_count(n, d.fx) == 1);
    std::vector<int> deg(n, 0);
    for (const auto& e : d.fx) {
        ++deg[e.u];
        ++deg[e.v];
    }
    CHECK(std::all_of(deg.begin(), deg.end(), [](int k) { return k <= 2; }));
    if (n > 4) {
        CHECK(deg[vx] == 1);
        CHECK(deg[d.u[0]] == 1);
        CHECK(touched(d.fy) == all_but(n, {vx, vz}));
        CHECK(tree_count(n, d.fy) == 1);
        CHECK(touched(d.fz) == all_but(n, {vy}));
        CHECK(tree_count(n, d.fz) == 2);
        Components c(n);
        for (const auto& e : d.fz) {
            c.unite(e.u, e.v);
        }
        CHECK(c.find(vx) != c.find(vz));
    }
    // u_i is adjacent to the two roles other than v_i.
    CHECK(hull.adjacent(d.u[0], vy));
    CHECK(hull.adjacent(d.u[0], vz));
    CHECK(hull.adjacent(d.u[1], vx));
    CHECK(hull.adjacent(d.u[2], vy));
}

std::vector<PlaneMap> four_connected_maps() {
    std::vector<PlaneMap> maps{k4_map(), icosahedron_map()};
    for (int c = 4; c <= 8; ++c) {
        maps.push_back(doublewheel_map(c));
    }
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        maps.push_back(generate({.family = Family::FlipWalk, .n = 8 + static_cast<int>(seed),
                                 .steps = 200, .seed = seed, .keep_four_connected = true})
                           .map);
    }
    return maps;
}

std::vector<PlaneMap> general_maps() {
    std::vector<PlaneMap> maps;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        maps.push_back(generate({.family = Family::Apollonian, .t = 5 + 3 * static_cast<int>(seed),
                                 .seed = seed})
                           .map);
        maps.push_back(generate({.family = Family::FlipWalk, .n = 12 + static_cast<int>(seed),
                                 .steps = 30, .seed = seed})
                           .map);
    }
    return maps;
}

}  // namespace

TEST_CASE("inner decomposition for every role order") {
    for (const auto& g : four_connected_maps()) {
        std::array<int, 3> r{g.outer()[0], g.outer()[1], g.outer()[2]};
        std::sort(r.begin(), r.end());
        do {
            check_inner(g, r);
        } while (std::next_permutation(r.begin(), r.end()));
    }
}

TEST_CASE("inner decomposition rejects a hull with a separating triangle") {
    const auto g = generate({.family = Family::Apollonian, .t = 6, .seed = 1}).map;
    REQUIRE(classify_triangles(g).filled.size() > 1);
    CHECK_THROWS_AS((void)inner_decomposition(g, {g.outer()[0], g.outer()[1], g.outer()[2]}),
                    InputError);
}

TEST_CASE("middle vertex map hits inner vertices twice and u three times") {
    for (const auto& g : four_connected_maps()) {
        for (int u : special_vertices(g).u) {
            const auto psi = middle_vertex_map(g, u);
            CHECK(psi.size() == classify_triangles(g).faces.size());
        }
    }
    CHECK_THROWS_AS((void)middle_vertex_map(icosahedron_map(), icosahedron_map().outer()[0]),
                    InputError);
}

TEST_CASE("zero assignment needs 4-connectivity") {
    const auto ico = icosahedron_map();
    const auto a = zero_assignment(ico, ico.outer()[1]);
    CHECK(validate_assignment(ico, a).empty());
    const auto g = generate({.family = Family::Apollonian, .t = 4, .seed = 3}).map;
    CHECK_THROWS_AS((void)zero_assignment(g, g.outer()[0]), InputError);
}

TEST_CASE("two assignment on general triangulations") {
    for (const auto& g : general_maps()) {
        for (int v : g.outer()) {
            const auto a = two_assignment(g, v);
            CHECK(a.phi.size() == classify_triangles(g).filled.size());
            const auto report = validate_assignment(g, a);
            CHECK(report.empty());
            if (!report.empty()) {
                MESSAGE(report.front());
            }
        }
    }
}

TEST_CASE("validator catches an overloaded vertex") {
    const auto g = generate({.family = Family::Apollonian, .t = 40, .seed = 9}).map;
    auto a = two_assignment(g, g.outer()[0]);
    a.k = 0;
    CHECK(!validate_assignment(g, a).empty());
    a.phi.erase(a.phi.begin());
    a.k = 2;
    CHECK(!validate_assignment(g, a).empty());
}

TEST_CASE("one assignment from a Hamiltonian cycle, all three variants") {
    int runs = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto gen =
            generate({.family = Family::PolygonHam, .n = 6 + static_cast<int>(seed % 20), .seed = seed});
        REQUIRE(gen.ham_cycle);
        const auto& c = *gen.ham_cycle;
        const int n = static_cast<int>(c.size());
        for (int i = 0; i < n; ++i) {
            const int a = c[(i + n - 1) % n];
            const int b = c[i];
            const int d = c[(i + 1) % n];
            if (!gen.map.adjacent(a, d)) {
                continue;
            }
            const auto f = gen.map.face_left_of(a, b);
            const auto f2 = gen.map.face_left_of(b, a);
            if (f[2] != d && f2[2] != d) {
                continue;
            }
            const PlaneMap g = reroot(gen.map, Triangle(a, b, d));
            // III: labels (a, b, d), path a .. d avoiding b.
            std::vector<int> p3;
            for (int k = 0; k < n - 1; ++k) {
                p3.push_back(c[(i + n - 1 - k) % n]);
            }
            const auto a3 = one_assignment(g, OneVariant::III, {a, b, d}, p3);
            const auto r3 = validate_assignment(g, a3);
            CHECK(r3.empty());
            if (!r3.empty()) {
                MESSAGE(r3.front());
            }
            CHECK(validate_one_variant(a3, OneVariant::III, {a, b, d}).empty());
            // I and II: labels (b, a, d), path b .. d the long way.
            std::vector<int> p1;
            for (int k = 0; k < n; ++k) {
                p1.push_back(c[(i + n - k) % n]);
            }
            for (auto var : {OneVariant::I, OneVariant::II}) {
                const auto a1 = one_assignment(g, var, {b, a, d}, p1);
                CHECK(validate_assignment(g, a1).empty());
                CHECK(validate_one_variant(a1, var, {b, a, d}).empty());
            }
            ++runs;
        }
    }
    CHECK(runs > 30);
}
