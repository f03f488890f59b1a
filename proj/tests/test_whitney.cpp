#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tridecomp/generate.hpp"
#include "tridecomp/oracle.hpp"
#include "tridecomp/whitney.hpp"

#include <algorithm>
#include <array>

using namespace tridecomp;

namespace {

PlaneMap square_disk() {
    // x=0, a=1, z=2, b=3 around the outer cycle, chord ab.
    return PlaneMap({{1, 3}, {2, 3, 0}, {3, 1}, {0, 1, 2}}, {0, 1, 2, 3});
}

// The disk left after deleting the outer triangle of a triangulation.
SubMap interior_disk(const PlaneMap& g) {
    const auto& o = g.outer();
    std::vector<int> ring;
    for (int i : {0, 2, 1}) {
        for (int w : g.inner_neighbors(o[i])) {
            if (ring.empty() || (ring.back() != w && ring.front() != w)) {
                ring.push_back(w);
            }
        }
    }
    std::reverse(ring.begin(), ring.end());
    return region_subgraph(g, ring);
}

std::array<int, 8> rule_hits{};

int check_all_levels(const PlaneMap& disk, int x, int y, int z) {
    int instances = 0;
    const auto col = whitney_color({disk, x, y, z}, [&](const WhitneyInstance& inst, int rule,
                                                       const OrientedColoring& c) {
        ++instances;
        ++rule_hits[rule];
        const auto report = check_whitney_properties(inst.disk, c, inst.x, inst.y, inst.z);
        INFO("rule " << rule << " on " << inst.disk.vertex_count() << " vertices");
        CHECK(report.empty());
        if (!report.empty()) {
            MESSAGE(report.front());
        }
    });
    CHECK(check_whitney_properties(disk, col, x, y, z).empty());
    return instances;
}

}  // namespace

TEST_CASE("definition clauses") {
    const PlaneMap tri({{1, 2}, {2, 0}, {0, 1}}, {0, 1, 2});
    CHECK(is_whitney(tri, 0, 1, 2));
    CHECK(is_whitney(square_disk(), 0, 0, 2));
    CHECK(!is_whitney(square_disk(), 0, 2, 1));
    // With chord xz the x = y clause fails.
    const PlaneMap chord({{1, 2, 3}, {2, 0}, {3, 0, 1}, {0, 2}}, {0, 1, 2, 3});
    REQUIRE(validate(chord, MapKind::InnerDisk).empty());
    const auto report = whitney_violations(chord, 0, 0, 2);
    REQUIRE(!report.empty());
    CHECK(report.back() == "x = y but zx is an edge");
    CHECK_THROWS_AS((void)whitney_color({chord, 0, 0, 2}), InputError);
    // K4 disk with the outer triangle filled.
    CHECK(!is_whitney(k4_map(), 0, 1, 2));
}

TEST_CASE("base triangle and square disk") {
    const PlaneMap tri({{1, 2}, {2, 0}, {0, 1}}, {0, 1, 2});
    const auto c = whitney_color({tri, 0, 1, 2});
    REQUIRE(c.size() == 3);
    CHECK(c[0].tail == 0);
    CHECK(c[0].head == 1);
    CHECK(c[0].color == Color::Black);
    CHECK(c[1].tail == 0);
    CHECK(c[1].head == 2);
    CHECK(c[1].color == Color::Blue);
    CHECK(c[2].tail == 1);
    CHECK(c[2].color == Color::Black);

    const auto sq = whitney_color({square_disk(), 0, 0, 2});
    auto find = [&](int a, int b) {
        return *std::find_if(sq.begin(), sq.end(),
                             [&](const OrientedEdge& e) { return e.edge() == Edge(a, b); });
    };
    CHECK(find(0, 3).color == Color::Black);
    CHECK(find(0, 3).head == 3);
    CHECK(find(1, 3).color == Color::Black);
    CHECK(find(1, 3).head == 1);
    CHECK(find(1, 2).color == Color::Black);
    CHECK(find(1, 2).head == 2);
    CHECK(find(0, 1).color == Color::Red);
    CHECK(find(0, 1).head == 0);
    CHECK(find(2, 3).color == Color::Blue);
    CHECK(find(2, 3).head == 2);
}

TEST_CASE("oracle flags a broken coloring") {
    auto sq = whitney_color({square_disk(), 0, 0, 2});
    for (auto& e : sq) {
        if (e.color == Color::Blue) {
            std::swap(e.tail, e.head);
        }
    }
    CHECK(!check_whitney_properties(square_disk(), sq, 0, 0, 2).empty());
}

TEST_CASE("interiors of 4-connected triangulations, every role choice") {
    std::vector<PlaneMap> maps;
    for (int c = 4; c <= 9; ++c) {
        maps.push_back(doublewheel_map(c));
    }
    maps.push_back(icosahedron_map());
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        FamilySpec spec{.family = Family::FlipWalk, .n = 10 + static_cast<int>(seed % 12),
                        .steps = 300, .seed = seed, .keep_four_connected = true};
        maps.push_back(generate(spec).map);
    }
    int runs = 0;
    for (const auto& g : maps) {
        const auto disk = interior_disk(g).map;
        const int len = static_cast<int>(disk.outer().size());
        for (int i = 0; i < len; ++i) {
            for (int j = i; j < i + len; ++j) {
                for (int k = j + 1; k < i + len; ++k) {
                    const int x = disk.outer()[i];
                    const int y = disk.outer()[j % len];
                    const int z = disk.outer()[k % len];
                    if (!is_whitney(disk, x, y, z)) {
                        continue;
                    }
                    ++runs;
                    check_all_levels(disk, x, y, z);
                    if (is_whitney(mirror(disk), z, y, x) && x != y) {
                        check_all_levels(mirror(disk), z, y, x);
                    }
                }
            }
        }
    }
    CHECK(runs > 900);
    for (int r = 0; r < 8; ++r) {
        INFO("rule " << r);
        CHECK(rule_hits[r] > 0);
    }
}
