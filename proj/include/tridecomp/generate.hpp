#pragma once

#include "tridecomp/planemap.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tridecomp {

enum class Family { Triangle, K4, Octahedron, Icosahedron, DoubleWheel, Apollonian, PolygonHam, FlipWalk };

struct FamilySpec {
    Family family = Family::K4;
    int c = 4;            // doublewheel ring length
    int t = 0;            // apollonian stack count
    int n = 3;            // polygon_ham / flipwalk vertex count
    int steps = 0;        // flipwalk flip attempts
    std::uint64_t seed = 0;
    bool keep_four_connected = false;  // flipwalk: reject flips creating separating triangles
};

struct Generated {
    PlaneMap map;
    /// Defining Hamiltonian cycle (polygon_ham only): 0, 1, ..., n-1.
    std::optional<std::vector<int>> ham_cycle;
    bool four_connected = false;
};

/// Parses "k4", "doublewheel:6", "apollonian:10:7", "polygon_ham:20:3",
/// "flipwalk:12:200:5[:4c]".
[[nodiscard]] FamilySpec parse_family(const std::string& text);

[[nodiscard]] Generated generate(const FamilySpec& spec);

[[nodiscard]] PlaneMap triangle_map();
[[nodiscard]] PlaneMap k4_map();
[[nodiscard]] PlaneMap octahedron_map();
[[nodiscard]] PlaneMap icosahedron_map();
[[nodiscard]] PlaneMap doublewheel_map(int c);

}  // namespace tridecomp
