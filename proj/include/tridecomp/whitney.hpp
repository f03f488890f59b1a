#pragma once

#include "tridecomp/planemap.hpp"

#include <functional>
#include <string>
#include <vector>

namespace tridecomp {

enum class Color { Black, Red, Blue };

[[nodiscard]] const char* color_name(Color c);

struct OrientedEdge {
    int tail = 0;
    int head = 0;
    Color color = Color::Black;

    [[nodiscard]] Edge edge() const { return {tail, head}; }
};

/// One entry per edge, sorted by edge.
using OrientedColoring = std::vector<OrientedEdge>;

struct WhitneyInstance {
    PlaneMap disk;
    int x = 0;
    int y = 0;
    int z = 0;
};

/// Called once per solved instance, innermost first. `rule` is 0 for the
/// bare triangle and 1..7 for the case that split the instance.
using WhitneyObserver =
    std::function<void(const WhitneyInstance& inst, int rule, const OrientedColoring& coloring)>;

/// Violated clauses of the Whitney-graph definition; empty iff it holds.
[[nodiscard]] std::vector<std::string> whitney_violations(const PlaneMap& disk, int x, int y, int z);

[[nodiscard]] inline bool is_whitney(const PlaneMap& disk, int x, int y, int z) {
    return whitney_violations(disk, x, y, z).empty();
}

/// Black Hamiltonian x-z path plus red/blue orientation of all other edges.
/// Throws InputError if the instance is not a Whitney graph.
[[nodiscard]] OrientedColoring whitney_color(const WhitneyInstance& inst,
                                             const WhitneyObserver& observer = {});

}  // namespace tridecomp
