#pragma once

#include "tridecomp/decompose.hpp"
#include "tridecomp/planemap.hpp"
#include "tridecomp/whitney.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tridecomp {

/// Shape required of the third part H; the first two parts are forests.
/// Arbitrary: (2,d). Forest: (2,d)*. Connected: [2,d]. Tree: [2,d]*.
/// Connected and Tree mean spanning.
enum class ThirdPart { Arbitrary, Forest, Connected, Tree };

struct DecisionSpec {
    int d = 0;
    ThirdPart third = ThirdPart::Arbitrary;
    /// Edge sets on which H must additionally be a forest (special decompositions).
    std::vector<std::vector<Edge>> forest_regions;
};

/// Independent checks of a pipeline output against its own claims.
[[nodiscard]] std::vector<std::string> check_decomposition(const PlaneMap& map,
                                                           const Decomposition& dec);

/// Checks (F1, F2, H) against a decision spec.
[[nodiscard]] std::vector<std::string> check_decomposition(const PlaneMap& map,
                                                           const std::array<std::vector<Edge>, 3>& parts,
                                                           const DecisionSpec& spec);

/// The eight properties of a Whitney coloring, each reported separately.
[[nodiscard]] std::vector<std::string> check_whitney_properties(const PlaneMap& disk,
                                                                const OrientedColoring& coloring,
                                                                int x, int y, int z);

enum class Status { Sat, Unsat, Unknown };

[[nodiscard]] const char* status_name(Status s);

struct Verdict {
    Status status = Status::Unknown;
    std::optional<std::array<std::vector<Edge>, 3>> witness;
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Exhaustive search for (F1, F2, H) meeting `spec`.
[[nodiscard]] Verdict brute_decide(const PlaneMap& map, const DecisionSpec& spec,
                                   std::uint64_t budget = kDefaultBudget);

/// Sum over the parts of their tree components. Throws InputError if some
/// component is neither a tree nor a cycle.
[[nodiscard]] int count_tree_components(int n, const std::vector<std::vector<Edge>>& parts);

struct HamSearch {
    Status status = Status::Unknown;
    std::optional<HamCycle> cycle;
    std::uint64_t nodes_explored = 0;
};

[[nodiscard]] HamSearch find_ham_cycle(const PlaneMap& map, std::uint64_t budget = 10'000'000);

/// Empty iff the drawing is a planar straight-line embedding of the map with
/// distinct integer points.
[[nodiscard]] std::vector<std::string> check_drawing(const PlaneMap& map, const Drawing& d);

}  // namespace tridecomp
