#pragma once

#include "tridecomp/planemap.hpp"
#include "tridecomp/whitney.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace tridecomp {

/// Three forests covering a hull minus its outer triangle. v = (v_x, v_y, v_z)
/// are the outer roles, u = (u_x, u_y, u_z) the special vertices opposing them.
struct InnerDecomposition {
    std::vector<Edge> fx;
    std::vector<Edge> fy;
    std::vector<Edge> fz;
    std::array<int, 3> v{};
    std::array<int, 3> u{};
};

/// `hull` is a 4-connected triangulation or K4; roles = (v_x, v_y, v_z) is a
/// permutation of its outer triangle.
[[nodiscard]] InnerDecomposition inner_decomposition(const PlaneMap& hull, std::array<int, 3> roles,
                                                     const WhitneyObserver& observer = {});

/// phi on the filled triangles, at level k.
struct Assignment {
    int k = 0;
    std::map<Triangle, int> phi;
};

/// Inner faces to vertices: every inner vertex hit twice, u three times,
/// outer vertices never. `u` must be a special vertex of the map.
[[nodiscard]] std::map<Triangle, int> middle_vertex_map(const PlaneMap& map, int u);

[[nodiscard]] Assignment zero_assignment(const PlaneMap& map, int v);

[[nodiscard]] Assignment two_assignment(const PlaneMap& map, int v);

enum class OneVariant { I, II, III };

/// `labels` = (v0, v1, v2) is the outer triangle. `path` runs v0 .. v2 and
/// is Hamiltonian in the map (variants I, II) or in map - v1 (variant III).
[[nodiscard]] Assignment one_assignment(const PlaneMap& map, OneVariant variant,
                                        std::array<int, 3> labels, const std::vector<int>& path);

/// Empty iff `a` is a k-assignment of the map.
[[nodiscard]] std::vector<std::string> validate_assignment(const PlaneMap& map, const Assignment& a);

/// The extra preimage bounds of a 1-assignment variant.
[[nodiscard]] std::vector<std::string> validate_one_variant(const Assignment& a, OneVariant variant,
                                                            std::array<int, 3> labels);

}  // namespace tridecomp
