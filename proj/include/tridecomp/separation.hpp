#pragma once

#include "tridecomp/planemap.hpp"

#include <array>
#include <vector>

namespace tridecomp {

enum class TriangleKind { Face, Filled, Separating };

struct TriangleRecord {
    Triangle verts;
    TriangleKind kind = TriangleKind::Face;
};

/// All 3-cliques of a triangulation. `filled` is X(G): the outer triangle
/// (when n > 3) and every separating triangle. `faces` is Y(G): the inner faces.
struct TriangleClasses {
    std::vector<TriangleRecord> all;
    std::vector<Triangle> filled;
    std::vector<Triangle> faces;
};

[[nodiscard]] TriangleClasses classify_triangles(const PlaneMap& map);

/// Vertices strictly inside a 3-clique, i.e. on the side away from the outer
/// face (all other vertices for the outer triangle). Sorted ascending.
/// `ccw` receives the triangle ordered so that its inside is on the left.
[[nodiscard]] std::vector<int> triangle_interior(const PlaneMap& map, const Triangle& t,
                                                 std::array<int, 3>* ccw = nullptr);

/// Filled triangles ordered by immediate containment. Node 0 is the outer triangle.
struct SeparationTree {
    std::vector<Triangle> nodes;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    /// Counterclockwise vertex order of each node, inside on the left.
    std::vector<std::array<int, 3>> cycle;
    /// Sorted strict interior of each node.
    std::vector<std::vector<int>> interior;

    [[nodiscard]] int size() const { return static_cast<int>(nodes.size()); }
    /// Index of `t`, or -1.
    [[nodiscard]] int find(const Triangle& t) const;
};

[[nodiscard]] SeparationTree separation_tree(const PlaneMap& map);

/// G_Δ: the triangulation made of Δ and everything inside it.
[[nodiscard]] SubMap region_of(const PlaneMap& map, const SeparationTree& tree, int node);
[[nodiscard]] SubMap region_of(const PlaneMap& map, const Triangle& t);

/// G_Δ with the insides of all child triangles removed. Local ids: Δ first
/// (counterclockwise), then the remaining vertices by ascending parent id.
[[nodiscard]] SubMap hull_of(const PlaneMap& map, const SeparationTree& tree, int node);
[[nodiscard]] SubMap hull_of(const PlaneMap& map, const Triangle& t);

/// Plain edge set over parent ids.
struct EdgeSubgraph {
    std::vector<int> vertices;
    std::vector<Edge> edges;
};

/// G[Δ] = G_Δ minus the three edges of Δ. Throws if Δ has nothing inside.
[[nodiscard]] EdgeSubgraph g_bracket(const PlaneMap& map, const Triangle& t);

/// u[i] is the special vertex opposing outer()[i]: the apex of the inner face
/// of the hull on the outer edge not containing outer()[i].
struct SpecialVertices {
    std::array<int, 3> u{};
};

[[nodiscard]] SpecialVertices special_vertices(const PlaneMap& map);

/// Special vertex of a hull (as returned by hull_of) opposing its outer
/// vertex v; both in parent ids.
[[nodiscard]] int opposing_special(const SubMap& hull, int v);

[[nodiscard]] bool edge_in_separating_triangle(const PlaneMap& map, const Edge& e);

/// First edge in id order lying in no separating triangle.
[[nodiscard]] Edge find_free_edge(const PlaneMap& map);

}  // namespace tridecomp
