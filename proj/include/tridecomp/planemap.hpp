#pragma once

#include <array>
#include <compare>
#include <optional>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tridecomp {

/// Malformed or contract-violating input (maps, cycles, roles, files).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A construction step produced something the theory says is impossible.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Undirected edge, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    [[nodiscard]] bool has(int w) const { return u == w || v == w; }
    [[nodiscard]] int other(int w) const { return w == u ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

/// Vertex triple, always sorted ascending.
struct Triangle {
    std::array<int, 3> v{};

    Triangle() = default;
    Triangle(int a, int b, int c);

    [[nodiscard]] bool has(int w) const { return v[0] == w || v[1] == w || v[2] == w; }

    auto operator<=>(const Triangle&) const = default;
};

enum class MapKind { Triangulation, InnerDisk };

/// Rotation-system representation of a plane graph.
///
/// `rotation(v)` lists the neighbors of v in counterclockwise order. `outer()`
/// is the outer cycle in counterclockwise order (interior on the left), so the
/// outer face itself is traced in the opposite direction. Faces are always
/// recomputed from the rotations.
///
/// Face tracing convention: the face to the left of dart (a -> b) continues
/// with (b -> c) where c precedes a in the rotation of b.
class PlaneMap {
  public:
    PlaneMap() = default;
    PlaneMap(std::vector<std::vector<int>> rotations, std::vector<int> outer);

    [[nodiscard]] int vertex_count() const { return static_cast<int>(rot_.size()); }
    [[nodiscard]] const std::vector<int>& rotation(int v) const { return rot_[v]; }
    [[nodiscard]] const std::vector<std::vector<int>>& rotations() const { return rot_; }
    [[nodiscard]] const std::vector<int>& outer() const { return outer_; }
    [[nodiscard]] int degree(int v) const { return static_cast<int>(rot_[v].size()); }

    [[nodiscard]] bool adjacent(int a, int b) const;
    /// Index of `nbr` in rotation(v), or -1.
    [[nodiscard]] int rotation_index(int v, int nbr) const;
    /// Neighbor following `nbr` counterclockwise around v.
    [[nodiscard]] int next_ccw(int v, int nbr) const;
    /// Neighbor preceding `nbr` counterclockwise around v.
    [[nodiscard]] int prev_ccw(int v, int nbr) const;

    [[nodiscard]] int edge_count() const;
    /// All edges, sorted.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Every face as the vertex sequence of its boundary walk (left of darts).
    [[nodiscard]] std::vector<std::vector<int>> faces() const;
    /// Boundary walk of the face to the left of dart (a -> b).
    [[nodiscard]] std::vector<int> face_left_of(int a, int b) const;

    /// Position on the outer cycle, or -1.
    [[nodiscard]] int outer_position(int v) const;
    [[nodiscard]] bool on_outer(int v) const { return outer_position(v) >= 0; }
    /// Successor / predecessor along the counterclockwise outer cycle.
    [[nodiscard]] int outer_next(int v) const;
    [[nodiscard]] int outer_prev(int v) const;

    /// Neighbors of outer vertex v strictly inside the disk, counterclockwise
    /// from the outer successor to the outer predecessor.
    [[nodiscard]] std::vector<int> inner_neighbors(int v) const;

    bool operator==(const PlaneMap&) const = default;

  private:
    std::vector<std::vector<int>> rot_;
    std::vector<int> outer_;
    std::vector<int> outer_pos_;
};

/// A map extracted from a parent map: local vertex i is parent vertex to_parent[i].
struct SubMap {
    PlaneMap map;
    std::vector<int> to_parent;

    /// Parent id -> local id, or -1.
    [[nodiscard]] std::vector<int> from_parent(int parent_vertex_count) const;
};

/// Straight-line grid drawing.
struct Drawing {
    std::vector<std::array<std::int64_t, 2>> coords;

    /// Lexicographic (y, x) order; total on distinct grid points.
    [[nodiscard]] bool below(int a, int b) const {
        const auto& p = coords[a];
        const auto& q = coords[b];
        return p[1] != q[1] ? p[1] < q[1] : p[0] < q[0];
    }
};

using OuterPath = std::vector<int>;

/// Empty iff the map satisfies every invariant of `kind`.
[[nodiscard]] std::vector<std::string> validate(const PlaneMap& map, MapKind kind);

/// Throws InputError listing the violations.
void require_valid(const PlaneMap& map, MapKind kind);

/// Builds a map from consistently oriented faces (each dart in exactly one
/// face, listed counterclockwise). The outer cycle is taken from `outer_face`,
/// which must be one of the listed faces.
[[nodiscard]] PlaneMap map_from_faces(int n, const std::vector<std::array<int, 3>>& faces,
                                      std::array<int, 3> outer_face);

/// Same rotation system with the face `face` (any vertex order) as outer face.
[[nodiscard]] PlaneMap reroot(const PlaneMap& map, const Triangle& face);

/// Every rotation and the outer cycle reversed.
[[nodiscard]] PlaneMap mirror(const PlaneMap& map);

/// Counterclockwise outer path from u to v, inclusive.
[[nodiscard]] OuterPath outer_path(const PlaneMap& map, int u, int v);

/// The inner-triangulated disk bounded by `cycle` (counterclockwise, interior
/// on the left). Local ids: cycle vertices first in cycle order, then interior
/// vertices by ascending parent id.
[[nodiscard]] SubMap region_subgraph(const PlaneMap& map, const std::vector<int>& cycle);

/// Subgraph induced by `keep` with rotations filtered; `outer` in parent ids.
[[nodiscard]] SubMap induced_submap(const PlaneMap& map, const std::vector<int>& keep,
                                    const std::vector<int>& outer);

/// Adds a new vertex (id = n) inside the face whose boundary walk is
/// (a, b, c), adjacent to all three. The outer cycle is unchanged unless the
/// face is the outer face, in which case the new outer face is the stacked
/// face left of the former outer dart (outer[1] -> outer[0]).
[[nodiscard]] PlaneMap stack_vertex(const PlaneMap& map, std::array<int, 3> face_walk);

/// Replaces edge ab, whose incident faces are (a,b,c) and (b,a,d), by cd.
/// Returns nullopt if the flip is not possible (outer edge, cd already present).
[[nodiscard]] std::optional<PlaneMap> flip_edge(const PlaneMap& map, int a, int b);

/// Shift-method straight-line grid drawing with `base` as the bottom edge.
/// Every edge other than the base strictly increases in y along the
/// canonical order, and the drawing fits a (2n-4) x (n-2) box.
[[nodiscard]] Drawing fpp_draw(const PlaneMap& map, Edge base);

}  // namespace tridecomp
