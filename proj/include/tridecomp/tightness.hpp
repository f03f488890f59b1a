#pragma once

#include "tridecomp/decompose.hpp"
#include "tridecomp/planemap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tridecomp {

/// A triangulation G with a sub-triangulation G' on the vertices `gprime_vertices`.
/// k counts the faces of G' (on the sphere) that are not faces of G.
struct SubtriangulationPair {
    PlaneMap g;
    PlaneMap gprime;  // local ids index gprime_vertices
    std::vector<int> gprime_vertices;
    int k = 0;
    int n = 0;
    /// The value the construction is claimed to reach, when one is claimed.
    std::optional<int> claimed_k;
};

/// Builds and checks the pair; throws InputError if G' is not a triangulation.
[[nodiscard]] SubtriangulationPair subtriangulation_pair(const PlaneMap& g, std::vector<int> gprime_vertices);

/// True iff m > 2(n-1) + floor(n/2): too many edges for two forests and a matching.
[[nodiscard]] bool counting_bound_21(const PlaneMap& map);

struct G2Result {
    SubtriangulationPair pair;
    HamCycle cycle;  // Hamiltonian cycle of G through every new vertex
};

/// Stacks a vertex beside every other edge of `cycle`, on the side away from
/// the outer face, and reroutes the cycle through it.
[[nodiscard]] G2Result build_g2(const PlaneMap& gprime, const HamCycle& cycle);

/// Stacks a vertex in every face of G', the outer one included.
[[nodiscard]] SubtriangulationPair build_g3(const PlaneMap& gprime);

/// Faces of G' (parent ids) that are not faces of G.
[[nodiscard]] std::vector<Triangle> lost_faces(const SubtriangulationPair& pair);

/// Vertices of G strictly inside a lost face, on the side without other G' vertices.
[[nodiscard]] std::vector<int> inside_lost_face(const SubtriangulationPair& pair, const Triangle& t);

/// True iff every lost face holds exactly one vertex of G - G'.
[[nodiscard]] bool special_forced(const SubtriangulationPair& pair);

/// Per lost face, the edges of G with an endpoint strictly inside it.
[[nodiscard]] std::vector<std::vector<Edge>> special_regions(const SubtriangulationPair& pair);

struct Conclusion {
    std::string item;       // "i" .. "iv"
    std::string statement;  // e.g. "no special (2,2)-decomposition"
    bool upgraded = false;  // the special qualifier was dropped
};

/// Every item whose hypothesis on k holds.
[[nodiscard]] std::vector<Conclusion> prop51_verdict(const SubtriangulationPair& pair);

}  // namespace tridecomp
