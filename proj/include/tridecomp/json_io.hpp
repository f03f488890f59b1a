#pragma once

#include "tridecomp/assignment.hpp"
#include "tridecomp/decompose.hpp"
#include "tridecomp/oracle.hpp"
#include "tridecomp/planemap.hpp"
#include "tridecomp/tightness.hpp"
#include "tridecomp/whitney.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tridecomp {

using Json = nlohmann::json;

/// Parses a file, or standard input for "-". Throws InputError on bad JSON.
[[nodiscard]] Json read_json(const std::string& path);
/// Two-space indented text with a trailing newline; object keys sorted.
[[nodiscard]] std::string dump_json(const Json& j);

[[nodiscard]] Json to_json(const PlaneMap& map);
/// Throws InputError unless the map validates as `require`; nullopt skips validation.
[[nodiscard]] PlaneMap map_from_json(const Json& j,
                                     std::optional<MapKind> require = MapKind::Triangulation);

[[nodiscard]] Json to_json(const OrientedColoring& coloring);
[[nodiscard]] OrientedColoring coloring_from_json(const Json& j);

[[nodiscard]] Json to_json(const Assignment& a);
[[nodiscard]] Assignment assignment_from_json(const Json& j);

[[nodiscard]] Json to_json(const Decomposition& d);
[[nodiscard]] Decomposition decomposition_from_json(const Json& j);

[[nodiscard]] Json to_json(const Verdict& v);

/// Accepts a bare vertex array or {"cycle": [...]}.
[[nodiscard]] HamCycle cycle_from_json(const Json& j);

[[nodiscard]] Json to_json(const SubtriangulationPair& pair);
[[nodiscard]] SubtriangulationPair pair_from_json(const Json& j);

[[nodiscard]] Json to_json(const std::vector<Conclusion>& verdict);

[[nodiscard]] Json edges_to_json(const std::vector<Edge>& edges);
[[nodiscard]] std::vector<Edge> edges_from_json(const Json& j);

}  // namespace tridecomp
