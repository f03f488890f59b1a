#include "tridecomp/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace tridecomp {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

Json triangle_json(const Triangle& t) { return Json::array({t.v[0], t.v[1], t.v[2]}); }

}  // namespace

Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw InputError("cannot open " + path);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json edges_to_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const auto& e : edges) {
        out.push_back({e.u, e.v});
    }
    return out;
}

std::vector<Edge> edges_from_json(const Json& j) {
    return guarded("edge list", [&] {
        std::vector<Edge> out;
        for (const auto& e : j) {
            if (e.size() != 2) {
                throw InputError("edge must have two endpoints");
            }
            out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
        return out;
    });
}

Json to_json(const PlaneMap& map) {
    return {{"n", map.vertex_count()}, {"rot", map.rotations()}, {"outer", map.outer()}};
}

PlaneMap map_from_json(const Json& j, std::optional<MapKind> require) {
    auto [rot, outer] = guarded("triangulation", [&] {
        auto rot = j.at("rot").get<std::vector<std::vector<int>>>();
        auto outer = j.at("outer").get<std::vector<int>>();
        if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(rot.size())) {
            throw InputError("n does not match the rotation count");
        }
        return std::pair{std::move(rot), std::move(outer)};
    });
    PlaneMap map(std::move(rot), std::move(outer));
    if (require) {
        require_valid(map, *require);
    }
    return map;
}

Json to_json(const OrientedColoring& coloring) {
    Json out = Json::array();
    for (const auto& e : coloring) {
        const Edge u = e.edge();
        out.push_back({{"u", u.u}, {"v", u.v}, {"head", e.head}, {"color", color_name(e.color)}});
    }
    return out;
}

OrientedColoring coloring_from_json(const Json& j) {
    return guarded("coloring", [&] {
        OrientedColoring out;
        for (const auto& item : j) {
            const int u = item.at("u").get<int>();
            const int v = item.at("v").get<int>();
            const int head = item.at("head").get<int>();
            const auto name = item.at("color").get<std::string>();
            if (head != u && head != v) {
                throw InputError("head is not an endpoint");
            }
            OrientedEdge e{head == u ? v : u, head, Color::Black};
            if (name == "red") {
                e.color = Color::Red;
            } else if (name == "blue") {
                e.color = Color::Blue;
            } else if (name != "black") {
                throw InputError("unknown color " + name);
            }
            out.push_back(e);
        }
        return out;
    });
}

Json to_json(const Assignment& a) {
    Json phi = Json::array();
    for (const auto& [t, v] : a.phi) {
        phi.push_back({{"triangle", triangle_json(t)}, {"vertex", v}});
    }
    return {{"k", a.k}, {"phi", phi}};
}

Assignment assignment_from_json(const Json& j) {
    return guarded("assignment", [&] {
        Assignment a;
        a.k = j.at("k").get<int>();
        for (const auto& item : j.at("phi")) {
            const auto t = item.at("triangle").get<std::array<int, 3>>();
            a.phi[Triangle(t[0], t[1], t[2])] = item.at("vertex").get<int>();
        }
        return a;
    });
}

Json to_json(const Decomposition& d) {
    return {{"T0", edges_to_json(d.parts[0])},
            {"T1", edges_to_json(d.parts[1])},
            {"T2", edges_to_json(d.parts[2])},
            {"claims",
             {{"w", d.w}, {"degree_bound", d.degree_bound}, {"pipeline", d.pipeline}}}};
}

Decomposition decomposition_from_json(const Json& j) {
    return guarded("decomposition", [&] {
        Decomposition d;
        d.parts = {edges_from_json(j.at("T0")), edges_from_json(j.at("T1")),
                   edges_from_json(j.at("T2"))};
        const auto& c = j.at("claims");
        d.w = c.at("w").get<std::array<int, 3>>();
        d.degree_bound = c.at("degree_bound").get<int>();
        d.pipeline = c.value("pipeline", "");
        return d;
    });
}

Json to_json(const Verdict& v) {
    Json out{{"status", status_name(v.status)}, {"nodes_explored", v.nodes_explored}};
    if (v.witness) {
        out["witness"] = {{"F1", edges_to_json((*v.witness)[0])},
                          {"F2", edges_to_json((*v.witness)[1])},
                          {"H", edges_to_json((*v.witness)[2])}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

HamCycle cycle_from_json(const Json& j) {
    return guarded("cycle", [&] {
        return (j.is_object() ? j.at("cycle") : j).get<HamCycle>();
    });
}

Json to_json(const SubtriangulationPair& pair) {
    Json out{{"G", to_json(pair.g)},
             {"Gprime_vertices", pair.gprime_vertices},
             {"k", pair.k},
             {"n", pair.n}};
    if (pair.claimed_k) {
        out["claimed_k"] = *pair.claimed_k;
    }
    return out;
}

SubtriangulationPair pair_from_json(const Json& j) {
    const auto [g, verts] = guarded("pair", [&] {
        return std::pair{map_from_json(j.at("G")), j.at("Gprime_vertices").get<std::vector<int>>()};
    });
    auto pair = subtriangulation_pair(g, verts);
    if (j.contains("claimed_k")) {
        pair.claimed_k = guarded("pair", [&] { return j.at("claimed_k").get<int>(); });
    }
    return pair;
}

Json to_json(const std::vector<Conclusion>& verdict) {
    Json out = Json::array();
    for (const auto& c : verdict) {
        out.push_back({{"item", c.item}, {"statement", c.statement}, {"upgraded", c.upgraded}});
    }
    return out;
}

}  // namespace tridecomp
