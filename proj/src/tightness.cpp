#include "tridecomp/tightness.hpp"

#include "tridecomp/separation.hpp"

#include <algorithm>
#include <set>

namespace tridecomp {

namespace {

std::set<Triangle> face_set(const PlaneMap& map, const std::vector<int>& to_parent = {}) {
    std::set<Triangle> out;
    for (const auto& f : map.faces()) {
        if (f.size() != 3) {
            continue;
        }
        if (to_parent.empty()) {
            out.emplace(f[0], f[1], f[2]);
        } else {
            out.emplace(to_parent[f[0]], to_parent[f[1]], to_parent[f[2]]);
        }
    }
    return out;
}

}  // namespace

SubtriangulationPair subtriangulation_pair(const PlaneMap& g, std::vector<int> gprime_vertices) {
    std::sort(gprime_vertices.begin(), gprime_vertices.end());
    if (gprime_vertices.size() < 4 ||
        std::adjacent_find(gprime_vertices.begin(), gprime_vertices.end()) != gprime_vertices.end() ||
        gprime_vertices.front() < 0 || gprime_vertices.back() >= g.vertex_count()) {
        throw InputError("G' needs at least 4 distinct vertices of G");
    }
    const SubMap sub = induced_submap(g, gprime_vertices, {});
    const auto faces = sub.map.faces();
    if (faces.empty() || faces.front().size() != 3) {
        throw InputError("G' is not a triangulation: a face is not a triangle");
    }
    const auto& f = faces.front();
    SubtriangulationPair pair;
    pair.g = g;
    pair.gprime = PlaneMap(sub.map.rotations(), {f[0], f[2], f[1]});
    require_valid(pair.gprime, MapKind::Triangulation);
    pair.gprime_vertices = std::move(gprime_vertices);
    pair.n = static_cast<int>(pair.gprime_vertices.size());
    pair.k = static_cast<int>(lost_faces(pair).size());
    return pair;
}

bool counting_bound_21(const PlaneMap& map) {
    const long n = map.vertex_count();
    return map.edge_count() > 2 * (n - 1) + n / 2;
}

G2Result build_g2(const PlaneMap& gprime, const HamCycle& cycle) {
    require_valid(gprime, MapKind::Triangulation);
    if (const auto report = ham_cycle_violations(gprime, cycle); !report.empty()) {
        throw InputError("not a Hamiltonian cycle: " + report.front());
    }
    const int n = gprime.vertex_count();
    if (n % 2 != 0) {
        throw InputError("G2 needs an even number of vertices, got " + std::to_string(n));
    }
    std::set<Edge> on_cycle;
    for (int i = 0; i < n; ++i) {
        on_cycle.emplace(cycle[i], cycle[(i + 1) % n]);
    }
    // Faces on the outer side of the cycle.
    const auto& o = gprime.outer();
    std::set<Triangle> outer_side;
    std::vector<std::vector<int>> queue{gprime.face_left_of(o[1], o[0])};
    outer_side.emplace(o[0], o[1], o[2]);
    while (!queue.empty()) {
        const auto walk = queue.back();
        queue.pop_back();
        for (int i = 0; i < 3; ++i) {
            const int a = walk[i];
            const int b = walk[(i + 1) % 3];
            if (on_cycle.count(Edge(a, b))) {
                continue;
            }
            auto next = gprime.face_left_of(b, a);
            if (outer_side.emplace(next[0], next[1], next[2]).second) {
                queue.push_back(std::move(next));
            }
        }
    }

    std::vector<std::vector<int>> targets;
    for (int i = 0; i + 1 < n; i += 2) {
        auto f = gprime.face_left_of(cycle[i], cycle[i + 1]);
        if (outer_side.count(Triangle(f[0], f[1], f[2]))) {
            f = gprime.face_left_of(cycle[i + 1], cycle[i]);
        }
        targets.push_back(std::move(f));
    }
    PlaneMap g = gprime;
    G2Result result;
    for (int i = 0; i < n; ++i) {
        result.cycle.push_back(cycle[i]);
        if (i % 2 == 0) {
            const auto& f = targets[i / 2];
            g = stack_vertex(g, {f[0], f[1], f[2]});
            result.cycle.push_back(g.vertex_count() - 1);
        }
    }
    std::vector<int> old(n);
    for (int v = 0; v < n; ++v) {
        old[v] = v;
    }
    result.pair = subtriangulation_pair(g, old);
    result.pair.claimed_k = n / 2;
    return result;
}

SubtriangulationPair build_g3(const PlaneMap& gprime) {
    require_valid(gprime, MapKind::Triangulation);
    const int n = gprime.vertex_count();
    PlaneMap g = gprime;
    for (const auto& f : gprime.faces()) {
        g = stack_vertex(g, {f[0], f[1], f[2]});
    }
    std::vector<int> old(n);
    for (int v = 0; v < n; ++v) {
        old[v] = v;
    }
    auto pair = subtriangulation_pair(g, old);
    pair.claimed_k = 2 * n - 3;
    return pair;
}

std::vector<Triangle> lost_faces(const SubtriangulationPair& pair) {
    const auto g_faces = face_set(pair.g);
    std::vector<Triangle> out;
    for (const auto& t : face_set(pair.gprime, pair.gprime_vertices)) {
        if (!g_faces.count(t)) {
            out.push_back(t);
        }
    }
    return out;
}

std::vector<int> inside_lost_face(const SubtriangulationPair& pair, const Triangle& t) {
    const int n = pair.g.vertex_count();
    std::vector<char> in_gprime(n, 0);
    for (int v : pair.gprime_vertices) {
        in_gprime[v] = 1;
    }
    const auto side = triangle_interior(pair.g, t);
    const bool has_old =
        std::any_of(side.begin(), side.end(), [&](int v) { return in_gprime[v] != 0; });
    if (!has_old) {
        return side;
    }
    std::vector<int> other;
    for (int v = 0; v < n; ++v) {
        if (!t.has(v) && !std::binary_search(side.begin(), side.end(), v)) {
            other.push_back(v);
        }
    }
    return other;
}

bool special_forced(const SubtriangulationPair& pair) {
    for (const auto& t : lost_faces(pair)) {
        if (inside_lost_face(pair, t).size() != 1) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<Edge>> special_regions(const SubtriangulationPair& pair) {
    std::vector<std::vector<Edge>> out;
    const auto edges = pair.g.edges();
    for (const auto& t : lost_faces(pair)) {
        const auto inside = inside_lost_face(pair, t);
        std::vector<Edge> region;
        for (const auto& e : edges) {
            if (std::binary_search(inside.begin(), inside.end(), e.u) ||
                std::binary_search(inside.begin(), inside.end(), e.v)) {
                region.push_back(e);
            }
        }
        out.push_back(std::move(region));
    }
    return out;
}

std::vector<Conclusion> prop51_verdict(const SubtriangulationPair& pair) {
    const bool forced = special_forced(pair);
    const struct {
        const char* item;
        int threshold;
        const char* kind;
    } items[] = {{"i", 6, "[2,2]"},
                 {"ii", 9, "(2,2)"},
                 {"iii", pair.n + 6, "[2,3]"},
                 {"iv", pair.n + 9, "(2,3)"}};
    std::vector<Conclusion> out;
    for (const auto& it : items) {
        if (pair.k >= it.threshold) {
            out.push_back({it.item,
                           std::string(forced ? "no " : "no special ") + it.kind + "-decomposition",
                           forced});
        }
    }
    return out;
}

}  // namespace tridecomp
