#include "tridecomp/decompose.hpp"

#include "tridecomp/separation.hpp"

#include <algorithm>

namespace tridecomp {

namespace {

std::string triple(const Triangle& t) {
    return "{" + std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
           std::to_string(t.v[2]) + "}";
}

struct Routing {
    std::array<int, 3> roles{};  // (v_x, v_y, v_z)
    bool swapped = false;        // F_y -> T2 and F_z -> T1
};

Routing choose_roles(const Triangle& t, int vx, const std::array<int, 3>& w) {
    std::array<int, 2> rest{};
    int k = 0;
    for (int v : t.v) {
        if (v != vx) {
            rest[k++] = v;
        }
    }
    const auto outside = [&](int v, std::initializer_list<int> s) {
        return std::find(s.begin(), s.end(), v) == s.end();
    };
    for (bool swapped : {false, true}) {
        for (int i : {0, 1}) {
            const int vy = rest[i];
            const int vz = rest[1 - i];
            const bool ok = swapped ? outside(vx, {w[0], w[2]}) && outside(vz, {w[0], w[2]}) &&
                                          vy != w[1]
                                    : outside(vy, {w[0], w[2]}) && vx != w[1] && vz != w[1];
            if (ok) {
                return {{vx, vy, vz}, swapped};
            }
        }
    }
    throw InternalError("no admissible role order for filled triangle " + triple(t));
}

void append(std::vector<Edge>& dst, const std::vector<Edge>& src, const SubMap& hull) {
    for (const auto& e : src) {
        dst.emplace_back(hull.to_parent[e.u], hull.to_parent[e.v]);
    }
}

}  // namespace

Decomposition from_assignment(const PlaneMap& map, const Assignment& a, std::array<int, 3> w) {
    if (const auto report = validate_assignment(map, a); !report.empty()) {
        throw InputError("invalid assignment: " + report.front());
    }
    const auto& o = map.outer();
    const Triangle root(o[0], o[1], o[2]);
    if (Triangle(w[0], w[1], w[2]) != root) {
        throw InputError("w labels are not the outer triangle");
    }
    if (a.phi.at(root) != w[0]) {
        throw InputError("phi of the outer triangle is not w0");
    }
    if (edge_in_separating_triangle(map, Edge(w[0], w[2]))) {
        if (edge_in_separating_triangle(map, Edge(w[0], w[1]))) {
            throw InputError("both w0w1 and w0w2 lie in separating triangles");
        }
        std::swap(w[1], w[2]);
    }

    Decomposition d;
    d.w = w;
    d.degree_bound = a.k + 2;
    d.parts[0] = {Edge(w[0], w[1]), Edge(w[1], w[2])};
    d.parts[2] = {Edge(w[2], w[0])};

    const auto tree = separation_tree(map);
    std::vector<int> order{0};
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& kids = tree.children[order[i]];
        order.insert(order.end(), kids.begin(), kids.end());
    }
    // Leaves of the separation tree first.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const SubMap hull = hull_of(map, tree, *it);
        if (hull.map.vertex_count() < 4) {
            continue;
        }
        const Triangle& t = tree.nodes[*it];
        const Routing r = choose_roles(t, a.phi.at(t), w);
        const auto local = hull.from_parent(map.vertex_count());
        const auto f = inner_decomposition(
            hull.map, {local[r.roles[0]], local[r.roles[1]], local[r.roles[2]]});
        append(d.parts[0], f.fx, hull);
        append(d.parts[r.swapped ? 2 : 1], f.fy, hull);
        append(d.parts[r.swapped ? 1 : 2], f.fz, hull);
    }

    const int n = map.vertex_count();
    const std::array<int, 3> sizes{n - 1, n - 3, n - 2};
    for (int i = 0; i < 3; ++i) {
        std::sort(d.parts[i].begin(), d.parts[i].end());
        if (static_cast<int>(d.parts[i].size()) != sizes[i]) {
            throw InternalError("part T" + std::to_string(i) + " has " +
                                std::to_string(d.parts[i].size()) + " edges, expected " +
                                std::to_string(sizes[i]));
        }
    }
    d.pipeline = "assignment";
    return d;
}

Decomposition four_connected(const PlaneMap& map) {
    require_valid(map, MapKind::Triangulation);
    const auto& o = map.outer();
    auto d = from_assignment(map, zero_assignment(map, o[0]), {o[0], o[1], o[2]});
    d.pipeline = "four_connected";
    return d;
}

Decomposition hamiltonian(const PlaneMap& map, const HamCycle& cycle) {
    require_valid(map, MapKind::Triangulation);
    if (const auto report = ham_cycle_violations(map, cycle); !report.empty()) {
        throw InputError("not a Hamiltonian cycle: " + report.front());
    }
    const int n = map.vertex_count();
    if (n == 3) {
        auto d = four_connected(map);
        d.degree_bound = 3;
        d.pipeline = "hamiltonian";
        return d;
    }
    const auto faces = classify_triangles(map).faces;
    const auto is_face = [&](const Triangle& t) {
        return std::find(faces.begin(), faces.end(), t) != faces.end() ||
               t == Triangle(map.outer()[0], map.outer()[1], map.outer()[2]);
    };
    for (int i = 0; i < n; ++i) {
        const int a = cycle[(i + n - 1) % n];
        const int b = cycle[i];
        const int c = cycle[(i + 1) % n];
        if (!map.adjacent(a, c) || !is_face(Triangle(a, b, c))) {
            continue;
        }
        // Path ends (p, q) are consecutive on the cycle; the third vertex t takes phi.
        for (const auto& [p, q, t] : {std::array<int, 3>{b, a, c}, std::array<int, 3>{b, c, a}}) {
            const bool free_p = !edge_in_separating_triangle(map, Edge(t, p));
            const bool free_q = !edge_in_separating_triangle(map, Edge(t, q));
            if (!free_p && !free_q) {
                continue;
            }
            const int at = static_cast<int>(std::find(cycle.begin(), cycle.end(), p) -
                                            cycle.begin());
            const int step = cycle[(at + 1) % n] == q ? n - 1 : 1;
            std::vector<int> path;
            for (int k = 0; k < n; ++k) {
                path.push_back(cycle[(at + k * step) % n]);
            }
            const PlaneMap g = reroot(map, Triangle(a, b, c));
            const auto asg = one_assignment(g, OneVariant::II, {p, t, q}, path);
            auto d = from_assignment(g, asg, {t, free_p ? q : p, free_p ? p : q});
            d.pipeline = "hamiltonian";
            return d;
        }
    }
    throw InternalError("no facial triangle of consecutive cycle vertices has a free edge");
}

Decomposition general(const PlaneMap& map) {
    require_valid(map, MapKind::Triangulation);
    const Edge e = find_free_edge(map);
    const int c = map.face_left_of(e.u, e.v)[2];
    const PlaneMap g = reroot(map, Triangle(e.u, e.v, c));
    auto d = from_assignment(g, two_assignment(g, e.u), {e.u, c, e.v});
    d.pipeline = "general";
    return d;
}

std::vector<std::string> degree_law_violations(const PlaneMap& map, const Assignment& a,
                                               const Decomposition& d) {
    const int n = map.vertex_count();
    std::vector<int> deg(n, 0);
    for (const auto& e : d.parts[0]) {
        ++deg[e.u];
        ++deg[e.v];
    }
    std::vector<int> hits(n, 0);
    for (const auto& [t, v] : a.phi) {
        ++hits[v];
    }
    std::vector<char> low(n, 0);
    low[d.w[0]] = 1;
    low[d.w[2]] = 1;
    const auto tree = separation_tree(map);
    for (int i = 0; i < tree.size(); ++i) {
        const SubMap hull = hull_of(map, tree, i);
        if (hull.map.vertex_count() >= 4) {
            low[opposing_special(hull, a.phi.at(tree.nodes[i]))] = 1;
        }
    }
    std::vector<std::string> report;
    for (int v = 0; v < n; ++v) {
        const int want = (low[v] ? 1 : 2) + hits[v];
        if (deg[v] != want) {
            report.push_back("deg_T0(" + std::to_string(v) + ") = " + std::to_string(deg[v]) +
                             ", degree law gives " + std::to_string(want));
        }
    }
    return report;
}

std::vector<std::string> ham_cycle_violations(const PlaneMap& map, const HamCycle& cycle) {
    const int n = map.vertex_count();
    std::vector<std::string> report;
    if (static_cast<int>(cycle.size()) != n) {
        report.push_back("cycle has " + std::to_string(cycle.size()) + " vertices, map has " +
                         std::to_string(n));
        return report;
    }
    std::vector<char> seen(n, 0);
    for (int v : cycle) {
        if (v < 0 || v >= n) {
            report.push_back("vertex " + std::to_string(v) + " out of range");
            return report;
        }
        if (seen[v]) {
            report.push_back("vertex " + std::to_string(v) + " repeats");
        }
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i) {
        const int p = cycle[i];
        const int q = cycle[(i + 1) % n];
        if (!map.adjacent(p, q)) {
            report.push_back(std::to_string(p) + "-" + std::to_string(q) + " is not an edge");
        }
    }
    return report;
}

}  // namespace tridecomp
