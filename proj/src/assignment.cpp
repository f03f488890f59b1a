#include "tridecomp/assignment.hpp"

#include "bigstack.hpp"
#include "tridecomp/separation.hpp"

#include <algorithm>

namespace tridecomp {

namespace {

int outer_index(const PlaneMap& map, int v) {
    const auto& o = map.outer();
    for (int i = 0; i < static_cast<int>(o.size()); ++i) {
        if (o[i] == v) {
            return i;
        }
    }
    throw InputError("vertex " + std::to_string(v) + " is not on the outer triangle");
}

Triangle to_parent(const SubMap& s, const Triangle& t) {
    return {s.to_parent[t.v[0]], s.to_parent[t.v[1]], s.to_parent[t.v[2]]};
}

}  // namespace

InnerDecomposition inner_decomposition(const PlaneMap& hull, std::array<int, 3> roles,
                                       const WhitneyObserver& observer) {
    const auto& o = hull.outer();
    if (o.size() != 3) {
        throw InputError("inner_decomposition: hull is not a triangulation");
    }
    {
        auto sorted_roles = roles;
        auto sorted_outer = o;
        std::sort(sorted_roles.begin(), sorted_roles.end());
        std::sort(sorted_outer.begin(), sorted_outer.end());
        if (!std::equal(sorted_roles.begin(), sorted_roles.end(), sorted_outer.begin())) {
            throw InputError("inner_decomposition: roles are not the outer triangle");
        }
    }
    const int n = hull.vertex_count();
    if (n == 4) {
        const int c = hull.inner_neighbors(o[0]).front();
        InnerDecomposition d;
        d.v = roles;
        d.u = {c, c, c};
        d.fx = {Edge(roles[0], c)};
        d.fy = {Edge(roles[1], c)};
        d.fz = {Edge(roles[2], c)};
        return d;
    }
    if (n < 6 || classify_triangles(hull).filled.size() != 1) {
        throw InputError("inner_decomposition: hull is neither 4-connected nor K4");
    }

    // a = (v_y, v_z, v_x), counterclockwise after an optional mirror.
    const std::array<int, 3> a{roles[1], roles[2], roles[0]};
    const int i0 = outer_index(hull, a[0]);
    const PlaneMap g = o[(i0 + 1) % 3] == a[1] ? hull : mirror(hull);

    std::vector<int> ring;
    for (int v : {a[0], a[2], a[1]}) {
        for (int w : g.inner_neighbors(v)) {
            if (ring.empty() || (ring.back() != w && ring.front() != w)) {
                ring.push_back(w);
            }
        }
    }
    std::reverse(ring.begin(), ring.end());
    const SubMap w = region_subgraph(g, ring);
    const auto local = w.from_parent(n);

    std::array<int, 3> up{};  // special vertex opposing a[i]
    for (int i = 0; i < 3; ++i) {
        up[i] = g.face_left_of(a[(i + 1) % 3], a[(i + 2) % 3])[2];
    }
    const auto coloring =
        whitney_color({w.map, local[up[0]], local[up[1]], local[up[2]]}, observer);

    InnerDecomposition d;
    d.v = roles;
    d.u = {up[2], up[0], up[1]};
    for (const auto& e : coloring) {
        const Edge pe(w.to_parent[e.tail], w.to_parent[e.head]);
        switch (e.color) {
            case Color::Black:
                d.fx.push_back(pe);
                break;
            case Color::Blue:
                d.fy.push_back(pe);
                break;
            case Color::Red:
                d.fz.push_back(pe);
                break;
        }
    }
    const Edge link(up[0], a[2]);
    d.fx.push_back(link);
    for (int r : ring) {
        if (g.adjacent(r, a[0])) {
            d.fy.emplace_back(r, a[0]);
        }
        for (int t : {a[1], a[2]}) {
            if (g.adjacent(r, t) && Edge(r, t) != link) {
                d.fz.emplace_back(r, t);
            }
        }
    }
    for (auto* part : {&d.fx, &d.fy, &d.fz}) {
        std::sort(part->begin(), part->end());
    }
    return d;
}

std::map<Triangle, int> middle_vertex_map(const PlaneMap& map, int u) {
    if (map.vertex_count() < 4) {
        throw InputError("middle_vertex_map needs at least 4 vertices");
    }
    const auto sv = special_vertices(map);
    const auto& o = map.outer();
    int i = -1;
    for (int k = 0; k < 3; ++k) {
        if (sv.u[k] == u) {
            i = k;
        }
    }
    if (i < 0) {
        throw InputError("vertex " + std::to_string(u) + " is not a special vertex");
    }
    const int v1 = o[(i + 1) % 3];
    const int v2 = o[(i + 2) % 3];
    const Drawing d = fpp_draw(map, Edge(v1, v2));
    const Triangle star(v1, v2, u);
    const Triangle outer_t(o[0], o[1], o[2]);

    std::map<Triangle, int> psi;
    for (const auto& f : map.faces()) {
        const Triangle t(f[0], f[1], f[2]);
        if (t == outer_t) {
            continue;
        }
        if (t == star) {
            psi[t] = u;
            continue;
        }
        auto verts = t.v;
        std::sort(verts.begin(), verts.end(), [&](int p, int q) { return d.below(p, q); });
        psi[t] = verts[1];
    }

    std::vector<int> hits(map.vertex_count(), 0);
    for (const auto& [t, v] : psi) {
        ++hits[v];
    }
    for (int v = 0; v < map.vertex_count(); ++v) {
        const int want = map.on_outer(v) ? 0 : v == u ? 3 : 2;
        if (hits[v] != want) {
            throw InternalError("middle_vertex_map: vertex " + std::to_string(v) + " hit " +
                                std::to_string(hits[v]) + " times, expected " +
                                std::to_string(want));
        }
    }
    return psi;
}

Assignment zero_assignment(const PlaneMap& map, int v) {
    const auto cls = classify_triangles(map);
    const auto& o = map.outer();
    const Triangle outer_t(o[0], o[1], o[2]);
    for (const auto& t : cls.filled) {
        if (t != outer_t) {
            throw InputError("map is not 4-connected: separating triangle {" +
                             std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
                             std::to_string(t.v[2]) + "}");
        }
    }
    (void)outer_index(map, v);
    Assignment a;
    a.k = 0;
    a.phi[outer_t] = v;
    return a;
}

Assignment two_assignment(const PlaneMap& map, int v) {
    (void)outer_index(map, v);
    const auto tree = separation_tree(map);
    Assignment a;
    a.k = 2;
    a.phi[tree.nodes[0]] = v;
    std::vector<int> order{0};
    for (std::size_t k = 0; k < order.size(); ++k) {
        const int node = order[k];
        const auto& kids = tree.children[node];
        order.insert(order.end(), kids.begin(), kids.end());
        if (kids.empty()) {
            continue;
        }
        const SubMap hull = hull_of(map, tree, node);
        const auto local = hull.from_parent(map.vertex_count());
        const int u = opposing_special(hull, a.phi.at(tree.nodes[node]));
        const auto psi = middle_vertex_map(hull.map, local[u]);
        for (int child : kids) {
            const auto& t = tree.nodes[child].v;
            a.phi[tree.nodes[child]] =
                hull.to_parent[psi.at(Triangle(local[t[0]], local[t[1]], local[t[2]]))];
        }
    }
    return a;
}

namespace {

void check_path(const PlaneMap& map, OneVariant variant, const std::array<int, 3>& labels,
                const std::vector<int>& path) {
    const int n = map.vertex_count();
    const int want = variant == OneVariant::III ? n - 1 : n;
    if (static_cast<int>(path.size()) != want || path.empty() || path.front() != labels[0] ||
        path.back() != labels[2]) {
        throw InputError("one_assignment: path must run from v0 to v2 through " +
                         std::to_string(want) + " vertices");
    }
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        const int v = path[i];
        if (v < 0 || v >= n || seen[v] || (variant == OneVariant::III && v == labels[1])) {
            throw InputError("one_assignment: path repeats or uses a forbidden vertex");
        }
        seen[v] = 1;
        if (i > 0 && !map.adjacent(path[i - 1], v)) {
            throw InputError("one_assignment: path uses a non-edge");
        }
    }
}

struct Piece {
    int child = 0;
    int s = 0;
    int e = 0;
};

struct SubCall {
    int child = 0;
    OneVariant variant = OneVariant::I;
    std::array<int, 3> labels{};
    std::vector<int> path;
};

// Child instances when every path edge is oriented toward `target`.
std::vector<SubCall> plan_children(const SeparationTree& tree, const std::vector<Piece>& pieces,
                                   const std::vector<int>& path, int target) {
    const int at = static_cast<int>(std::find(path.begin(), path.end(), target) - path.begin());
    if (at >= static_cast<int>(path.size())) {
        throw InternalError("one_assignment: special vertex missing from the path");
    }
    std::vector<SubCall> calls;
    for (const auto& p : pieces) {
        const Triangle& t = tree.nodes[p.child];
        SubCall c;
        c.child = p.child;
        c.path.assign(path.begin() + p.s, path.begin() + p.e + 1);
        if (at > p.s && at < p.e) {
            c.variant = OneVariant::II;
            c.labels = {c.path.front(), target, c.path.back()};
        } else {
            if (p.s >= at) {
                std::reverse(c.path.begin(), c.path.end());
            }
            int third = -1;
            for (int v : t.v) {
                if (v != c.path.front() && v != c.path.back()) {
                    third = v;
                }
            }
            const bool covers = std::find(c.path.begin(), c.path.end(), third) != c.path.end();
            c.variant = covers ? OneVariant::I : OneVariant::III;
            c.labels = {c.path.front(), third, c.path.back()};
        }
        calls.push_back(std::move(c));
    }
    return calls;
}

// Child instances that may put a preimage on v: as head, as covered third vertex or as target.
int load_on(const std::vector<SubCall>& calls, int v) {
    int load = 0;
    for (const auto& c : calls) {
        if (c.labels[2] == v || (c.labels[1] == v && c.variant == OneVariant::I)) {
            ++load;
        } else if (c.labels[1] == v && c.variant == OneVariant::II) {
            load += 2;
        }
    }
    return load;
}

void one_rec(const PlaneMap& g, OneVariant variant, const std::array<int, 3>& labels,
             const std::vector<int>& path, std::map<Triangle, int>& phi) {
    const SeparationTree tree = separation_tree(g);
    const Triangle root = tree.nodes[0];
    phi[root] = variant == OneVariant::III ? labels[2] : labels[1];
    if (tree.size() == 1) {
        return;
    }
    const int len = static_cast<int>(path.size());
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < len; ++i) {
        pos[path[i]] = i;
    }
    std::vector<Piece> pieces;
    for (int child : tree.children[0]) {
        const Triangle& t = tree.nodes[child];
        const auto& inside = tree.interior[child];
        int lo = len;
        int hi = -1;
        for (int v : inside) {
            lo = std::min(lo, pos[v]);
            hi = std::max(hi, pos[v]);
        }
        if (lo < 1 || hi + 1 >= len) {
            throw InternalError("one_assignment: path ends inside a separating triangle");
        }
        const int s = lo - 1;
        const int e = hi + 1;
        for (int i = s; i < e; ++i) {
            const bool a_on = t.has(path[i]);
            const bool b_on = t.has(path[i + 1]);
            const bool a_in = std::binary_search(inside.begin(), inside.end(), path[i]);
            if ((a_on && b_on) || (!a_on && !a_in)) {
                throw InternalError("one_assignment: path leaves a separating triangle midway");
            }
        }
        if (!t.has(path[s]) || !t.has(path[e]) || path[s] == path[e]) {
            throw InternalError("one_assignment: path piece does not end on its triangle");
        }
        pieces.push_back({child, s, e});
    }

    const auto sv = special_vertices(g);
    auto opposing = [&](int v) { return sv.u[outer_index(g, v)]; };
    std::vector<SubCall> calls;
    switch (variant) {
        case OneVariant::II:
            calls = plan_children(tree, pieces, path, opposing(labels[1]));
            break;
        case OneVariant::I:
            calls = plan_children(tree, pieces, path, opposing(labels[1]));
            if (load_on(calls, labels[1]) > 0) {
                phi[root] = labels[2];
                calls = plan_children(tree, pieces, path, opposing(labels[2]));
            }
            break;
        case OneVariant::III: {
            const int u0 = opposing(labels[0]);
            calls = plan_children(tree, pieces, path, u0);
            if (u0 != opposing(labels[2]) && load_on(calls, u0) > 1) {
                calls = plan_children(tree, pieces, path, opposing(labels[2]));
            }
            break;
        }
    }

    for (const auto& c : calls) {
        const SubMap region = region_of(g, tree, c.child);
        const auto local = region.from_parent(g.vertex_count());
        std::vector<int> sub_path;
        for (int v : c.path) {
            sub_path.push_back(local[v]);
        }
        const std::array<int, 3> sub_local{local[c.labels[0]], local[c.labels[1]],
                                           local[c.labels[2]]};
        check_path(region.map, c.variant, sub_local, sub_path);
        std::map<Triangle, int> sub_phi;
        one_rec(region.map, c.variant, sub_local, sub_path, sub_phi);
        for (const auto& [tri, v] : sub_phi) {
            phi[to_parent(region, tri)] = region.to_parent[v];
        }
    }
}

}  // namespace

Assignment one_assignment(const PlaneMap& map, OneVariant variant, std::array<int, 3> labels,
                          const std::vector<int>& path) {
    for (int v : labels) {
        (void)outer_index(map, v);
    }
    if (labels[0] == labels[1] || labels[1] == labels[2] || labels[0] == labels[2]) {
        throw InputError("one_assignment: labels must be distinct");
    }
    check_path(map, variant, labels, path);
    Assignment a;
    a.k = 1;
    detail::run_on_big_stack([&] { one_rec(map, variant, labels, path, a.phi); });
    return a;
}

std::vector<std::string> validate_assignment(const PlaneMap& map, const Assignment& a) {
    std::vector<std::string> report;
    if (a.k < 0 || a.k > 2) {
        report.push_back("level k must be 0, 1 or 2");
        return report;
    }
    const auto tree = separation_tree(map);
    auto name = [](const Triangle& t) {
        return "{" + std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
               std::to_string(t.v[2]) + "}";
    };
    for (const auto& [t, v] : a.phi) {
        if (tree.find(t) < 0) {
            report.push_back("phi is defined on " + name(t) + ", which is not a filled triangle");
        } else if (!t.has(v)) {
            report.push_back("phi" + name(t) + " = " + std::to_string(v) + " is not on the triangle");
        }
    }
    for (const auto& t : tree.nodes) {
        if (!a.phi.count(t)) {
            report.push_back("phi is undefined on filled triangle " + name(t));
        }
    }
    if (!report.empty()) {
        return report;
    }
    const int n = map.vertex_count();
    std::vector<char> exempt(n, 0);
    exempt[a.phi.at(tree.nodes[0])] = 1;
    for (int i = 0; i < tree.size(); ++i) {
        const SubMap hull = hull_of(map, tree, i);
        if (hull.map.vertex_count() >= 4) {
            exempt[opposing_special(hull, a.phi.at(tree.nodes[i]))] = 1;
        }
    }
    std::vector<int> hits(n, 0);
    for (const auto& [t, v] : a.phi) {
        ++hits[v];
    }
    for (int v = 0; v < n; ++v) {
        const int cap = a.k + (exempt[v] ? 1 : 0);
        if (hits[v] > cap) {
            report.push_back("vertex " + std::to_string(v) + " is hit " + std::to_string(hits[v]) +
                             " times, more than " + std::to_string(cap));
        }
    }
    return report;
}

std::vector<std::string> validate_one_variant(const Assignment& a, OneVariant variant,
                                              std::array<int, 3> labels) {
    std::map<int, int> hits;
    for (const auto& [t, v] : a.phi) {
        ++hits[v];
    }
    std::array<int, 3> cap{};
    int root = labels[1];
    switch (variant) {
        case OneVariant::I:
            cap = {0, 1, 1};
            break;
        case OneVariant::II:
            cap = {0, 2, 0};
            break;
        case OneVariant::III:
            cap = {0, 0, 1};
            root = labels[2];
            break;
    }
    std::vector<std::string> report;
    for (int i = 0; i < 3; ++i) {
        if (hits[labels[i]] > cap[i]) {
            report.push_back("v" + std::to_string(i) + " is hit " +
                             std::to_string(hits[labels[i]]) + " times, more than " +
                             std::to_string(cap[i]));
        }
    }
    const auto it = a.phi.find(Triangle(labels[0], labels[1], labels[2]));
    const bool root_ok = it != a.phi.end() &&
                         (it->second == root || (variant == OneVariant::I && it->second == labels[2]));
    if (!root_ok) {
        report.push_back("phi of the outer triangle is not v" +
                         std::to_string(variant == OneVariant::III ? 2 : 1));
    }
    return report;
}

}  // namespace tridecomp
