#include "tridecomp/separation.hpp"

#include <algorithm>

namespace tridecomp {

namespace {

Triangle outer_triangle(const PlaneMap& map) {
    const auto& o = map.outer();
    if (o.size() != 3) {
        throw InputError("map is not a triangulation (outer face is not a triangle)");
    }
    return Triangle(o[0], o[1], o[2]);
}

bool is_facial(const PlaneMap& map, int a, int b, int c) {
    return map.prev_ccw(b, a) == c || map.prev_ccw(a, b) == c;
}

// Vertices reached from the left side of the cycle without crossing it.
std::vector<int> left_side(const PlaneMap& map, const std::array<int, 3>& cyc) {
    std::vector<char> seen(map.vertex_count(), 0);
    for (int v : cyc) {
        seen[v] = 1;
    }
    std::vector<int> out;
    for (int i = 0; i < 3; ++i) {
        const int c = cyc[i];
        const int stop = cyc[(i + 2) % 3];
        for (int w = map.next_ccw(c, cyc[(i + 1) % 3]); w != stop; w = map.next_ccw(c, w)) {
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
        }
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int w : map.rotation(out[k])) {
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<int> triangle_interior(const PlaneMap& map, const Triangle& t,
                                   std::array<int, 3>* ccw) {
    const auto [a, b, c] = t.v;
    if (!map.adjacent(a, b) || !map.adjacent(b, c) || !map.adjacent(a, c)) {
        throw InputError("vertex triple is not a triangle of the map");
    }
    const auto& outer = map.outer();
    std::array<int, 3> cyc{a, b, c};
    std::vector<int> inside;
    if (outer.size() == 3 && Triangle(outer[0], outer[1], outer[2]) == t) {
        cyc = {outer[0], outer[1], outer[2]};
        for (int v = 0; v < map.vertex_count(); ++v) {
            if (!t.has(v)) {
                inside.push_back(v);
            }
        }
    } else {
        inside = left_side(map, cyc);
        const bool reaches_outer = std::any_of(inside.begin(), inside.end(),
                                               [&](int v) { return map.on_outer(v); });
        if (reaches_outer) {
            cyc = {a, c, b};
            inside = left_side(map, cyc);
        }
        std::sort(inside.begin(), inside.end());
    }
    if (ccw != nullptr) {
        *ccw = cyc;
    }
    return inside;
}

TriangleClasses classify_triangles(const PlaneMap& map) {
    const Triangle out_t = outer_triangle(map);
    TriangleClasses cls;
    const int n = map.vertex_count();
    if (n == 3) {
        cls.all.push_back({out_t, TriangleKind::Filled});
        cls.filled.push_back(out_t);
        return cls;
    }
    std::vector<int> mark(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int w : map.rotation(a)) {
            mark[w] = a;
        }
        for (int b : map.rotation(a)) {
            if (b < a) {
                continue;
            }
            for (int c : map.rotation(b)) {
                if (c <= b || mark[c] != a) {
                    continue;
                }
                const Triangle t(a, b, c);
                TriangleKind kind = TriangleKind::Separating;
                if (t == out_t) {
                    kind = TriangleKind::Filled;
                } else if (is_facial(map, a, b, c)) {
                    kind = TriangleKind::Face;
                }
                cls.all.push_back({t, kind});
            }
        }
    }
    std::sort(cls.all.begin(), cls.all.end(),
              [](const TriangleRecord& x, const TriangleRecord& y) { return x.verts < y.verts; });
    for (const auto& r : cls.all) {
        (r.kind == TriangleKind::Face ? cls.faces : cls.filled).push_back(r.verts);
    }
    return cls;
}

int SeparationTree::find(const Triangle& t) const {
    const auto it = std::find(nodes.begin(), nodes.end(), t);
    return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

SeparationTree separation_tree(const PlaneMap& map) {
    const Triangle out_t = outer_triangle(map);
    const auto cls = classify_triangles(map);
    SeparationTree tree;
    tree.nodes.push_back(out_t);
    for (const auto& t : cls.filled) {
        if (t != out_t) {
            tree.nodes.push_back(t);
        }
    }
    const int k = tree.size();
    tree.parent.assign(k, -1);
    tree.children.assign(k, {});
    tree.cycle.resize(k);
    tree.interior.resize(k);
    for (int i = 0; i < k; ++i) {
        tree.interior[i] = triangle_interior(map, tree.nodes[i], &tree.cycle[i]);
    }
    std::vector<int> by_size(k);
    for (int i = 0; i < k; ++i) {
        by_size[i] = i;
    }
    std::stable_sort(by_size.begin(), by_size.end(), [&](int x, int y) {
        return tree.interior[x].size() > tree.interior[y].size();
    });
    // Interiors are laminar, so the latest owner of a vertex is its smallest container so far.
    std::vector<int> owner(map.vertex_count(), -1);
    for (int i : by_size) {
        if (i != 0) {
            const int p = owner[tree.interior[i].front()];
            if (p < 0) {
                throw InternalError("separating triangle outside the outer triangle");
            }
            tree.parent[i] = p;
            tree.children[p].push_back(i);
        }
        for (int v : tree.interior[i]) {
            owner[v] = i;
        }
    }
    for (auto& ch : tree.children) {
        std::sort(ch.begin(), ch.end());
    }
    return tree;
}

SubMap region_of(const PlaneMap& map, const SeparationTree& tree, int node) {
    const auto& c = tree.cycle.at(node);
    return region_subgraph(map, {c[0], c[1], c[2]});
}

SubMap region_of(const PlaneMap& map, const Triangle& t) {
    std::array<int, 3> c{};
    (void)triangle_interior(map, t, &c);
    return region_subgraph(map, {c[0], c[1], c[2]});
}

SubMap hull_of(const PlaneMap& map, const SeparationTree& tree, int node) {
    const SubMap region = region_of(map, tree, node);
    std::vector<char> removed(map.vertex_count(), 0);
    for (int ch : tree.children.at(node)) {
        for (int v : tree.interior[ch]) {
            removed[v] = 1;
        }
    }
    std::vector<int> keep;
    for (int i = 0; i < region.map.vertex_count(); ++i) {
        if (!removed[region.to_parent[i]]) {
            keep.push_back(i);
        }
    }
    SubMap hull = induced_submap(region.map, keep, {0, 1, 2});
    for (int& v : hull.to_parent) {
        v = region.to_parent[v];
    }
    return hull;
}

SubMap hull_of(const PlaneMap& map, const Triangle& t) {
    const auto tree = separation_tree(map);
    const int node = tree.find(t);
    if (node < 0) {
        throw InputError("triangle is not filled");
    }
    return hull_of(map, tree, node);
}

EdgeSubgraph g_bracket(const PlaneMap& map, const Triangle& t) {
    const auto inside = triangle_interior(map, t);
    if (inside.empty()) {
        throw InputError("triangle is not filled");
    }
    std::vector<char> in(map.vertex_count(), 0);
    for (int v : inside) {
        in[v] = 1;
    }
    EdgeSubgraph g;
    g.vertices = inside;
    g.vertices.insert(g.vertices.end(), t.v.begin(), t.v.end());
    std::sort(g.vertices.begin(), g.vertices.end());
    for (int v : inside) {
        for (int w : map.rotation(v)) {
            if (!in[w] || v < w) {
                g.edges.emplace_back(v, w);
            }
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

SpecialVertices special_vertices(const PlaneMap& map) {
    if (map.vertex_count() < 4) {
        throw InputError("special vertices need at least 4 vertices");
    }
    const auto tree = separation_tree(map);
    const SubMap hull = hull_of(map, tree, 0);
    SpecialVertices sv;
    for (int i = 0; i < 3; ++i) {
        const auto face = hull.map.face_left_of((i + 1) % 3, (i + 2) % 3);
        sv.u[i] = hull.to_parent[face[2]];
    }
    return sv;
}

int opposing_special(const SubMap& hull, int v) {
    for (int i = 0; i < 3; ++i) {
        if (hull.to_parent[i] == v) {
            if (hull.map.vertex_count() < 4) {
                throw InputError("a bare triangle has no special vertices");
            }
            return hull.to_parent[hull.map.face_left_of((i + 1) % 3, (i + 2) % 3)[2]];
        }
    }
    throw InputError("vertex " + std::to_string(v) + " is not on the hull's outer triangle");
}

bool edge_in_separating_triangle(const PlaneMap& map, const Edge& e) {
    const int n = map.vertex_count();
    if (n <= 3) {
        return false;
    }
    std::vector<char> nb(n, 0);
    for (int w : map.rotation(e.u)) {
        nb[w] = 1;
    }
    const Triangle out_t = outer_triangle(map);
    for (int c : map.rotation(e.v)) {
        if (nb[c] && Triangle(e.u, e.v, c) != out_t && !is_facial(map, e.u, e.v, c)) {
            return true;
        }
    }
    return false;
}

Edge find_free_edge(const PlaneMap& map) {
    for (const auto& e : map.edges()) {
        if (!edge_in_separating_triangle(map, e)) {
            return e;
        }
    }
    throw InternalError("no edge avoids every separating triangle");
}

}  // namespace tridecomp
