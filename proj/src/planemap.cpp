#include "tridecomp/planemap.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace tridecomp {

Triangle::Triangle(int a, int b, int c) : v{a, b, c} { std::sort(v.begin(), v.end()); }

PlaneMap::PlaneMap(std::vector<std::vector<int>> rotations, std::vector<int> outer)
    : rot_(std::move(rotations)), outer_(std::move(outer)), outer_pos_(rot_.size(), -1) {
    for (int i = 0; i < static_cast<int>(outer_.size()); ++i) {
        const int v = outer_[i];
        if (v >= 0 && v < vertex_count()) {
            outer_pos_[v] = i;
        }
    }
}

bool PlaneMap::adjacent(int a, int b) const { return rotation_index(a, b) >= 0; }

int PlaneMap::rotation_index(int v, int nbr) const {
    const auto& r = rot_[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i) {
        if (r[i] == nbr) {
            return i;
        }
    }
    return -1;
}

int PlaneMap::next_ccw(int v, int nbr) const {
    const int i = rotation_index(v, nbr);
    if (i < 0) {
        throw InputError("next_ccw: " + std::to_string(nbr) + " is not a neighbor of " +
                         std::to_string(v));
    }
    const auto& r = rot_[v];
    return r[(i + 1) % r.size()];
}

int PlaneMap::prev_ccw(int v, int nbr) const {
    const int i = rotation_index(v, nbr);
    if (i < 0) {
        throw InputError("prev_ccw: " + std::to_string(nbr) + " is not a neighbor of " +
                         std::to_string(v));
    }
    const auto& r = rot_[v];
    return r[(i + r.size() - 1) % r.size()];
}

int PlaneMap::edge_count() const {
    std::size_t darts = 0;
    for (const auto& r : rot_) {
        darts += r.size();
    }
    return static_cast<int>(darts / 2);
}

std::vector<Edge> PlaneMap::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int v = 0; v < vertex_count(); ++v) {
        for (int w : rot_[v]) {
            if (v < w) {
                out.emplace_back(v, w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> PlaneMap::face_left_of(int a, int b) const {
    std::vector<int> walk;
    const int start_a = a;
    const int start_b = b;
    const std::size_t limit = 2 * static_cast<std::size_t>(edge_count()) + 2;
    do {
        walk.push_back(a);
        const int c = prev_ccw(b, a);
        a = b;
        b = c;
        if (walk.size() > limit) {
            throw InputError("face tracing does not close");
        }
    } while (a != start_a || b != start_b);
    return walk;
}

std::vector<std::vector<int>> PlaneMap::faces() const {
    const int n = vertex_count();
    std::vector<std::size_t> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        offset[v + 1] = offset[v] + rot_[v].size();
    }
    std::vector<char> seen(offset[n], 0);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < rot_[v].size(); ++i) {
            if (seen[offset[v] + i]) {
                continue;
            }
            std::vector<int> walk;
            int a = v;
            int b = rot_[v][i];
            while (true) {
                const int ia = rotation_index(a, b);
                if (ia < 0) {
                    throw InputError("face tracing hit a one-sided adjacency");
                }
                if (seen[offset[a] + ia]) {
                    break;
                }
                seen[offset[a] + ia] = 1;
                walk.push_back(a);
                const int c = prev_ccw(b, a);
                a = b;
                b = c;
            }
            out.push_back(std::move(walk));
        }
    }
    return out;
}

int PlaneMap::outer_position(int v) const {
    if (v < 0 || v >= vertex_count()) {
        return -1;
    }
    return outer_pos_[v];
}

int PlaneMap::outer_next(int v) const {
    const int p = outer_position(v);
    if (p < 0) {
        throw InputError("vertex " + std::to_string(v) + " is not on the outer cycle");
    }
    return outer_[(p + 1) % outer_.size()];
}

int PlaneMap::outer_prev(int v) const {
    const int p = outer_position(v);
    if (p < 0) {
        throw InputError("vertex " + std::to_string(v) + " is not on the outer cycle");
    }
    return outer_[(p + outer_.size() - 1) % outer_.size()];
}

std::vector<int> PlaneMap::inner_neighbors(int v) const {
    const int nx = outer_next(v);
    const int pv = outer_prev(v);
    std::vector<int> out;
    const auto& r = rot_[v];
    const int start = rotation_index(v, nx);
    if (start < 0) {
        throw InputError("outer cycle edge missing at " + std::to_string(v));
    }
    for (std::size_t k = 1; k < r.size(); ++k) {
        const int w = r[(start + k) % r.size()];
        if (w == pv) {
            return out;
        }
        out.push_back(w);
    }
    throw InputError("outer cycle edge missing at " + std::to_string(v));
}

std::vector<int> SubMap::from_parent(int parent_vertex_count) const {
    std::vector<int> inv(parent_vertex_count, -1);
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) {
        inv[to_parent[i]] = i;
    }
    return inv;
}

namespace {

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size() || a.empty()) {
        return false;
    }
    const auto it = std::find(b.begin(), b.end(), a[0]);
    if (it == b.end()) {
        return false;
    }
    const std::size_t off = static_cast<std::size_t>(it - b.begin());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[(off + i) % b.size()]) {
            return false;
        }
    }
    return true;
}

bool connected(const PlaneMap& map) {
    const int n = map.vertex_count();
    if (n == 0) {
        return true;
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : map.rotation(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

}  // namespace

std::vector<std::string> validate(const PlaneMap& map, MapKind kind) {
    std::vector<std::string> report;
    const int n = map.vertex_count();
    if (n < 3) {
        report.push_back("fewer than 3 vertices");
        return report;
    }
    for (int v = 0; v < n; ++v) {
        const auto& r = map.rotation(v);
        std::vector<int> sorted = r;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            report.push_back("bad rotation at " + std::to_string(v) + ": repeated neighbor");
        }
        for (int w : r) {
            if (w < 0 || w >= n) {
                report.push_back("bad rotation at " + std::to_string(v) + ": neighbor " +
                                 std::to_string(w) + " out of range");
            } else if (w == v) {
                report.push_back("bad rotation at " + std::to_string(v) + ": self-loop");
            } else if (!map.adjacent(w, v)) {
                report.push_back("bad rotation at " + std::to_string(v) + ": " +
                                 std::to_string(w) + " does not list it back");
            }
        }
    }
    if (!report.empty()) {
        return report;
    }

    const auto& outer = map.outer();
    {
        std::vector<int> sorted = outer;
        std::sort(sorted.begin(), sorted.end());
        bool ok = outer.size() >= 3 &&
                  std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                  std::all_of(outer.begin(), outer.end(), [n](int v) { return v >= 0 && v < n; });
        if (ok) {
            for (std::size_t i = 0; i < outer.size(); ++i) {
                if (!map.adjacent(outer[i], outer[(i + 1) % outer.size()])) {
                    ok = false;
                }
            }
        }
        if (!ok) {
            report.push_back("non-simple outer cycle");
            return report;
        }
    }

    if (!connected(map)) {
        report.push_back("graph is disconnected");
        return report;
    }

    const auto faces = map.faces();
    const int e = map.edge_count();
    const int f = static_cast<int>(faces.size());
    if (n - e + f != 2) {
        std::ostringstream msg;
        msg << "face tracing gives F=" << f << ", Euler fails (V-E+F=" << n - e + f << ")";
        report.push_back(msg.str());
        return report;
    }

    std::vector<int> outer_walk(outer.rbegin(), outer.rend());
    const auto traced_outer = map.face_left_of(outer[1], outer[0]);
    if (!same_cycle(outer_walk, traced_outer)) {
        report.push_back("outer cycle does not bound a face counterclockwise");
    }

    int non_triangles = 0;
    for (const auto& face : faces) {
        if (face.size() != 3 && !same_cycle(face, outer_walk)) {
            ++non_triangles;
        }
    }
    if (non_triangles > 0) {
        report.push_back(std::to_string(non_triangles) + " non-triangular inner face(s)");
    }
    if (kind == MapKind::Triangulation) {
        if (outer.size() != 3) {
            report.push_back("non-triangular outer face");
        }
        if (e != 3 * n - 6) {
            report.push_back("edge count " + std::to_string(e) + " != 3n-6");
        }
    }
    return report;
}

void require_valid(const PlaneMap& map, MapKind kind) {
    const auto report = validate(map, kind);
    if (!report.empty()) {
        std::string msg = "invalid plane map:";
        for (const auto& line : report) {
            msg += " " + line + ";";
        }
        throw InputError(msg);
    }
}

PlaneMap map_from_faces(int n, const std::vector<std::array<int, 3>>& faces,
                        std::array<int, 3> outer_face) {
    std::vector<std::map<int, int>> succ(n);
    auto link = [&](int at, int from, int to) {
        if (!succ[at].emplace(from, to).second) {
            throw InputError("faces are not consistently oriented at vertex " +
                             std::to_string(at));
        }
    };
    for (const auto& f : faces) {
        link(f[0], f[1], f[2]);
        link(f[1], f[2], f[0]);
        link(f[2], f[0], f[1]);
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) {
            continue;
        }
        const int first = succ[v].begin()->first;
        int cur = first;
        do {
            rot[v].push_back(cur);
            const auto it = succ[v].find(cur);
            if (it == succ[v].end() || rot[v].size() > succ[v].size()) {
                throw InputError("faces around vertex " + std::to_string(v) +
                                 " do not close into a disk");
            }
            cur = it->second;
        } while (cur != first);
        if (rot[v].size() != succ[v].size()) {
            throw InputError("vertex " + std::to_string(v) + " is pinched");
        }
    }
    return PlaneMap(std::move(rot), {outer_face[0], outer_face[2], outer_face[1]});
}

PlaneMap reroot(const PlaneMap& map, const Triangle& face) {
    for (const auto& walk : map.faces()) {
        if (walk.size() == 3 && Triangle(walk[0], walk[1], walk[2]) == face) {
            return PlaneMap(map.rotations(), {walk[0], walk[2], walk[1]});
        }
    }
    throw InputError("reroot: triple is not a face");
}

PlaneMap mirror(const PlaneMap& map) {
    auto rot = map.rotations();
    for (auto& r : rot) {
        std::reverse(r.begin(), r.end());
    }
    std::vector<int> outer(map.outer().rbegin(), map.outer().rend());
    return PlaneMap(std::move(rot), std::move(outer));
}

OuterPath outer_path(const PlaneMap& map, int u, int v) {
    const int pu = map.outer_position(u);
    const int pv = map.outer_position(v);
    if (pu < 0 || pv < 0) {
        throw InputError("outer_path: endpoint not on the outer cycle");
    }
    const auto& outer = map.outer();
    OuterPath path{u};
    for (int p = pu; p != pv;) {
        p = (p + 1) % static_cast<int>(outer.size());
        path.push_back(outer[p]);
    }
    return path;
}

SubMap region_subgraph(const PlaneMap& map, const std::vector<int>& cycle) {
    const int n = map.vertex_count();
    const int len = static_cast<int>(cycle.size());
    if (len < 3) {
        throw InputError("region_subgraph: cycle shorter than 3");
    }
    std::vector<int> cycle_pos(n, -1);
    for (int i = 0; i < len; ++i) {
        const int v = cycle[i];
        if (v < 0 || v >= n) {
            throw InputError("region_subgraph: vertex out of range");
        }
        if (cycle_pos[v] >= 0) {
            throw InputError("region_subgraph: cycle not simple");
        }
        cycle_pos[v] = i;
    }
    // Inside range of each cycle vertex: counterclockwise from successor to predecessor.
    std::vector<std::vector<int>> inside(len);
    for (int i = 0; i < len; ++i) {
        const int c = cycle[i];
        const int nx = cycle[(i + 1) % len];
        const int pv = cycle[(i + len - 1) % len];
        const auto& r = map.rotation(c);
        const int start = map.rotation_index(c, nx);
        if (start < 0 || !map.adjacent(c, pv)) {
            throw InputError("region_subgraph: sequence is not a cycle");
        }
        bool closed = false;
        for (std::size_t k = 1; k < r.size(); ++k) {
            const int w = r[(start + k) % r.size()];
            if (w == pv) {
                closed = true;
                break;
            }
            inside[i].push_back(w);
        }
        if (!closed) {
            throw InputError("region_subgraph: sequence is not a cycle");
        }
    }
    std::vector<char> interior(n, 0);
    std::vector<int> stack;
    for (int i = 0; i < len; ++i) {
        for (int w : inside[i]) {
            if (cycle_pos[w] < 0 && !interior[w]) {
                interior[w] = 1;
                stack.push_back(w);
            }
        }
    }
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : map.rotation(v)) {
            if (cycle_pos[w] < 0 && !interior[w]) {
                interior[w] = 1;
                stack.push_back(w);
            }
        }
    }
    SubMap out;
    out.to_parent = cycle;
    for (int v = 0; v < n; ++v) {
        if (interior[v]) {
            out.to_parent.push_back(v);
        }
    }
    const auto local = out.from_parent(n);
    std::vector<std::vector<int>> rot(out.to_parent.size());
    for (int i = 0; i < len; ++i) {
        auto& r = rot[i];
        r.push_back(local[cycle[(i + 1) % len]]);
        for (int w : inside[i]) {
            r.push_back(local[w]);
        }
        r.push_back(local[cycle[(i + len - 1) % len]]);
    }
    for (std::size_t i = len; i < out.to_parent.size(); ++i) {
        for (int w : map.rotation(out.to_parent[i])) {
            rot[i].push_back(local[w]);
        }
    }
    std::vector<int> outer(len);
    std::iota(outer.begin(), outer.end(), 0);
    out.map = PlaneMap(std::move(rot), std::move(outer));
    return out;
}

SubMap induced_submap(const PlaneMap& map, const std::vector<int>& keep,
                      const std::vector<int>& outer) {
    SubMap out;
    out.to_parent = keep;
    const auto local = out.from_parent(map.vertex_count());
    std::vector<std::vector<int>> rot(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (int w : map.rotation(keep[i])) {
            if (local[w] >= 0) {
                rot[i].push_back(local[w]);
            }
        }
    }
    std::vector<int> local_outer;
    for (int v : outer) {
        if (local[v] < 0) {
            throw InputError("induced_submap: outer vertex not kept");
        }
        local_outer.push_back(local[v]);
    }
    out.map = PlaneMap(std::move(rot), std::move(local_outer));
    return out;
}

PlaneMap stack_vertex(const PlaneMap& map, std::array<int, 3> face_walk) {
    const auto walk = map.face_left_of(face_walk[0], face_walk[1]);
    if (walk.size() != 3 || walk[2] != face_walk[2]) {
        throw InputError("stack_vertex: not a triangular face");
    }
    const auto& outer = map.outer();
    const bool is_outer = same_cycle(walk, std::vector<int>(outer.rbegin(), outer.rend()));
    const int w = map.vertex_count();
    auto rot = map.rotations();
    rot.emplace_back(walk.begin(), walk.end());
    for (int i = 0; i < 3; ++i) {
        const int q = walk[(i + 1) % 3];
        const int r = walk[(i + 2) % 3];
        auto& rq = rot[q];
        rq.insert(std::find(rq.begin(), rq.end(), r) + 1, w);
    }
    PlaneMap tmp(rot, outer);
    if (!is_outer) {
        return tmp;
    }
    const auto new_walk = tmp.face_left_of(outer[1], outer[0]);
    return PlaneMap(std::move(rot), std::vector<int>(new_walk.rbegin(), new_walk.rend()));
}

std::optional<PlaneMap> flip_edge(const PlaneMap& map, int a, int b) {
    if (!map.adjacent(a, b)) {
        return std::nullopt;
    }
    const auto& outer = map.outer();
    const auto left = map.face_left_of(a, b);
    const auto right = map.face_left_of(b, a);
    const std::vector<int> outer_walk(outer.rbegin(), outer.rend());
    if (left.size() != 3 || right.size() != 3 || same_cycle(left, outer_walk) ||
        same_cycle(right, outer_walk)) {
        return std::nullopt;
    }
    const int c = left[2];
    const int d = right[2];
    if (c == d || map.adjacent(c, d)) {
        return std::nullopt;
    }
    auto rot = map.rotations();
    auto erase = [&](int at, int x) { std::erase(rot[at], x); };
    auto insert_after = [&](int at, int anchor, int x) {
        auto& r = rot[at];
        r.insert(std::find(r.begin(), r.end(), anchor) + 1, x);
    };
    erase(a, b);
    erase(b, a);
    insert_after(c, a, d);
    insert_after(d, b, c);
    return PlaneMap(std::move(rot), outer);
}

Drawing fpp_draw(const PlaneMap& map, Edge base) {
    const int n = map.vertex_count();
    const auto& outer = map.outer();
    if (outer.size() != 3) {
        throw InputError("fpp_draw: map is not a triangulation");
    }
    int v1 = -1;
    int v2 = -1;
    int vn = -1;
    for (int i = 0; i < 3; ++i) {
        if (Edge(outer[i], outer[(i + 1) % 3]) == base) {
            v1 = outer[i];
            v2 = outer[(i + 1) % 3];
            vn = outer[(i + 2) % 3];
        }
    }
    if (v1 < 0) {
        throw InputError("fpp_draw: base edge is not on the outer face");
    }

    // Canonical order by peeling from the top vertex down.
    std::vector<int> order(n, -1);
    std::vector<char> removed(n, 0);
    std::vector<char> on_contour(n, 0);
    std::vector<int> contour{v1, vn, v2};
    on_contour[v1] = on_contour[vn] = on_contour[v2] = 1;
    for (int k = n - 1; k >= 2; --k) {
        int pick = -1;
        for (int idx = 1; idx + 1 < static_cast<int>(contour.size()); ++idx) {
            const int c = contour[idx];
            int hits = 0;
            for (int w : map.rotation(c)) {
                if (!removed[w] && on_contour[w]) {
                    ++hits;
                }
            }
            if (hits == 2) {
                pick = idx;
                break;
            }
        }
        if (pick < 0) {
            throw InternalError("fpp_draw: no canonical ordering candidate");
        }
        const int c = contour[pick];
        const int left = contour[pick - 1];
        const int right = contour[pick + 1];
        std::vector<int> below;
        for (int w = map.next_ccw(c, left); w != right; w = map.next_ccw(c, w)) {
            if (removed[w] || on_contour[w]) {
                throw InternalError("fpp_draw: contour update failed");
            }
            below.push_back(w);
        }
        order[k] = c;
        removed[c] = 1;
        on_contour[c] = 0;
        for (int w : below) {
            on_contour[w] = 1;
        }
        contour.erase(contour.begin() + pick);
        contour.insert(contour.begin() + pick, below.begin(), below.end());
    }
    order[0] = v1;
    order[1] = v2;
    std::vector<int> rank(n);
    for (int k = 0; k < n; ++k) {
        rank[order[k]] = k;
    }

    Drawing d;
    d.coords.assign(n, {0, 0});
    d.coords[v1] = {0, 0};
    d.coords[v2] = {2, 0};
    if (n == 3) {
        d.coords[order[2]] = {1, 1};
        return d;
    }
    std::vector<std::vector<int>> under(n);
    for (int v = 0; v < n; ++v) {
        under[v] = {v};
    }
    const int v3 = order[2];
    d.coords[v3] = {1, 1};
    contour = {v1, v3, v2};
    for (int k = 3; k < n; ++k) {
        const int v = order[k];
        int p = -1;
        int q = -1;
        for (int i = 0; i < static_cast<int>(contour.size()); ++i) {
            if (map.adjacent(v, contour[i]) && rank[contour[i]] < k) {
                if (p < 0) {
                    p = i;
                }
                q = i;
            }
        }
        if (p < 0 || p == q) {
            throw InternalError("fpp_draw: lower neighbors not found on contour");
        }
        for (int i = p + 1; i < q; ++i) {
            for (int w : under[contour[i]]) {
                d.coords[w][0] += 1;
            }
        }
        for (int i = q; i < static_cast<int>(contour.size()); ++i) {
            for (int w : under[contour[i]]) {
                d.coords[w][0] += 2;
            }
        }
        const auto [xp, yp] = d.coords[contour[p]];
        const auto [xq, yq] = d.coords[contour[q]];
        d.coords[v] = {(xp + xq + yq - yp) / 2, (xq - xp + yp + yq) / 2};
        for (int i = p + 1; i < q; ++i) {
            under[v].insert(under[v].end(), under[contour[i]].begin(), under[contour[i]].end());
        }
        contour.erase(contour.begin() + p + 1, contour.begin() + q);
        contour.insert(contour.begin() + p + 1, v);
    }
    return d;
}

}  // namespace tridecomp
