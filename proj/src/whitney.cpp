#include "tridecomp/whitney.hpp"

#include "bigstack.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tridecomp {

const char* color_name(Color c) {
    switch (c) {
        case Color::Black:
            return "black";
        case Color::Red:
            return "red";
        case Color::Blue:
            return "blue";
    }
    return "?";
}

namespace {

Color swapped(Color c) {
    return c == Color::Red ? Color::Blue : c == Color::Blue ? Color::Red : c;
}

bool path_induced(const PlaneMap& g, const std::vector<int>& path) {
    std::vector<int> idx(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
        idx[path[i]] = i;
    }
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
        for (int w : g.rotation(path[i])) {
            if (idx[w] >= 0 && std::abs(idx[w] - i) > 1) {
                return false;
            }
        }
    }
    return true;
}

// Neighbors of v strictly between a and b, counterclockwise.
std::vector<int> between(const PlaneMap& g, int v, int a, int b) {
    std::vector<int> out;
    for (int w = g.next_ccw(v, a); w != b; w = g.next_ccw(v, w)) {
        out.push_back(w);
    }
    return out;
}

std::vector<int> interior_of(const std::vector<int>& path) {
    if (path.size() < 2) {
        return {};
    }
    return {path.begin() + 1, path.end() - 1};
}

std::vector<int> join(std::vector<int> a, std::vector<int> b, bool reverse_b) {
    if (reverse_b) {
        std::reverse(b.begin(), b.end());
    }
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

class Solver {
  public:
    explicit Solver(const WhitneyObserver& obs) : obs_(obs) {}

    OrientedColoring solve(const PlaneMap& g, int x, int y, int z);

  private:
    const WhitneyObserver& obs_;
};

struct Frame {
    Solver& solver;
    const PlaneMap& g;
    OrientedColoring out;

    void add(int tail, int head, Color c) { out.push_back({tail, head, c}); }

    void drop(int a, int b) {
        const Edge e(a, b);
        std::erase_if(out, [&](const OrientedEdge& oe) { return oe.edge() == e; });
    }

    // Colors the sub-disk bounded by `cycle` and merges it; returns its vertices.
    std::vector<int> sub(const std::vector<int>& cycle, int a, int b, int c, bool flip,
                         bool swap) {
        const SubMap s = region_subgraph(g, cycle);
        const auto inv = s.from_parent(g.vertex_count());
        const PlaneMap m = flip ? mirror(s.map) : s.map;
        for (const auto& e : solver.solve(m, inv[a], inv[b], inv[c])) {
            add(s.to_parent[e.tail], s.to_parent[e.head], swap ? swapped(e.color) : e.color);
        }
        return s.to_parent;
    }
};

// Biconnected blocks (as vertex sets) of the subgraph induced by `keep`.
std::vector<std::vector<int>> blocks(const PlaneMap& g, const std::vector<char>& keep) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<int>> out;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        for (int w : g.rotation(v)) {
            if (!keep[w] || w == parent) {
                continue;
            }
            if (disc[w] < 0) {
                stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::set<int> verts;
                    while (true) {
                        const auto [a, b] = stack.back();
                        stack.pop_back();
                        verts.insert(a);
                        verts.insert(b);
                        if (a == v && b == w) {
                            break;
                        }
                    }
                    out.emplace_back(verts.begin(), verts.end());
                }
            } else if (disc[w] < disc[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v) {
        if (keep[v] && disc[v] < 0) {
            dfs(v, -1);
        }
    }
    return out;
}

OrientedColoring Solver::solve(const PlaneMap& g, int x, int y, int z) {
    Frame f{*this, g, {}};
    int rule = 0;
    const int n = g.vertex_count();
    auto nxt = [&](int v) { return g.outer_next(v); };
    auto prv = [&](int v) { return g.outer_prev(v); };
    auto path = [&](int a, int b) { return outer_path(g, a, b); };

    if (n == 3) {
        f.add(x, y, Color::Black);
        f.add(y, z, Color::Black);
        f.add(x, z, Color::Blue);
    } else if (x == y) {
        rule = 1;
        const int xp = prv(x);
        const int yp = nxt(x);
        f.sub(join(path(yp, xp), g.inner_neighbors(x), true), xp, yp, z, false, false);
        f.add(x, xp, Color::Black);
        for (int w : g.rotation(x)) {
            if (w != xp) {
                f.add(w, x, Color::Red);
            }
        }
    } else {
        const auto pyz = path(y, z);
        const auto pzx = path(z, x);
        const auto pxy = path(x, y);
        int u = -1;
        for (int i = static_cast<int>(pyz.size()) - 2; i >= 1 && u < 0; --i) {
            if (g.adjacent(x, pyz[i])) {
                u = pyz[i];
            }
        }
        int u3 = -1;
        int v3 = -1;
        if (u < 0) {
            std::vector<int> zx_idx(n, -1);
            for (int i = 0; i + 1 < static_cast<int>(pzx.size()); ++i) {
                zx_idx[pzx[i]] = i;
            }
            for (int i = 1; i + 1 < static_cast<int>(pxy.size()) && u3 < 0; ++i) {
                int best = -1;
                for (int w : g.rotation(pxy[i])) {
                    if (zx_idx[w] >= 0 && (best < 0 || zx_idx[w] < zx_idx[best])) {
                        best = w;
                    }
                }
                if (best >= 0) {
                    u3 = pxy[i];
                    v3 = best;
                }
            }
        }
        if (u >= 0) {
            rule = 2;
            f.sub(path(x, u), x, y, u, false, false);
            const bool xz = g.adjacent(x, z);
            const bool uz = g.adjacent(u, z);
            const int xp = prv(x);
            const auto fan = between(g, x, u, xp);
            if (xz && uz) {
                f.add(u, z, Color::Black);
            } else if (xz) {
                f.sub(join(path(u, xp), fan, true), u, u, z, false, false);
            } else {
                f.sub(join(path(u, xp), fan, true), u, xp, z, true, true);
            }
            f.drop(x, u);
            auto outside = fan;
            outside.push_back(xp);
            if (xz) {
                f.add(u, x, Color::Red);
                for (int w : outside) {
                    if (w == z) {
                        f.add(x, z, Color::Blue);
                    } else {
                        f.add(w, x, Color::Red);
                    }
                }
            } else {
                f.add(x, u, Color::Blue);
                for (int w : outside) {
                    f.add(w, x, Color::Blue);
                }
            }
        } else if (u3 >= 0) {
            rule = 3;
            const int uu = u3;
            const int v = v3;
            f.sub(path(uu, v), uu, y, z, false, false);
            const int yp = nxt(v);
            if (g.adjacent(x, uu) && g.adjacent(x, v)) {
                f.add(x, uu, Color::Black);
            } else {
                f.sub(join(path(yp, uu), between(g, v, yp, uu), true), x, yp, uu, true, false);
            }
            f.add(yp, v, Color::Blue);
            for (int w : between(g, v, yp, uu)) {
                f.add(w, v, Color::Blue);
            }
        } else if (g.adjacent(x, z)) {
            rule = 4;
            const int xp = nxt(x);
            f.sub(join(path(xp, z), g.inner_neighbors(x), true), xp, y, z, false, false);
            f.add(x, xp, Color::Black);
            for (int w : g.rotation(x)) {
                if (w == z) {
                    f.add(x, z, Color::Blue);
                } else if (w != xp) {
                    f.add(w, x, Color::Red);
                }
            }
        } else if (g.adjacent(y, z)) {
            rule = 5;
            const int yp = nxt(z);
            f.sub(join(path(yp, y), g.inner_neighbors(z), true), x, yp, y, true, false);
            f.add(y, z, Color::Black);
            for (int w : g.rotation(z)) {
                if (w != y) {
                    f.add(w, z, Color::Blue);
                }
            }
        } else {
            int u6 = -1;
            for (int i = 1; i + 1 < static_cast<int>(pzx.size()) && u6 < 0; ++i) {
                if (g.adjacent(y, pzx[i])) {
                    u6 = pzx[i];
                }
            }
            if (u6 >= 0) {
                rule = 6;
                f.sub(path(y, u6), y, y, z, false, false);
                const int yp = nxt(u6);
                if (g.adjacent(u6, x) && g.adjacent(x, y)) {
                    f.add(x, y, Color::Black);
                } else {
                    f.sub(join(path(yp, y), between(g, u6, yp, y), true), x, yp, y, true,
                          false);
                }
                f.add(yp, u6, Color::Blue);
                for (int w : between(g, u6, yp, y)) {
                    f.add(w, u6, Color::Blue);
                }
            } else {
                rule = 7;
                std::vector<int> xy_idx(n, -1);
                for (int i = 0; i < static_cast<int>(pxy.size()); ++i) {
                    xy_idx[pxy[i]] = i;
                }
                std::vector<int> yz_idx(n, -1);
                for (int i = 1; i + 1 < static_cast<int>(pyz.size()); ++i) {
                    yz_idx[pyz[i]] = i;
                }
                int u7 = y;
                int v7 = nxt(y);
                for (int i = 1; i + 1 < static_cast<int>(pxy.size()); ++i) {
                    int best = -1;
                    for (int w : g.rotation(pxy[i])) {
                        if (yz_idx[w] >= 0 && (best < 0 || yz_idx[w] > yz_idx[best])) {
                            best = w;
                        }
                    }
                    if (best >= 0) {
                        u7 = pxy[i];
                        v7 = best;
                        break;
                    }
                }
                const int w = prv(x);

                // Shortest v-w path through the layer of neighbors of P_xy.
                std::vector<char> layer(n, 0);
                for (int a = 0; a < n; ++a) {
                    if (xy_idx[a] >= 0) {
                        continue;
                    }
                    for (int b : g.rotation(a)) {
                        if (xy_idx[b] >= 0) {
                            layer[a] = 1;
                        }
                    }
                }
                std::vector<int> dist(n, -1);
                std::vector<int> queue{w};
                dist[w] = 0;
                for (std::size_t k = 0; k < queue.size(); ++k) {
                    for (int b : g.rotation(queue[k])) {
                        if (layer[b] && dist[b] < 0) {
                            dist[b] = dist[queue[k]] + 1;
                            queue.push_back(b);
                        }
                    }
                }
                if (!layer[v7] || dist[v7] < 0) {
                    throw InternalError("whitney: no path between v and w in the neighbor layer");
                }
                std::vector<int> p{v7};
                while (p.back() != w) {
                    int step = -1;
                    for (int b : g.rotation(p.back())) {
                        if (layer[b] && dist[b] == dist[p.back()] - 1 && (step < 0 || b < step)) {
                            step = b;
                        }
                    }
                    p.push_back(step);
                }
                std::vector<int> p_idx(n, -1);
                for (int i = 0; i < static_cast<int>(p.size()); ++i) {
                    p_idx[p[i]] = i;
                }

                std::vector<char> used(n, 0);
                for (int a : f.sub(join(path(v7, w), interior_of(p), true), v7, w, z, true, true)) {
                    used[a] = 1;
                }
                if (u7 != y) {
                    for (int a : f.sub(path(u7, v7), u7, y, v7, false, false)) {
                        used[a] = 1;
                    }
                } else {
                    f.add(u7, v7, Color::Black);
                    used[u7] = used[v7] = 1;
                }
                std::vector<char> rest(n, 0);
                for (int a = 0; a < n; ++a) {
                    rest[a] = !used[a];
                }
                rest[u7] = 1;

                for (const auto& block : blocks(g, rest)) {
                    int xi = -1;
                    int zi = -1;
                    for (int a : block) {
                        if (xy_idx[a] < 0) {
                            continue;
                        }
                        if (xi < 0 || xy_idx[a] < xy_idx[xi]) {
                            xi = a;
                        }
                        if (zi < 0 || xy_idx[a] > xy_idx[zi]) {
                            zi = a;
                        }
                    }
                    if (xi < 0 || xi == zi) {
                        throw InternalError("whitney: block does not meet P_xy twice");
                    }
                    if (block.size() == 2) {
                        f.add(xi, zi, Color::Black);
                        continue;
                    }
                    std::vector<char> in_block(n, 0);
                    for (int a : block) {
                        in_block[a] = 1;
                    }
                    auto prev_in_block = [&](int at, int from) {
                        int c = g.prev_ccw(at, from);
                        while (!in_block[c]) {
                            c = g.prev_ccw(at, c);
                        }
                        return c;
                    };
                    std::vector<int> walk;
                    {
                        int a = nxt(xi);
                        int b = xi;
                        const int a0 = a;
                        do {
                            walk.push_back(a);
                            const int c = prev_in_block(b, a);
                            a = b;
                            b = c;
                        } while (a != a0 || b != xi);
                    }
                    std::reverse(walk.begin(), walk.end());
                    bool common = false;
                    for (int a : g.rotation(xi)) {
                        if (p_idx[a] >= 0 && g.adjacent(a, zi)) {
                            common = true;
                        }
                    }
                    int yi = xi;
                    if (!common) {
                        yi = -1;
                        for (int a : block) {
                            if (a == xi || a == zi) {
                                continue;
                            }
                            int on_p = 0;
                            for (int b : g.rotation(a)) {
                                on_p += p_idx[b] >= 0 ? 1 : 0;
                            }
                            if (on_p >= 2) {
                                if (yi >= 0) {
                                    throw InternalError("whitney: block has two apex candidates");
                                }
                                yi = a;
                            }
                        }
                        if (yi < 0) {
                            throw InternalError("whitney: block apex not found");
                        }
                    }
                    f.sub(walk, xi, yi, zi, true, false);
                }

                std::set<Edge> colored;
                for (const auto& e : f.out) {
                    colored.insert(e.edge());
                }
                for (int i = 0; i < static_cast<int>(p.size()); ++i) {
                    const int at = p[i];
                    const auto& r = g.rotation(at);
                    const int start = at == w ? g.rotation_index(at, x)
                                              : (g.rotation_index(at, p[i + 1]) + 1) %
                                                    static_cast<int>(r.size());
                    std::vector<int> open;
                    for (std::size_t k = 0; k < r.size(); ++k) {
                        const int b = r[(start + k) % r.size()];
                        if (!colored.count(Edge(at, b))) {
                            if (p_idx[b] >= 0) {
                                throw InternalError("whitney: uncolored edge inside P");
                            }
                            open.push_back(b);
                        }
                    }
                    int last = -1;
                    for (int k = 0; k < static_cast<int>(open.size()); ++k) {
                        if (xy_idx[open[k]] >= 0) {
                            last = k;
                        }
                    }
                    for (int k = 0; k < static_cast<int>(open.size()); ++k) {
                        const int b = open[k];
                        if (last < 0 || k < last) {
                            f.add(b, at, Color::Blue);
                        } else if (k == last) {
                            f.add(at, b, Color::Blue);
                        } else {
                            f.add(b, at, Color::Red);
                        }
                        colored.insert(Edge(at, b));
                    }
                }
            }
        }
    }

    std::sort(f.out.begin(), f.out.end(),
              [](const OrientedEdge& a, const OrientedEdge& b) { return a.edge() < b.edge(); });
    if (static_cast<int>(f.out.size()) != g.edge_count()) {
        throw InternalError("whitney: rule " + std::to_string(rule) + " colored " +
                            std::to_string(f.out.size()) + " of " +
                            std::to_string(g.edge_count()) + " edges");
    }
    for (std::size_t i = 1; i < f.out.size(); ++i) {
        if (f.out[i].edge() == f.out[i - 1].edge()) {
            throw InternalError("whitney: rule " + std::to_string(rule) + " colored an edge twice");
        }
    }
    if (obs_) {
        obs_(WhitneyInstance{g, x, y, z}, rule, f.out);
    }
    return std::move(f.out);
}

}  // namespace

std::vector<std::string> whitney_violations(const PlaneMap& disk, int x, int y, int z) {
    std::vector<std::string> report = validate(disk, MapKind::InnerDisk);
    if (!report.empty()) {
        return report;
    }
    const int n = disk.vertex_count();
    const int len = static_cast<int>(disk.outer().size());
    for (int v : {x, y, z}) {
        if (!disk.on_outer(v)) {
            report.push_back("role vertex " + std::to_string(v) + " is not an outer vertex");
        }
    }
    if (!report.empty()) {
        return report;
    }
    if (z == x || z == y) {
        report.push_back("z must differ from x and y");
        return report;
    }
    auto gap = [&](int a, int b) {
        return (disk.outer_position(b) - disk.outer_position(a) + len) % len;
    };
    if (gap(x, y) >= gap(x, z)) {
        report.push_back("x, y, z are not in counterclockwise order");
        return report;
    }
    // A 3-clique other than an inner face has something inside it.
    const auto& outer = disk.outer();
    for (int a = 0; a < n; ++a) {
        for (int b : disk.rotation(a)) {
            if (b < a) {
                continue;
            }
            for (int c : disk.rotation(b)) {
                if (c <= b || !disk.adjacent(a, c)) {
                    continue;
                }
                const bool outer_triangle =
                    len == 3 && Triangle(a, b, c) == Triangle(outer[0], outer[1], outer[2]);
                const bool face = disk.prev_ccw(b, a) == c || disk.prev_ccw(a, b) == c;
                if (!face || (outer_triangle && n > 3)) {
                    report.push_back("contains a filled triangle {" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + "}");
                }
            }
        }
    }
    const char* names[] = {"P_xy", "P_yz", "P_zx"};
    const std::pair<int, int> ends[] = {{x, y}, {y, z}, {z, x}};
    for (int i = 0; i < 3; ++i) {
        if (!path_induced(disk, outer_path(disk, ends[i].first, ends[i].second))) {
            report.push_back(std::string(names[i]) + " is not an induced path");
        }
    }
    if (x == y && disk.adjacent(z, x)) {
        report.push_back("x = y but zx is an edge");
    }
    return report;
}

OrientedColoring whitney_color(const WhitneyInstance& inst, const WhitneyObserver& observer) {
    const auto report = whitney_violations(inst.disk, inst.x, inst.y, inst.z);
    if (!report.empty()) {
        std::string msg = "not a Whitney graph:";
        for (const auto& line : report) {
            msg += " " + line + ";";
        }
        throw InputError(msg);
    }
    OrientedColoring result;
    detail::run_on_big_stack([&] {
        Solver solver(observer);
        result = solver.solve(inst.disk, inst.x, inst.y, inst.z);
    });
    return result;
}

}  // namespace tridecomp
