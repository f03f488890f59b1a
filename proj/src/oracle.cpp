#include "tridecomp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace tridecomp {

namespace {

std::string vname(int v) { return std::to_string(v); }

class Dsu {
  public:
    explicit Dsu(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

  private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

}  // namespace

std::vector<std::string> check_whitney_properties(const PlaneMap& disk,
                                                  const OrientedColoring& coloring, int x, int y,
                                                  int z) {
    std::vector<std::string> report;
    const int n = disk.vertex_count();
    std::set<Edge> seen;
    for (const auto& e : coloring) {
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n ||
            !disk.adjacent(e.tail, e.head)) {
            report.push_back("coloring: " + vname(e.tail) + "->" + vname(e.head) + " is not an edge");
            return report;
        }
        if (!seen.insert(e.edge()).second) {
            report.push_back("coloring: edge " + vname(e.tail) + "-" + vname(e.head) +
                             " colored twice");
        }
    }
    if (static_cast<int>(seen.size()) != disk.edge_count()) {
        report.push_back("coloring: " + std::to_string(disk.edge_count() - seen.size()) +
                         " edge(s) uncolored");
    }
    if (!report.empty()) {
        return report;
    }

    std::vector<int> black_out(n, -1);
    std::vector<int> black_in(n, 0);
    std::vector<int> red_out(n, -1);
    std::vector<int> blue_out(n, -1);
    std::vector<int> red_count(n, 0);
    std::vector<int> blue_count(n, 0);
    bool black_ok = true;
    for (const auto& e : coloring) {
        switch (e.color) {
            case Color::Black:
                if (black_out[e.tail] >= 0) {
                    black_ok = false;
                }
                black_out[e.tail] = e.head;
                ++black_in[e.head];
                break;
            case Color::Red:
                red_out[e.tail] = e.head;
                ++red_count[e.tail];
                break;
            case Color::Blue:
                blue_out[e.tail] = e.head;
                ++blue_count[e.tail];
                break;
        }
    }

    // (1)
    {
        int steps = 0;
        int v = x;
        std::vector<char> visited(n, 0);
        while (black_ok && v >= 0 && !visited[v]) {
            visited[v] = 1;
            ++steps;
            v = black_out[v];
        }
        const bool ends_at_z = black_ok && black_out[z] < 0;
        if (!black_ok || v >= 0 || steps != n || !ends_at_z ||
            std::any_of(black_in.begin(), black_in.end(), [](int c) { return c > 1; })) {
            report.push_back("(1) black edges are not a directed Hamiltonian path from x to z");
        }
    }

    const auto pxy = outer_path(disk, x, y);
    const auto pyz = outer_path(disk, y, z);
    const auto pzx = outer_path(disk, z, x);
    std::vector<int> where(n, 0);  // 0 inner, 3/4/5 open paths, 6 y or z, 7 x
    for (int v = 0; v < n; ++v) {
        if (disk.on_outer(v)) {
            where[v] = -1;
        }
    }
    auto mark_open = [&](const std::vector<int>& p, int tag) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            where[p[i]] = tag;
        }
    };
    mark_open(pxy, 3);
    mark_open(pyz, 4);
    mark_open(pzx, 5);
    where[y] = 6;
    where[z] = 6;
    where[x] = x == y ? 6 : 7;

    for (int v = 0; v < n; ++v) {
        const int r = red_count[v];
        const int b = blue_count[v];
        switch (where[v]) {
            case 0:
                if (r != 1 || b != 1) {
                    report.push_back("(2) inner vertex " + vname(v) + " has " + std::to_string(r) +
                                     " red and " + std::to_string(b) + " blue out-edges");
                }
                break;
            case 3:
            case 5:
                if (r != 0 || b != 1) {
                    report.push_back("(" + std::to_string(where[v]) + ") vertex " + vname(v) +
                                     " has " + std::to_string(r) + " red and " +
                                     std::to_string(b) + " blue out-edges");
                }
                break;
            case 4:
                if (r != 1 || b != 0) {
                    report.push_back("(4) vertex " + vname(v) + " has " + std::to_string(r) +
                                     " red and " + std::to_string(b) + " blue out-edges");
                }
                break;
            case 6:
                if (v == x && x == y) {
                    if (r != 0 || b != 0) {
                        report.push_back("(7) x = y has red or blue out-edges");
                    }
                } else if (r != 0 || b != 0) {
                    report.push_back("(6) " + std::string(v == y ? "y" : "z") +
                                     " has red or blue out-edges");
                }
                break;
            case 7:
                if (r != 0 || b != 1) {
                    report.push_back("(7) x has " + std::to_string(r) + " red and " +
                                     std::to_string(b) + " blue out-edges");
                } else if (disk.adjacent(x, z) && blue_out[x] != z) {
                    report.push_back("(7) x's blue out-edge is not xz");
                }
                break;
            default:
                report.push_back("internal: vertex " + vname(v) + " unclassified");
        }
    }

    // (8)
    for (Color c : {Color::Red, Color::Blue}) {
        std::vector<std::vector<int>> adj(n);
        for (const auto& e : coloring) {
            if (e.color == c) {
                adj[e.tail].push_back(e.head);
            }
        }
        std::vector<int> indeg(n, 0);
        for (int v = 0; v < n; ++v) {
            for (int w : adj[v]) {
                ++indeg[w];
            }
        }
        std::vector<int> q;
        for (int v = 0; v < n; ++v) {
            if (indeg[v] == 0) {
                q.push_back(v);
            }
        }
        for (std::size_t i = 0; i < q.size(); ++i) {
            for (int w : adj[q[i]]) {
                if (--indeg[w] == 0) {
                    q.push_back(w);
                }
            }
        }
        if (static_cast<int>(q.size()) != n) {
            report.push_back("(8) monochromatic directed cycle");
            break;
        }
    }
    return report;
}

namespace {

// Acyclicity, optional connectivity on `span`, and that no edge leaves `span`.
void check_shape(int n, const std::vector<Edge>& part, const std::vector<char>& span,
                 bool connected, const std::string& name, std::vector<std::string>& report) {
    Dsu dsu(n);
    for (const auto& e : part) {
        if (!span[e.u] || !span[e.v]) {
            report.push_back(name + " uses edge " + vname(e.u) + "-" + vname(e.v) +
                             " outside its vertex set");
        }
        if (!dsu.unite(e.u, e.v)) {
            report.push_back(name + " has a cycle through " + vname(e.u) + "-" + vname(e.v));
            return;
        }
    }
    if (!connected) {
        return;
    }
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (!span[v]) {
            continue;
        }
        if (root < 0) {
            root = dsu.find(v);
        } else if (dsu.find(v) != root) {
            report.push_back(name + " is disconnected: " + vname(v) + " is not reached");
            return;
        }
    }
}

void check_degree(int n, const std::vector<Edge>& part, int bound, const std::string& name,
                  std::vector<std::string>& report) {
    std::vector<int> deg(n, 0);
    for (const auto& e : part) {
        ++deg[e.u];
        ++deg[e.v];
    }
    for (int v = 0; v < n; ++v) {
        if (deg[v] > bound) {
            report.push_back(name + " has degree " + std::to_string(deg[v]) + " at " + vname(v) +
                             ", bound " + std::to_string(bound));
        }
    }
}

void check_partition(const PlaneMap& map, const std::array<std::vector<Edge>, 3>& parts,
                     const std::array<std::string, 3>& names, std::vector<std::string>& report) {
    std::vector<std::pair<Edge, int>> all;
    for (int i = 0; i < 3; ++i) {
        for (const auto& e : parts[i]) {
            all.emplace_back(e, i);
        }
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (all[i].first == all[i - 1].first) {
            report.push_back("edge " + vname(all[i].first.u) + "-" + vname(all[i].first.v) +
                             " is in both " + names[all[i - 1].second] + " and " +
                             names[all[i].second]);
        }
    }
    const auto edges = map.edges();
    for (const auto& [e, i] : all) {
        if (!std::binary_search(edges.begin(), edges.end(), e)) {
            report.push_back(names[i] + " contains non-edge " + vname(e.u) + "-" + vname(e.v));
        }
    }
    for (const auto& e : edges) {
        const auto it = std::lower_bound(all.begin(), all.end(), std::make_pair(e, -1));
        if (it == all.end() || it->first != e) {
            report.push_back("edge " + vname(e.u) + "-" + vname(e.v) + " is in no part");
        }
    }
}

}  // namespace

std::vector<std::string> check_decomposition(const PlaneMap& map, const Decomposition& dec) {
    std::vector<std::string> report;
    const int n = map.vertex_count();
    const std::array<std::string, 3> names{"T0", "T1", "T2"};
    check_partition(map, dec.parts, names, report);
    for (int v : dec.w) {
        if (v < 0 || v >= n) {
            report.push_back("w label " + vname(v) + " is out of range");
            return report;
        }
    }
    const auto [w0, w1, w2] = dec.w;
    if (!map.adjacent(w0, w1) || !map.adjacent(w1, w2) || !map.adjacent(w2, w0)) {
        report.push_back("w labels do not form a triangle");
        return report;
    }
    const std::array<std::vector<int>, 3> removed{std::vector<int>{},
                                                  std::vector<int>{dec.w[0], dec.w[2]},
                                                  std::vector<int>{dec.w[1]}};
    for (int i = 0; i < 3; ++i) {
        std::vector<char> span(n, 1);
        for (int v : removed[i]) {
            span[v] = 0;
        }
        check_shape(n, dec.parts[i], span, true, names[i], report);
    }
    check_degree(n, dec.parts[0], dec.degree_bound, "T0", report);
    if (dec.degree_bound == 2 && n > 1) {
        std::vector<int> deg(n, 0);
        for (const auto& e : dec.parts[0]) {
            ++deg[e.u];
            ++deg[e.v];
        }
        const auto leaves = std::count(deg.begin(), deg.end(), 1);
        if (leaves != 2) {
            report.push_back("T0 has " + std::to_string(leaves) + " leaves, a path has 2");
        }
    }
    return report;
}

std::vector<std::string> check_decomposition(const PlaneMap& map,
                                             const std::array<std::vector<Edge>, 3>& parts,
                                             const DecisionSpec& spec) {
    std::vector<std::string> report;
    const int n = map.vertex_count();
    const std::array<std::string, 3> names{"F1", "F2", "H"};
    check_partition(map, parts, names, report);
    const std::vector<char> all(n, 1);
    check_shape(n, parts[0], all, false, "F1", report);
    check_shape(n, parts[1], all, false, "F2", report);
    const bool acyclic = spec.third == ThirdPart::Forest || spec.third == ThirdPart::Tree;
    const bool connected = spec.third == ThirdPart::Connected || spec.third == ThirdPart::Tree;
    if (acyclic) {
        check_shape(n, parts[2], all, connected, "H", report);
    } else if (connected) {
        Dsu dsu(n);
        for (const auto& e : parts[2]) {
            dsu.unite(e.u, e.v);
        }
        for (int v = 1; v < n; ++v) {
            if (dsu.find(v) != dsu.find(0)) {
                report.push_back("H is disconnected: " + vname(v) + " is not reached");
                break;
            }
        }
    }
    check_degree(n, parts[2], spec.d, "H", report);
    for (std::size_t r = 0; r < spec.forest_regions.size(); ++r) {
        const auto& region = spec.forest_regions[r];
        std::vector<Edge> inside;
        for (const auto& e : parts[2]) {
            if (std::find(region.begin(), region.end(), e) != region.end()) {
                inside.push_back(e);
            }
        }
        check_shape(n, inside, all, false, "H inside region " + std::to_string(r), report);
    }
    return report;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Sat:
            return "SAT";
        case Status::Unsat:
            return "UNSAT";
        case Status::Unknown:
            return "UNKNOWN";
    }
    return "UNKNOWN";
}

int count_tree_components(int n, const std::vector<std::vector<Edge>>& parts) {
    int trees = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        Dsu dsu(n);
        for (const auto& e : parts[p]) {
            dsu.unite(e.u, e.v);
        }
        std::vector<int> verts(n, 0);
        std::vector<int> edges(n, 0);
        std::vector<int> deg(n, 0);
        for (int v = 0; v < n; ++v) {
            ++verts[dsu.find(v)];
        }
        for (const auto& e : parts[p]) {
            ++edges[dsu.find(e.u)];
            ++deg[e.u];
            ++deg[e.v];
        }
        std::vector<char> cyclic_ok(n, 1);
        for (int v = 0; v < n; ++v) {
            if (deg[v] != 2) {
                cyclic_ok[dsu.find(v)] = 0;
            }
        }
        for (int r = 0; r < n; ++r) {
            if (verts[r] == 0) {
                continue;
            }
            if (edges[r] == verts[r] - 1) {
                ++trees;
            } else if (edges[r] != verts[r] || !cyclic_ok[r]) {
                throw InputError("part " + std::to_string(p) + " has a component at " + vname(r) +
                                 " that is neither a tree nor a cycle");
            }
        }
    }
    return trees;
}

HamSearch find_ham_cycle(const PlaneMap& map, std::uint64_t budget) {
    const int n = map.vertex_count();
    HamSearch result;
    if (n < 3) {
        result.status = Status::Unsat;
        return result;
    }
    std::vector<int> path{0};
    std::vector<char> used(n, 0);
    used[0] = 1;
    bool out_of_budget = false;
    std::function<bool()> extend = [&]() -> bool {
        if (++result.nodes_explored > budget) {
            out_of_budget = true;
            return false;
        }
        const int last = path.back();
        if (static_cast<int>(path.size()) == n) {
            return map.adjacent(last, 0);
        }
        for (int w : map.rotation(last)) {
            if (used[w]) {
                continue;
            }
            used[w] = 1;
            path.push_back(w);
            if (extend()) {
                return true;
            }
            path.pop_back();
            used[w] = 0;
            if (out_of_budget) {
                return false;
            }
        }
        return false;
    };
    if (extend()) {
        result.status = Status::Sat;
        result.cycle = path;
    } else {
        result.status = out_of_budget ? Status::Unknown : Status::Unsat;
    }
    return result;
}

namespace {

using Point = std::array<std::int64_t, 2>;

std::int64_t cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    return cross(a, b, p) == 0 && std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
    const auto d1 = cross(a, b, c);
    const auto d2 = cross(a, b, d);
    const auto d3 = cross(c, d, a);
    const auto d4 = cross(c, d, b);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return true;
    }
    return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
           on_segment(b, c, d);
}

// Counterclockwise angle order starting from the positive x axis.
bool angle_less(const Point& a, const Point& b) {
    const auto half = [](const Point& p) { return p[1] < 0 || (p[1] == 0 && p[0] < 0) ? 1 : 0; };
    if (half(a) != half(b)) {
        return half(a) < half(b);
    }
    return a[0] * b[1] - a[1] * b[0] > 0;
}

}  // namespace

std::vector<std::string> check_drawing(const PlaneMap& map, const Drawing& d) {
    std::vector<std::string> report;
    const int n = map.vertex_count();
    if (static_cast<int>(d.coords.size()) != n) {
        report.push_back("drawing has " + std::to_string(d.coords.size()) + " points for " +
                         std::to_string(n) + " vertices");
        return report;
    }
    std::set<Point> points(d.coords.begin(), d.coords.end());
    if (static_cast<int>(points.size()) != n) {
        report.push_back("two vertices share a grid point");
    }
    const auto edges = map.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& e = edges[i];
            const Edge& f = edges[j];
            const auto& a = d.coords[e.u];
            const auto& b = d.coords[e.v];
            const auto& c = d.coords[f.u];
            const auto& q = d.coords[f.v];
            bool bad = false;
            if (e.has(f.u) || e.has(f.v)) {
                const int shared = e.has(f.u) ? f.u : f.v;
                const auto& s = d.coords[shared];
                const auto& x = d.coords[e.other(shared)];
                const auto& y = d.coords[f.other(shared)];
                bad = cross(s, x, y) == 0 &&
                      (x[0] - s[0]) * (y[0] - s[0]) + (x[1] - s[1]) * (y[1] - s[1]) > 0;
            } else {
                bad = segments_meet(a, b, c, q);
            }
            if (bad) {
                report.push_back("edges " + vname(e.u) + "-" + vname(e.v) + " and " + vname(f.u) +
                                 "-" + vname(f.v) + " cross or overlap");
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        auto nbrs = map.rotation(v);
        if (nbrs.empty()) {
            continue;
        }
        const auto& o = d.coords[v];
        std::sort(nbrs.begin(), nbrs.end(), [&](int a, int b) {
            const Point pa{d.coords[a][0] - o[0], d.coords[a][1] - o[1]};
            const Point pb{d.coords[b][0] - o[0], d.coords[b][1] - o[1]};
            return angle_less(pa, pb);
        });
        const auto& rot = map.rotation(v);
        const auto start = std::find(nbrs.begin(), nbrs.end(), rot.front());
        std::rotate(nbrs.begin(), start, nbrs.end());
        if (nbrs != rot) {
            report.push_back("angular order at " + vname(v) + " differs from its rotation");
        }
    }
    std::int64_t area2 = 0;
    const auto& o = map.outer();
    for (std::size_t i = 0; i < o.size(); ++i) {
        const auto& p = d.coords[o[i]];
        const auto& q = d.coords[o[(i + 1) % o.size()]];
        area2 += p[0] * q[1] - p[1] * q[0];
    }
    if (area2 <= 0) {
        report.push_back("outer cycle is not counterclockwise in the drawing");
    }
    return report;
}

}  // namespace tridecomp
