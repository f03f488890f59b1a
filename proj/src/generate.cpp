#include "tridecomp/generate.hpp"

#include "tridecomp/separation.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace tridecomp {

namespace {

using Face = std::array<int, 3>;

// Portable draws: std::mt19937_64 is bit-specified, the distributions are not.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int below(int k) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(k)); }
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            std::swap(v[i], v[below(i + 1)]);
        }
    }

  private:
    std::mt19937_64 eng_;
};

void random_inside(const std::vector<int>& poly, Rng& rng, std::vector<Face>& out) {
    std::vector<std::vector<int>> todo{poly};
    while (!todo.empty()) {
        auto p = std::move(todo.back());
        todo.pop_back();
        const int len = static_cast<int>(p.size());
        const int k = 1 + rng.below(len - 2);
        out.push_back({p[0], p[k], p[len - 1]});
        if (k >= 2) {
            todo.emplace_back(p.begin(), p.begin() + k + 1);
        }
        if (len - 1 - k >= 2) {
            todo.emplace_back(p.begin() + k, p.end());
        }
    }
}

class OutsideSearch {
  public:
    OutsideSearch(std::set<Edge> used, Rng& rng, long budget)
        : used_(std::move(used)), rng_(rng), budget_(budget) {}

    bool solve(std::vector<std::vector<int>>& todo) {
        if (todo.empty()) {
            return true;
        }
        if (--budget_ < 0) {
            return false;
        }
        auto p = std::move(todo.back());
        todo.pop_back();
        const int len = static_cast<int>(p.size());
        std::vector<int> ks;
        for (int k = 1; k <= len - 2; ++k) {
            ks.push_back(k);
        }
        rng_.shuffle(ks);
        for (int k : ks) {
            std::vector<Edge> chords;
            if (k != 1) {
                chords.emplace_back(p[0], p[k]);
            }
            if (k != len - 2) {
                chords.emplace_back(p[k], p[len - 1]);
            }
            if (std::any_of(chords.begin(), chords.end(),
                            [&](const Edge& e) { return used_.count(e) > 0; })) {
                continue;
            }
            for (const auto& e : chords) {
                used_.insert(e);
            }
            const std::size_t mark = todo.size();
            if (k >= 2) {
                todo.emplace_back(p.begin(), p.begin() + k + 1);
            }
            if (len - 1 - k >= 2) {
                todo.emplace_back(p.begin() + k, p.end());
            }
            faces.push_back({p[0], p[k], p[len - 1]});
            if (solve(todo)) {
                return true;
            }
            faces.pop_back();
            todo.resize(mark);
            for (const auto& e : chords) {
                used_.erase(e);
            }
            if (budget_ < 0) {
                break;
            }
        }
        todo.push_back(std::move(p));
        return false;
    }

    std::vector<Face> faces;

  private:
    std::set<Edge> used_;
    Rng& rng_;
    long budget_;
};

Generated polygon_ham(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> poly(n);
    for (int i = 0; i < n; ++i) {
        poly[i] = i;
    }
    std::vector<Face> inside;
    random_inside(poly, rng, inside);
    std::set<Edge> used;
    std::vector<int> inner_degree(n, 2);
    for (const auto& f : inside) {
        for (int i = 0; i < 3; ++i) {
            const int a = f[i];
            const int b = f[(i + 1) % 3];
            if ((a + 1) % n != b && (b + 1) % n != a && used.emplace(a, b).second) {
                ++inner_degree[a];
                ++inner_degree[b];
            }
        }
    }
    std::vector<Face> outside;
    OutsideSearch search(used, rng, 200000);
    std::vector<std::vector<int>> todo{poly};
    if (n > 3 && search.solve(todo)) {
        outside = search.faces;
    } else {
        // Fan from an ear tip: it has no chord inside.
        const int tip = static_cast<int>(
            std::find(inner_degree.begin(), inner_degree.end(), 2) - inner_degree.begin());
        for (int k = 1; k + 1 < n; ++k) {
            outside.push_back({tip, (tip + k) % n, (tip + k + 1) % n});
        }
    }
    std::vector<Face> faces = inside;
    for (const auto& f : outside) {
        faces.push_back({f[2], f[1], f[0]});
    }
    const Face outer_face{outside[0][2], outside[0][1], outside[0][0]};
    Generated g;
    g.map = map_from_faces(n, faces, outer_face);
    g.ham_cycle = poly;
    return g;
}

PlaneMap apollonian(int t, std::uint64_t seed) {
    Rng rng(seed);
    PlaneMap map = k4_map();
    for (int s = 0; s < t; ++s) {
        const auto& o = map.outer();
        const Triangle outer_t(o[0], o[1], o[2]);
        std::vector<std::vector<int>> inner;
        for (auto& f : map.faces()) {
            if (Triangle(f[0], f[1], f[2]) != outer_t) {
                inner.push_back(std::move(f));
            }
        }
        const auto& f = inner[rng.below(static_cast<int>(inner.size()))];
        map = stack_vertex(map, {f[0], f[1], f[2]});
    }
    return map;
}

PlaneMap flipwalk(int n, int steps, std::uint64_t seed, bool keep_four_connected) {
    Rng rng(seed);
    PlaneMap map = doublewheel_map(n - 2);
    for (int s = 0; s < steps; ++s) {
        const auto edges = map.edges();
        const Edge e = edges[rng.below(static_cast<int>(edges.size()))];
        auto next = flip_edge(map, e.u, e.v);
        if (!next) {
            continue;
        }
        if (keep_four_connected) {
            const int c = map.prev_ccw(e.v, e.u);
            const int d = map.prev_ccw(e.u, e.v);
            bool creates = false;
            for (int w : map.rotation(c)) {
                if (w != e.u && w != e.v && map.adjacent(w, d)) {
                    creates = true;
                }
            }
            if (creates) {
                continue;
            }
        }
        map = std::move(*next);
    }
    return map;
}

}  // namespace

PlaneMap triangle_map() { return map_from_faces(3, {{0, 1, 2}, {0, 2, 1}}, {0, 2, 1}); }

PlaneMap k4_map() {
    return map_from_faces(4, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {0, 2, 1}}, {0, 2, 1});
}

PlaneMap doublewheel_map(int c) {
    if (c < 4) {
        throw InputError("doublewheel needs a ring of at least 4");
    }
    const int top = 0;
    const int bottom = c + 1;
    std::vector<Face> faces;
    for (int i = 0; i < c; ++i) {
        const int a = 1 + i;
        const int b = 1 + (i + 1) % c;
        faces.push_back({top, a, b});
        faces.push_back({bottom, b, a});
    }
    return map_from_faces(c + 2, faces, faces[1]);
}

PlaneMap octahedron_map() { return doublewheel_map(4); }

PlaneMap icosahedron_map() {
    std::vector<Face> faces;
    for (int i = 0; i < 5; ++i) {
        const int u0 = 1 + i;
        const int u1 = 1 + (i + 1) % 5;
        const int l0 = 6 + i;
        const int l1 = 6 + (i + 1) % 5;
        faces.push_back({0, u0, u1});
        faces.push_back({u0, l0, u1});
        faces.push_back({u1, l0, l1});
        faces.push_back({11, l1, l0});
    }
    return map_from_faces(12, faces, faces[3]);
}

FamilySpec parse_family(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) {
        parts.push_back(item);
    }
    if (parts.empty()) {
        throw InputError("empty family spec");
    }
    auto num = [&](std::size_t i) -> long long {
        if (i >= parts.size()) {
            throw InputError("family '" + parts[0] + "' is missing parameters");
        }
        try {
            std::size_t used = 0;
            const long long v = std::stoll(parts[i], &used);
            if (used != parts[i].size()) {
                throw InputError("bad number '" + parts[i] + "'");
            }
            return v;
        } catch (const std::logic_error&) {
            throw InputError("bad number '" + parts[i] + "'");
        }
    };
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() < lo || parts.size() > hi) {
            throw InputError("wrong parameter count for family '" + parts[0] + "'");
        }
    };
    FamilySpec spec;
    const std::string& f = parts[0];
    if (f == "triangle") {
        arity(1, 1);
        spec.family = Family::Triangle;
    } else if (f == "k4") {
        arity(1, 1);
        spec.family = Family::K4;
    } else if (f == "octahedron") {
        arity(1, 1);
        spec.family = Family::Octahedron;
    } else if (f == "icosahedron") {
        arity(1, 1);
        spec.family = Family::Icosahedron;
    } else if (f == "doublewheel") {
        arity(2, 2);
        spec.family = Family::DoubleWheel;
        spec.c = static_cast<int>(num(1));
    } else if (f == "apollonian") {
        arity(3, 3);
        spec.family = Family::Apollonian;
        spec.t = static_cast<int>(num(1));
        spec.seed = static_cast<std::uint64_t>(num(2));
    } else if (f == "polygon_ham") {
        arity(3, 3);
        spec.family = Family::PolygonHam;
        spec.n = static_cast<int>(num(1));
        spec.seed = static_cast<std::uint64_t>(num(2));
    } else if (f == "flipwalk") {
        arity(4, 5);
        spec.family = Family::FlipWalk;
        spec.n = static_cast<int>(num(1));
        spec.steps = static_cast<int>(num(2));
        spec.seed = static_cast<std::uint64_t>(num(3));
        if (parts.size() == 5) {
            if (parts[4] != "4c") {
                throw InputError("flipwalk option must be '4c'");
            }
            spec.keep_four_connected = true;
        }
    } else {
        throw InputError("unknown family '" + f + "'");
    }
    return spec;
}

Generated generate(const FamilySpec& spec) {
    Generated g;
    switch (spec.family) {
        case Family::Triangle:
            g.map = triangle_map();
            break;
        case Family::K4:
            g.map = k4_map();
            break;
        case Family::Octahedron:
            g.map = octahedron_map();
            break;
        case Family::Icosahedron:
            g.map = icosahedron_map();
            break;
        case Family::DoubleWheel:
            g.map = doublewheel_map(spec.c);
            break;
        case Family::Apollonian:
            if (spec.t < 0) {
                throw InputError("apollonian needs t >= 0");
            }
            g.map = apollonian(spec.t, spec.seed);
            break;
        case Family::PolygonHam:
            if (spec.n < 3) {
                throw InputError("polygon_ham needs n >= 3");
            }
            g = polygon_ham(spec.n, spec.seed);
            break;
        case Family::FlipWalk:
            if (spec.n < 6 || spec.steps < 0) {
                throw InputError("flipwalk needs n >= 6 and steps >= 0");
            }
            g.map = flipwalk(spec.n, spec.steps, spec.seed, spec.keep_four_connected);
            break;
    }
    require_valid(g.map, MapKind::Triangulation);
    g.four_connected = g.map.vertex_count() >= 4 && classify_triangles(g.map).filled.size() == 1;
    return g;
}

}  // namespace tridecomp
