// One PASS/FAIL line per acceptance criterion.

#include "cli.hpp"

#include "tridecomp/assignment.hpp"
#include "tridecomp/decompose.hpp"
#include "tridecomp/generate.hpp"
#include "tridecomp/json_io.hpp"
#include "tridecomp/oracle.hpp"
#include "tridecomp/separation.hpp"
#include "tridecomp/tightness.hpp"
#include "tridecomp/whitney.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <fstream>
#include <sstream>

using namespace tridecomp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Tally {
  public:
    void expect(bool ok, const std::string& what) {
        ++checked_;
        if (!ok) {
            ++failed_;
            if (first_.empty()) {
                first_ = what;
            }
        }
    }
    void expect_clean(const std::vector<std::string>& report, const std::string& what) {
        expect(report.empty(), what + (report.empty() ? "" : ": " + report.front()));
    }
    [[nodiscard]] Outcome outcome(const std::string& summary) const {
        std::ostringstream s;
        s << summary << "; " << checked_ - failed_ << "/" << checked_ << " checks";
        if (failed_ > 0) {
            s << "; first failure: " << first_;
        }
        return {failed_ == 0, s.str()};
    }

  private:
    int checked_ = 0;
    int failed_ = 0;
    std::string first_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << s << " s";
    return o.str();
}

std::vector<int> t0_degrees(int n, const Decomposition& d) {
    std::vector<int> deg(n, 0);
    for (const auto& e : d.parts[0]) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

int max_degree(int n, const Decomposition& d) {
    const auto deg = t0_degrees(n, d);
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

// Every pipeline output seen, for the size law.
std::vector<std::pair<int, Decomposition>> g_outputs;

void record(const PlaneMap& g, const Decomposition& d) { g_outputs.emplace_back(g.vertex_count(), d); }

std::vector<PlaneMap> four_connected_corpus() {
    std::vector<PlaneMap> out;
    for (int c = 4; c <= 40; ++c) {
        out.push_back(doublewheel_map(c));
    }
    for (int i = 0; i < 50; ++i) {
        const int n = 10 + i;
        const auto gen = generate({.family = Family::FlipWalk, .n = n, .steps = 4 * n,
                                   .seed = static_cast<std::uint64_t>(1000 + i),
                                   .keep_four_connected = true});
        out.push_back(gen.map);
    }
    return out;
}

Outcome criterion_1() {
    Tally t;
    const auto corpus = four_connected_corpus();
    const auto start = std::chrono::steady_clock::now();
    for (const auto& g : corpus) {
        const std::string name = "n=" + std::to_string(g.vertex_count());
        t.expect(classify_triangles(g).filled.size() == 1, name + " is 4-connected");
        const auto d = four_connected(g);
        record(g, d);
        t.expect_clean(check_decomposition(g, d), name);
        t.expect(d.degree_bound == 2 && max_degree(g.vertex_count(), d) <= 2, name + " T0 degree");
        const auto deg = t0_degrees(g.vertex_count(), d);
        t.expect(std::count(deg.begin(), deg.end(), 1) == 2, name + " T0 has two leaves");
    }
    const double elapsed = seconds_since(start);
    t.expect(elapsed < 10.0, "runtime under 10 s");

    // The same route through the command line on a few inputs.
    for (const auto& g : {corpus.front(), corpus.back()}) {
        std::ostringstream out;
        std::ostringstream err;
        const auto path = std::string("/tmp/tridecomp_acceptance_4c.json");
        std::ofstream(path) << dump_json(to_json(g));
        const int code = cli::run({"decompose", "--mode", "4c", path}, out, err);
        t.expect(code == 0, "cli decompose --mode 4c exit code");
        if (code == 0) {
            t.expect_clean(check_decomposition(g, decomposition_from_json(Json::parse(out.str()))),
                           "cli output");
        }
    }
    return t.outcome(std::to_string(corpus.size()) + " four-connected inputs in " +
                     fmt_seconds(elapsed));
}

Outcome criterion_2() {
    Tally t;
    int instances = 0;
    int runs = 0;
    for (const auto& g : four_connected_corpus()) {
        const auto& o = g.outer();
        (void)inner_decomposition(g, {o[0], o[1], o[2]},
                                  [&](const WhitneyInstance& inst, int rule, const OrientedColoring& c) {
                                      ++instances;
                                      t.expect_clean(check_whitney_properties(inst.disk, c, inst.x,
                                                                              inst.y, inst.z),
                                                     "rule " + std::to_string(rule));
                                  });
        ++runs;
    }
    return t.outcome(std::to_string(runs) + " instrumented runs, " + std::to_string(instances) +
                     " colorings checked at every recursion level");
}

Outcome criterion_3() {
    Tally t;
    int count = 0;
    const auto start = std::chrono::steady_clock::now();
    for (int n = 4; n <= 50; ++n) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto gen = generate({.family = Family::PolygonHam, .n = n, .seed = seed});
            const auto d = hamiltonian(gen.map, *gen.ham_cycle);
            record(gen.map, d);
            const std::string name = "polygon_ham(" + std::to_string(n) + "," + std::to_string(seed) + ")";
            t.expect_clean(check_decomposition(gen.map, d), name);
            t.expect(max_degree(n, d) <= 3, name + " T0 degree");
            ++count;
        }
    }
    const double elapsed = seconds_since(start);
    t.expect(elapsed < 10.0, "runtime under 10 s");
    return t.outcome(std::to_string(count) + " Hamiltonian inputs in " + fmt_seconds(elapsed));
}

Outcome criterion_4() {
    Tally t;
    std::vector<std::pair<std::string, PlaneMap>> corpus;
    for (int tt = 0; tt <= 100; ++tt) {
        corpus.emplace_back("apollonian(" + std::to_string(tt) + ")",
                            generate({.family = Family::Apollonian, .t = tt,
                                      .seed = static_cast<std::uint64_t>(tt)})
                                .map);
    }
    corpus.emplace_back("G3(K4)", build_g3(k4_map()).g);
    corpus.emplace_back("G3(octahedron)", build_g3(octahedron_map()).g);
    corpus.emplace_back("G3(icosahedron)", build_g3(icosahedron_map()).g);
    for (const auto& [name, g] : corpus) {
        const auto d = general(g);
        record(g, d);
        t.expect_clean(check_decomposition(g, d), name);
        t.expect(max_degree(g.vertex_count(), d) <= 4, name + " T0 degree");
        // The pipeline's own steps, to expose the assignment for the degree law.
        const Edge e = find_free_edge(g);
        const int c = g.face_left_of(e.u, e.v)[2];
        const PlaneMap r = reroot(g, Triangle(e.u, e.v, c));
        const auto a = two_assignment(r, e.u);
        const auto dr = from_assignment(r, a, {e.u, c, e.v});
        t.expect(dr.parts == d.parts, name + " reproduces the pipeline");
        t.expect_clean(degree_law_violations(r, a, dr), name + " degree law");
    }
    return t.outcome(std::to_string(corpus.size()) + " general inputs");
}

Outcome criterion_5() {
    Tally t;
    for (const auto& [n, d] : g_outputs) {
        t.expect(d.parts[0].size() == static_cast<std::size_t>(n - 1) &&
                     d.parts[1].size() == static_cast<std::size_t>(n - 3) &&
                     d.parts[2].size() == static_cast<std::size_t>(n - 2),
                 d.pipeline + " on n=" + std::to_string(n));
    }
    return t.outcome(std::to_string(g_outputs.size()) + " pipeline outputs");
}

Outcome criterion_6() {
    Tally t;
    int hulls = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 6 + i % 35;
        const auto g = generate({.family = Family::FlipWalk, .n = n, .steps = 3 * n,
                                 .seed = static_cast<std::uint64_t>(2000 + i),
                                 .keep_four_connected = true})
                           .map;
        t.expect(classify_triangles(g).filled.size() == 1, "hull is 4-connected");
        for (int u : special_vertices(g).u) {
            const auto psi = middle_vertex_map(g, u);
            std::vector<int> hits(n, 0);
            for (const auto& [face, v] : psi) {
                ++hits[v];
            }
            for (int v = 0; v < n; ++v) {
                const int want = g.on_outer(v) ? 0 : v == u ? 3 : 2;
                t.expect(hits[v] == want, "n=" + std::to_string(n) + " vertex " + std::to_string(v) +
                                              " hit " + std::to_string(hits[v]) + " times");
            }
        }
        ++hulls;
    }
    return t.outcome(std::to_string(hulls) + " hulls, all three special vertices each");
}

Outcome criterion_7() {
    Tally t;
    std::ostringstream s;
    const auto ico = icosahedron_map();
    const int m = ico.edge_count();
    const int bound = 2 * (ico.vertex_count() - 1) + ico.vertex_count() / 2;
    t.expect(m == 30 && bound == 28 && counting_bound_21(ico), "counting bound 30 > 28");
    const auto v = brute_decide(ico, {.d = 1});
    t.expect(v.status != Status::Sat, "icosahedron (2,1) search never SAT");
    s << "icosahedron m=" << m << " > " << bound << ", search " << status_name(v.status);

    const auto gen = generate({.family = Family::PolygonHam, .n = 18, .seed = 1});
    const auto g2 = build_g2(gen.map, *gen.ham_cycle);
    t.expect(g2.pair.k == 9, "G2(n=18) k = 9");
    const auto v2 = prop51_verdict(g2.pair);
    t.expect(std::any_of(v2.begin(), v2.end(),
                         [](const Conclusion& c) {
                             return c.statement == "no (2,2)-decomposition" && c.upgraded;
                         }),
             "G2 verdict upgrades to no (2,2)-decomposition");
    s << "; G2(18) k=" << g2.pair.k;

    const auto g3 = build_g3(ico);
    const auto v3 = prop51_verdict(g3);
    t.expect(g3.k >= 21, "G3(icosahedron) k >= 21 (computed k = " + std::to_string(g3.k) + ")");
    t.expect(std::any_of(v3.begin(), v3.end(),
                         [](const Conclusion& c) { return c.statement == "no (2,3)-decomposition"; }),
             "G3 verdict no (2,3)-decomposition (strongest reached: " +
                 (v3.empty() ? std::string("none") : v3.back().statement) + ")");
    s << "; G3(icosahedron) k=" << g3.k << " of claimed " << g3.claimed_k.value_or(-1);
    return t.outcome(s.str());
}

Outcome criterion_8() {
    Tally t;
    std::vector<std::pair<std::string, Generated>> corpus;
    corpus.emplace_back("k4", generate({.family = Family::K4}));
    corpus.emplace_back("octahedron", generate({.family = Family::Octahedron}));
    for (int c = 4; c <= 7; ++c) {
        corpus.emplace_back("doublewheel(" + std::to_string(c) + ")",
                            generate({.family = Family::DoubleWheel, .c = c}));
    }
    for (int tt = 1; tt <= 5; ++tt) {
        corpus.emplace_back("apollonian(" + std::to_string(tt) + ")",
                            generate({.family = Family::Apollonian, .t = tt,
                                      .seed = static_cast<std::uint64_t>(tt)}));
    }
    for (int i = 0; i < 10; ++i) {
        const int n = 4 + i % 6;
        corpus.emplace_back("polygon_ham(" + std::to_string(n) + ")",
                            generate({.family = Family::PolygonHam, .n = n,
                                      .seed = static_cast<std::uint64_t>(i)}));
    }
    for (int i = 0; i < 9; ++i) {
        const int n = 6 + i % 4;
        corpus.emplace_back("flipwalk(" + std::to_string(n) + ")",
                            generate({.family = Family::FlipWalk, .n = n, .steps = 20,
                                      .seed = static_cast<std::uint64_t>(i)}));
    }
    int confirmed = 0;
    for (const auto& [name, gen] : corpus) {
        const auto& g = gen.map;
        t.expect(g.vertex_count() <= 9, name + " has at most 9 vertices");
        std::vector<Decomposition> outputs;
        if (classify_triangles(g).filled.size() == 1) {
            outputs.push_back(four_connected(g));
        }
        if (gen.ham_cycle) {
            outputs.push_back(hamiltonian(g, *gen.ham_cycle));
        }
        outputs.push_back(general(g));
        for (const auto& d : outputs) {
            record(g, d);
            const DecisionSpec spec{.d = d.degree_bound, .third = ThirdPart::Tree};
            t.expect_clean(check_decomposition(g, {d.parts[1], d.parts[2], d.parts[0]}, spec),
                           name + " " + d.pipeline + " output fits its class");
            const auto v = brute_decide(g, spec);
            t.expect(v.status == Status::Sat, name + " " + d.pipeline + " search SAT");
            if (v.status == Status::Sat) {
                t.expect_clean(check_decomposition(g, *v.witness, spec), name + " witness");
                ++confirmed;
            }
        }
    }
    return t.outcome(std::to_string(corpus.size()) + " triangulations, " + std::to_string(confirmed) +
                     " classes confirmed by search");
}

Outcome criterion_9() {
    Tally t;
    std::mt19937_64 rng(20261018);
    for (int sample = 0; sample < 1000; ++sample) {
        const int n = 3 + static_cast<int>(rng() % 20);
        const int k = 1 + static_cast<int>(rng() % 3);
        std::vector<std::vector<Edge>> parts(k);
        std::size_t total = 0;
        int trees = 0;
        for (auto& part : parts) {
            std::vector<int> order(n);
            for (int i = 0; i < n; ++i) {
                order[i] = i;
            }
            std::shuffle(order.begin(), order.end(), rng);
            int i = 0;
            while (i < n) {
                const int len = 1 + static_cast<int>(rng() % (n - i));
                for (int j = i; j + 1 < i + len; ++j) {
                    part.emplace_back(order[j], order[j + 1]);
                }
                if (len >= 3 && rng() % 2) {
                    part.emplace_back(order[i], order[i + len - 1]);
                } else {
                    ++trees;
                }
                i += len;
            }
            total += part.size();
        }
        const int counted = count_tree_components(n, parts);
        t.expect(counted == trees, "component count matches construction");
        t.expect(counted == k * n - static_cast<int>(total), "sample " + std::to_string(sample));
    }
    return t.outcome("1000 random partitions");
}

Outcome criterion_10() {
    Tally t;
    const std::vector<std::vector<std::string>> commands{
        {"gen", "--family", "apollonian:20:7"},
        {"gen", "--family", "flipwalk:30:200:4:4c"},
        {"gen", "--family", "polygon_ham:24:9"},
    };
    const std::vector<std::vector<std::string>> on_input{
        {"validate"},
        {"decompose", "--mode", "any"},
        {"assign", "--k", "2"},
        {"draw", "--format", "svg"},
        {"tight", "--g3"},
    };
    int compared = 0;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::ostringstream a;
        std::ostringstream b;
        std::ostringstream err;
        t.expect(cli::run(commands[i], a, err) == 0 && cli::run(commands[i], b, err) == 0,
                 "generation succeeds");
        t.expect(a.str() == b.str(), "gen output identical");
        ++compared;
        const std::string path = "/tmp/tridecomp_acceptance_det_" + std::to_string(i) + ".json";
        std::ofstream(path) << a.str();
        auto extra = on_input;
        if (i == 1) {
            extra.push_back({"decompose", "--mode", "4c"});
            extra.push_back({"assign", "--k", "0"});
        }
        if (i == 2) {
            extra.push_back({"decompose", "--mode", "ham", "--cycle", path});
            extra.push_back({"tight", "--g2", "--cycle", path});
        }
        for (auto cmd : extra) {
            cmd.push_back(path);
            std::ostringstream x;
            std::ostringstream y;
            const int cx = cli::run(cmd, x, err);
            const int cy = cli::run(cmd, y, err);
            t.expect(cx == 0 && cy == 0, cmd.front() + " succeeds");
            t.expect(x.str() == y.str(), cmd.front() + " output identical");
            ++compared;
        }
    }
    std::ostringstream x;
    std::ostringstream y;
    std::ostringstream err;
    const std::string path = "/tmp/tridecomp_acceptance_det_0.json";
    const std::vector<std::string> brute{"brute", "--d", "3", "--third", "tree", "--budget", "200000",
                                         "/tmp/tridecomp_acceptance_det_small.json"};
    std::ofstream(brute.back()) << dump_json(to_json(octahedron_map()));
    t.expect(cli::run(brute, x, err) == cli::run(brute, y, err), "brute exit code stable");
    t.expect(x.str() == y.str(), "brute output identical");
    ++compared;
    return t.outcome(std::to_string(compared) + " command pairs compared byte for byte");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria report"};
    std::vector<int> expect_fail;
    app.add_option("--expect-fail", expect_fail,
                   "Criteria known to fail; exit 0 iff exactly these fail");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"four-connected inputs give a Hamiltonian path and two trees", criterion_1},
        {"Whitney coloring properties at every recursion level", criterion_2},
        {"Hamiltonian inputs give max degree 3", criterion_3},
        {"general inputs give max degree 4 and the exact degree law", criterion_4},
        {"part sizes are (n-1, n-3, n-2)", criterion_5},
        {"middle vertex map preimage sizes", criterion_6},
        {"tightness constructions", criterion_7},
        {"exhaustive search agrees with the pipelines", criterion_8},
        {"tree components count k*n - |E|", criterion_9},
        {"byte-identical output on repeated runs", criterion_10},
    };
    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) {
            failed.insert(id);
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << criteria[i].first << " ("
                  << o.detail << ")\n";
    }
    const std::set<int> expected(expect_fail.begin(), expect_fail.end());
    std::cout << failed.size() << " of " << criteria.size() << " criteria failed\n";
    if (failed != expected) {
        std::cout << "failing set differs from --expect-fail\n";
        return 1;
    }
    return 0;
}
