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
#include <iostream>
#include <map>
#include <optional>

namespace tridecomp::cli {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input = "-";
    std::string mode;
    std::string cycle;
    int x = -1;
    int y = -1;
    int z = -1;
    int k = -1;
    std::string variant;
    std::string claims;
    int d = -1;
    std::string third = "any";
    std::string special;
    std::uint64_t budget = kDefaultBudget;
    bool g2 = false;
    bool g3 = false;
    bool check = false;
    std::string family;
    std::vector<std::string> params;
    std::optional<std::uint64_t> seed;
    std::string format;
    std::string decomposition;
};

Json decomposition_report(const PlaneMap& map, const Decomposition& d) {
    Json j = to_json(d);
    j["n"] = map.vertex_count();
    return j;
}

int cmd_validate(const Options& o, std::ostream& out) {
    const PlaneMap map = map_from_json(read_json(o.input), std::nullopt);
    const auto report = validate(map, MapKind::Triangulation);
    Json j{{"valid", report.empty()}, {"violations", report}};
    if (report.empty()) {
        const auto classes = classify_triangles(map);
        const auto separating = std::count_if(classes.all.begin(), classes.all.end(), [](const auto& r) {
            return r.kind == TriangleKind::Separating;
        });
        j["n"] = map.vertex_count();
        j["m"] = map.edge_count();
        j["separating_triangles"] = separating;
        j["four_connected"] = separating == 0;
    }
    out << dump_json(j);
    return report.empty() ? 0 : kExitData;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    if (o.mode == "ham" && o.cycle.empty()) {
        throw UsageError("--mode ham requires --cycle");
    }
    const PlaneMap map = map_from_json(read_json(o.input));
    Decomposition d;
    if (o.mode == "4c") {
        d = four_connected(map);
    } else if (o.mode == "ham") {
        d = hamiltonian(map, cycle_from_json(read_json(o.cycle)));
    } else {
        d = general(map);
    }
    if (const auto report = check_decomposition(map, d); !report.empty()) {
        throw InternalError("pipeline output fails the oracle: " + report.front());
    }
    out << dump_json(decomposition_report(map, d));
    return 0;
}

int cmd_whitney(const Options& o, std::ostream& out) {
    const PlaneMap disk = map_from_json(read_json(o.input), MapKind::InnerDisk);
    out << dump_json(to_json(whitney_color({disk, o.x, o.y, o.z})));
    return 0;
}

int cmd_assign(const Options& o, std::ostream& out) {
    const PlaneMap map = map_from_json(read_json(o.input));
    Assignment a;
    if (o.k == 0) {
        a = zero_assignment(map, map.outer()[0]);
    } else if (o.k == 2) {
        a = two_assignment(map, map.outer()[0]);
    } else {
        if (o.variant.empty() || o.cycle.empty()) {
            throw UsageError("--k 1 requires --variant and --cycle");
        }
        const auto path = cycle_from_json(read_json(o.cycle));
        if (path.size() < 2) {
            throw InputError("path needs two ends");
        }
        const int v0 = path.front();
        const int v2 = path.back();
        const auto& outer = map.outer();
        if (!map.on_outer(v0) || !map.on_outer(v2) || v0 == v2) {
            throw InputError("path must run between two outer vertices");
        }
        const int v1 = outer[0] != v0 && outer[0] != v2 ? outer[0]
                       : outer[1] != v0 && outer[1] != v2 ? outer[1]
                                                           : outer[2];
        const OneVariant variant = o.variant == "i"    ? OneVariant::I
                                   : o.variant == "ii" ? OneVariant::II
                                                       : OneVariant::III;
        a = one_assignment(map, variant, {v0, v1, v2}, path);
        if (const auto r = validate_one_variant(a, variant, {v0, v1, v2}); !r.empty()) {
            throw InternalError("1-assignment variant check: " + r.front());
        }
    }
    if (const auto report = validate_assignment(map, a); !report.empty()) {
        throw InternalError("assignment fails validation: " + report.front());
    }
    out << dump_json(to_json(a));
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const PlaneMap map = map_from_json(read_json(o.input));
    const Json claims = read_json(o.claims);
    std::vector<std::string> report;
    if (claims.is_object() && claims.contains("T0")) {
        report = check_decomposition(map, decomposition_from_json(claims));
    } else if (claims.is_object() && claims.contains("phi")) {
        report = validate_assignment(map, assignment_from_json(claims));
    } else if (claims.is_object() && claims.contains("cycle")) {
        report = ham_cycle_violations(map, cycle_from_json(claims));
    } else {
        throw InputError("claims must be a decomposition, an assignment or a cycle");
    }
    out << dump_json({{"clean", report.empty()}, {"violations", report}});
    return report.empty() ? 0 : 1;
}

int cmd_brute(const Options& o, std::ostream& out) {
    const PlaneMap map = map_from_json(read_json(o.input));
    static const std::map<std::string, ThirdPart> thirds{{"any", ThirdPart::Arbitrary},
                                                         {"forest", ThirdPart::Forest},
                                                         {"connected", ThirdPart::Connected},
                                                         {"tree", ThirdPart::Tree}};
    DecisionSpec spec;
    spec.d = o.d;
    spec.third = thirds.at(o.third);
    if (!o.special.empty()) {
        const Json s = read_json(o.special);
        const auto verts = (s.is_object() ? s.at("Gprime_vertices") : s).get<std::vector<int>>();
        spec.forest_regions = special_regions(subtriangulation_pair(map, verts));
    }
    const Verdict v = brute_decide(map, spec, o.budget);
    out << dump_json(to_json(v));
    return v.status == Status::Sat ? 0 : v.status == Status::Unsat ? 1 : 2;
}

int cmd_tight(const Options& o, std::ostream& out) {
    if (int(o.g2) + int(o.g3) + int(o.check) != 1) {
        throw UsageError("exactly one of --g2, --g3, --check");
    }
    Json j;
    SubtriangulationPair pair;
    if (o.check) {
        pair = pair_from_json(read_json(o.input));
        j = to_json(pair);
    } else {
        const PlaneMap gprime = map_from_json(read_json(o.input));
        if (o.g3) {
            pair = build_g3(gprime);
            j = to_json(pair);
        } else {
            HamCycle cycle;
            if (!o.cycle.empty()) {
                cycle = cycle_from_json(read_json(o.cycle));
            } else {
                const auto h = find_ham_cycle(gprime);
                if (h.status != Status::Sat) {
                    throw InputError("no Hamiltonian cycle found; pass --cycle");
                }
                cycle = *h.cycle;
            }
            auto g2 = build_g2(gprime, cycle);
            pair = g2.pair;
            j = to_json(pair);
            j["cycle"] = g2.cycle;
        }
    }
    j["special_forced"] = special_forced(pair);
    j["verdict"] = to_json(prop51_verdict(pair));
    out << dump_json(j);
    return 0;
}

int cmd_gen(const Options& o, std::ostream& out) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(o.family);
    while (std::getline(in, item, ':')) {
        parts.push_back(item);
    }
    if (parts.empty()) {
        throw UsageError("--family is empty");
    }
    parts.insert(parts.end(), o.params.begin(), o.params.end());
    static const std::map<std::string, std::size_t> seed_slot{
        {"apollonian", 2}, {"polygon_ham", 2}, {"flipwalk", 3}};
    const auto slot = seed_slot.find(parts[0]);
    bool override_seed = false;
    if (o.seed && slot != seed_slot.end()) {
        if (parts.size() == slot->second) {
            parts.push_back(std::to_string(*o.seed));
        } else {
            override_seed = true;
        }
    }
    std::string text = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        text += ":" + parts[i];
    }
    FamilySpec spec = parse_family(text);
    if (override_seed) {
        spec.seed = *o.seed;
    }
    const Generated g = generate(spec);
    Json j = to_json(g.map);
    if (g.ham_cycle) {
        j["cycle"] = *g.ham_cycle;
    }
    j["four_connected"] = g.four_connected;
    out << dump_json(j);
    return 0;
}

int cmd_draw(const Options& o, std::ostream& out) {
    const PlaneMap map = map_from_json(read_json(o.input));
    const auto& outer = map.outer();
    const Drawing drawing = fpp_draw(map, Edge(outer[0], outer[1]));
    std::map<Edge, std::string> color;
    for (const auto& e : map.edges()) {
        color[e] = "gray";
    }
    if (!o.decomposition.empty()) {
        const Decomposition d = decomposition_from_json(read_json(o.decomposition));
        const char* names[] = {"black", "blue", "red"};
        for (int p = 0; p < 3; ++p) {
            for (const auto& e : d.parts[p]) {
                if (!color.count(e)) {
                    throw InputError("decomposition edge is not in the map");
                }
                color[e] = names[p];
            }
        }
    }
    if (o.format == "dot") {
        out << "graph G {\n  node [shape=circle, width=0.3, fixedsize=true];\n";
        for (int v = 0; v < map.vertex_count(); ++v) {
            out << "  " << v << " [pos=\"" << drawing.coords[v][0] << ',' << drawing.coords[v][1]
                << "!\"];\n";
        }
        for (const auto& [e, c] : color) {
            out << "  " << e.u << " -- " << e.v << " [color=" << c << "];\n";
        }
        out << "}\n";
        return 0;
    }
    const int scale = 40;
    const int margin = 20;
    std::int64_t max_x = 0;
    std::int64_t max_y = 0;
    for (const auto& p : drawing.coords) {
        max_x = std::max(max_x, p[0]);
        max_y = std::max(max_y, p[1]);
    }
    auto px = [&](int v) { return margin + drawing.coords[v][0] * scale; };
    auto py = [&](int v) { return margin + (max_y - drawing.coords[v][1]) * scale; };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * margin + max_x * scale
        << "\" height=\"" << 2 * margin + max_y * scale << "\">\n";
    for (const auto& [e, c] : color) {
        out << "  <line x1=\"" << px(e.u) << "\" y1=\"" << py(e.u) << "\" x2=\"" << px(e.v)
            << "\" y2=\"" << py(e.v) << "\" stroke=\"" << c << "\" stroke-width=\"2\"/>\n";
    }
    for (int v = 0; v < map.vertex_count(); ++v) {
        out << "  <circle cx=\"" << px(v) << "\" cy=\"" << py(v)
            << "\" r=\"6\" fill=\"white\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << px(v) + 8 << "\" y=\"" << py(v) - 8
            << "\" font-size=\"10\">" << v << "</text>\n";
    }
    out << "</svg>\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decompose planar triangulations into two trees and a bounded-degree tree", "tridecomp"};
    app.require_subcommand(1);
    Options o;

    auto* validate_cmd = app.add_subcommand("validate", "Check a triangulation file");
    validate_cmd->add_option("input", o.input, "Triangulation JSON, - for stdin");

    auto* decompose_cmd = app.add_subcommand("decompose", "Run a decomposition pipeline");
    decompose_cmd->add_option("--mode", o.mode, "4c | ham | any")
        ->required()
        ->check(CLI::IsMember({"4c", "ham", "any"}));
    decompose_cmd->add_option("--cycle", o.cycle, "Hamiltonian cycle JSON (mode ham)");
    decompose_cmd->add_option("input", o.input, "Triangulation JSON, - for stdin");

    auto* whitney_cmd = app.add_subcommand("whitney", "Color a Whitney graph");
    whitney_cmd->add_option("--x", o.x)->required();
    whitney_cmd->add_option("--y", o.y)->required();
    whitney_cmd->add_option("--z", o.z)->required();
    whitney_cmd->add_option("input", o.input, "Disk JSON, - for stdin");

    auto* assign_cmd = app.add_subcommand("assign", "Compute a k-assignment");
    assign_cmd->add_option("--k", o.k)->required()->check(CLI::Range(0, 2));
    assign_cmd->add_option("--variant", o.variant, "i | ii | iii (k = 1)")
        ->check(CLI::IsMember({"i", "ii", "iii"}));
    assign_cmd->add_option("--cycle", o.cycle, "Path JSON from v0 to v2 (k = 1)");
    assign_cmd->add_option("input", o.input, "Triangulation JSON, - for stdin");

    auto* verify_cmd = app.add_subcommand("verify", "Check claims against a triangulation");
    verify_cmd->add_option("--claims", o.claims, "Decomposition, assignment or cycle JSON")
        ->required();
    verify_cmd->add_option("input", o.input, "Triangulation JSON, - for stdin");

    auto* brute_cmd = app.add_subcommand("brute", "Decide decomposability by exhaustive search");
    brute_cmd->add_option("--d", o.d, "Degree bound of the third part")->required()->check(
        CLI::NonNegativeNumber);
    brute_cmd->add_option("--third", o.third, "any | forest | connected | tree")
        ->check(CLI::IsMember({"any", "forest", "connected", "tree"}));
    brute_cmd->add_option("--special", o.special, "Pair JSON or vertex list of G'");
    brute_cmd->add_option("--budget", o.budget, "Node budget");
    brute_cmd->add_option("input", o.input, "Triangulation JSON, - for stdin");

    auto* tight_cmd = app.add_subcommand("tight", "Tightness constructions and verdicts");
    tight_cmd->add_flag("--g2", o.g2, "Build G2 from G'");
    tight_cmd->add_flag("--g3", o.g3, "Build G3 from G'");
    tight_cmd->add_flag("--check", o.check, "Evaluate a pair JSON");
    tight_cmd->add_option("--cycle", o.cycle, "Hamiltonian cycle of G' (--g2)");
    tight_cmd->add_option("input", o.input, "Triangulation or pair JSON, - for stdin");

    auto* gen_cmd = app.add_subcommand("gen", "Generate a triangulation");
    gen_cmd->add_option("--family", o.family, "Family name, optionally with :params")->required();
    gen_cmd->add_option("--param", o.params, "Family parameters in order");
    gen_cmd->add_option("--seed", o.seed, "Seed for randomized families");

    auto* draw_cmd = app.add_subcommand("draw", "Draw a triangulation");
    draw_cmd->add_option("--format", o.format, "dot | svg")
        ->required()
        ->check(CLI::IsMember({"dot", "svg"}));
    draw_cmd->add_option("--decomposition", o.decomposition, "Decomposition JSON to color");
    draw_cmd->add_option("input", o.input, "Triangulation JSON, - for stdin");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    const std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers{
        {validate_cmd, cmd_validate}, {decompose_cmd, cmd_decompose}, {whitney_cmd, cmd_whitney},
        {assign_cmd, cmd_assign},     {verify_cmd, cmd_verify},       {brute_cmd, cmd_brute},
        {tight_cmd, cmd_tight},       {gen_cmd, cmd_gen},             {draw_cmd, cmd_draw}};
    CLI::App* chosen = app.get_subcommands().front();
    try {
        return handlers.at(chosen)(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitData;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\nreproducer: tridecomp";
        for (const auto& a : args) {
            err << ' ' << a;
        }
        err << "\n";
        return kExitInternal;
    }
}

}  // namespace tridecomp::cli
