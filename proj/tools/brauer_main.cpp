// Command-line surface for the Brauer graph library: validation, algebra
// presentations, orbit graphs, voltage coverings, weight-function
// classification, the normalization tower, and randomized corpora.
//
// Exit codes: 0 success / witness found; 1 validation failure or negative
// result (diagnostics printed); 2 usage or input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauer/covering.hpp"
#include "brauer/dot.hpp"
#include "brauer/json_io.hpp"
#include "brauer/presentation.hpp"
#include "brauer/tower.hpp"

#include "brauer/random_gen.hpp"

using namespace brauer;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
    }
}

void emit_json(const json& j, const std::string& out_path) {
    emit(j.dump(2), out_path);
}

struct CheckReport {
    bool all_passed = true;
    void line(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
        all_passed = all_passed && ok;
    }
};

// The full theorem chain on one (graph, weighting) input: build the cover,
// take its orbit back, and compare both the graphs and the presentations.
bool run_roundtrip(const RibbonBrauerGraph& g, const BrauerWeighting& W) {
    CheckReport report;
    try {
        RoundtripWitness rt = roundtrip_orbit(g, W);
        report.line("cover-construction", true,
                    std::to_string(rt.covering.cover.num_edges()) + " edges, " +
                        std::to_string(rt.covering.cover.num_vertices()) + " vertices");
        report.line("orbit-of-cover-isomorphic-to-base", true);
        report.line("orbit-presentation-isomorphic-to-base-algebra", true);

        Presentation direct = build_presentation(rt.covering.cover);
        Presentation lifted = covering_presentation(g, W);
        bool w_star = presentation_iso(direct, lifted).has_value();
        report.line("covering-quiver-presentation-matches-cover-algebra", w_star);

        auto [orbit_data, assoc] = associated_weighting(rt.covering.cover, rt.covering.action);
        CoveringOutput rebuilt = covering_graph(orbit_data.orbit, assoc);
        bool rebuilt_iso =
            brauer_iso(rebuilt.cover, rt.covering.cover, g.quantized).has_value();
        report.line("reconstruction-from-orbit-and-associated-weighting", rebuilt_iso);
    } catch (const std::exception& e) {
        report.line("roundtrip", false, e.what());
    }
    return report.all_passed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brauer graphs as combinatorial maps: presentations, actions, coverings"};
    app.require_subcommand(1);

    std::string graph_path, second_path, out_path;
    bool as_dot = false, as_json = false, quantized_iso = false;

    auto* validate_cmd = app.add_subcommand("validate", "check a graph file");
    validate_cmd->add_option("graph", graph_path)->required();

    auto* present_cmd = app.add_subcommand("present", "quiver and relations of the algebra");
    present_cmd->add_option("graph", graph_path)->required();
    present_cmd->add_flag("--json", as_json, "emit JSON instead of text");
    present_cmd->add_option("-o,--output", out_path);

    auto* orbit_cmd = app.add_subcommand("orbit", "orbit graph of a free action");
    orbit_cmd->add_option("graph", graph_path)->required();
    orbit_cmd->add_option("action", second_path)->required();
    orbit_cmd->add_flag("--dot", as_dot);
    orbit_cmd->add_option("-o,--output", out_path);

    auto* cover_cmd = app.add_subcommand("cover", "covering graph of a Brauer weighting");
    cover_cmd->add_option("graph", graph_path)->required();
    cover_cmd->add_option("weighting", second_path)->required();
    cover_cmd->add_flag("--dot", as_dot);
    cover_cmd->add_option("-o,--output", out_path);

    auto* assoc_cmd = app.add_subcommand("assoc-weight",
                                         "orbit graph plus the weighting associated to an action");
    assoc_cmd->add_option("graph", graph_path)->required();
    assoc_cmd->add_option("action", second_path)->required();
    assoc_cmd->add_option("-o,--output", out_path);

    auto* classify_cmd = app.add_subcommand(
        "classify", "classify a weight function on the quiver of the algebra");
    classify_cmd->add_option("graph", graph_path)->required();
    classify_cmd->add_option("weighting", second_path)->required();

    long long max_edges = 100000;
    int loop_p = 2;
    bool skip_roundtrip = false;
    auto* tower_cmd = app.add_subcommand("tower", "multiplicity/loop/multi-edge removal tower");
    tower_cmd->add_option("graph", graph_path)->required();
    tower_cmd->add_option("--max-edges", max_edges, "abort if a stage would exceed this");
    tower_cmd->add_option("--loop-p", loop_p, "first prime for the loop stage");
    tower_cmd->add_flag("--no-roundtrip", skip_roundtrip, "skip per-stage round-trip checks");
    tower_cmd->add_option("-o,--output", out_path);

    auto* iso_cmd = app.add_subcommand("iso", "search for a Brauer graph isomorphism");
    iso_cmd->add_option("first", graph_path)->required();
    iso_cmd->add_option("second", second_path)->required();
    iso_cmd->add_flag("--quantized", quantized_iso);

    std::string corpus_dir;
    uint64_t seed = 1;
    auto* roundtrip_cmd =
        app.add_subcommand("roundtrip", "run the covering/orbit theorem chain on an input");
    roundtrip_cmd->add_option("graph", graph_path);
    roundtrip_cmd->add_option("weighting", second_path);
    roundtrip_cmd->add_option("--corpus", corpus_dir, "directory of graph JSON files");
    roundtrip_cmd->add_option("--seed", seed, "seed for corpus weightings");

    auto* appendix_cmd = app.add_subcommand(
        "appendix-cover", "covering quiver of an arbitrary weight-homogeneous presentation");
    appendix_cmd->add_option("presentation", graph_path)->required();
    appendix_cmd->add_option("weights", second_path)->required();
    appendix_cmd->add_option("-o,--output", out_path);

    int count = 20;
    int gen_max_edges = 6, gen_max_mult = 4;
    bool gen_quantized = false;
    auto* gen_cmd = app.add_subcommand("gen-corpus", "emit random valid graphs");
    gen_cmd->add_option("dir", corpus_dir)->required();
    gen_cmd->add_option("--count", count);
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--max-edges", gen_max_edges);
    gen_cmd->add_option("--max-mult", gen_max_mult);
    gen_cmd->add_flag("--quantized", gen_quantized);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate_cmd->parsed()) {
            json j = load_json_file(graph_path);
            try {
                RibbonBrauerGraph g = graph_from_json(j);
                std::cout << "ok: " << g.num_vertices() << " vertices, " << g.num_edges()
                          << " edges\n";
                return 0;
            } catch (const std::invalid_argument& e) {
                std::cout << e.what() << "\n";
                return 1;
            }
        }
        if (present_cmd->parsed()) {
            RibbonBrauerGraph g = graph_from_json(load_json_file(graph_path));
            Presentation pres = build_presentation(g);
            if (as_json) emit_json(presentation_to_json(pres), out_path);
            else emit(render_presentation(pres), out_path);
            return 0;
        }
        if (orbit_cmd->parsed()) {
            RibbonBrauerGraph g = graph_from_json(load_json_file(graph_path));
            FreeBrauerAction act = action_from_json(g, load_json_file(second_path));
            auto issues = validate_action(g, act);
            if (!issues.empty()) {
                for (const auto& s : issues) std::cout << s << "\n";
                return 1;
            }
            OrbitData od = orbit_graph(g, act);
            if (as_dot) emit(to_dot(od.orbit), out_path);
            else emit_json(graph_to_json(od.orbit), out_path);
            return 0;
        }
        if (cover_cmd->parsed()) {
            RibbonBrauerGraph g = graph_from_json(load_json_file(graph_path));
            BrauerWeighting W = weighting_from_json(g, load_json_file(second_path));
            auto issues = validate_weighting(g, W);
            if (!issues.empty()) {
                for (const auto& s : issues) std::cout << s << "\n";
                return 1;
            }
            CoveringOutput cov = covering_graph(g, W);
            if (as_dot) emit(to_dot(cov.cover), out_path);
            else emit_json(graph_to_json(cov.cover), out_path);
            return 0;
        }
        if (assoc_cmd->parsed()) {
            RibbonBrauerGraph g = graph_from_json(load_json_file(graph_path));
            FreeBrauerAction act = action_from_json(g, load_json_file(second_path));
            auto issues = validate_action(g, act);
            if (!issues.empty()) {
                for (const auto& s : issues) std::cout << s << "\n";
                return 1;
            }
            auto [orbit_data, W] = associated_weighting(g, act);
            json out;
            out["format"] = 1;
            out["orbit"] = graph_to_json(orbit_data.orbit);
            out["weighting"] = weighting_to_json(orbit_data.orbit, W);
            emit_json(out, out_path);
            return 0;
        }
        if (classify_cmd->parsed()) {
            RibbonBrauerGraph g = graph_from_json(load_json_file(graph_path));
            Presentation pres = build_presentation(g);
            json wj = load_json_file(second_path);
            AbelianGroup group = group_from_json(wj.at("group"));
            // dart-keyed weights; arrows pick up the weight of their dart
            std::vector<GroupElement> dart_w(g.num_darts(), group.identity());
            for (const auto& [dart, value] : wj.at("W").items()) {
                dart_w[g.dart_by_name(dart)] = element_from_json(value);
            }
            std::vector<GroupElement> arrow_w;
            for (const Arrow& a : pres.quiver.arrows) {
                arrow_w.push_back(a.dart >= 0 ? dart_w[a.dart] : group.identity());
            }
            ClassifyResult res = classify_weight_function(pres, group, arrow_w);
            switch (res.verdict) {
                case WeightClass::Brauer: {
                    json out;
                    out["verdict"] = "brauer";
                    out["weighting"] = weighting_to_json(g, *res.recovered);
                    emit_json(out, "");
                    return 0;
                }
                case WeightClass::NotBrauer:
                    std::cout << "not a Brauer covering: " << res.detail << "\n";
                    return 1;
                case WeightClass::NotHomogeneous:
                    std::cout << "ideal not homogeneous: " << res.detail << "\n";
                    return 1;
            }
        }
        if (tower_cmd->parsed()) {
            RibbonBrauerGraph g = graph_from_json(load_json_file(graph_path));
            TowerOptions opts;
            opts.max_edges = max_edges;
            opts.loop_p = loop_p;
            Tower tower = build_tower(g, opts);
            json report = tower_to_json(tower);
            bool ok = true;
            if (!skip_roundtrip) {
                const RibbonBrauerGraph* prev = &tower.initial;
                for (size_t i = 0; i < tower.stages.size(); ++i) {
                    bool stage_ok = true;
                    try {
                        roundtrip_orbit(*prev, tower.stages[i].weighting);
                    } catch (const std::exception&) {
                        stage_ok = false;
                    }
                    report["stages"][i]["checks"]["roundtrip"] = stage_ok;
                    ok = ok && stage_ok;
                    prev = &tower.stages[i].output.cover;
                }
            }
            emit_json(report, out_path);
            return ok ? 0 : 1;
        }
        if (iso_cmd->parsed()) {
            RibbonBrauerGraph a = graph_from_json(load_json_file(graph_path));
            RibbonBrauerGraph b = graph_from_json(load_json_file(second_path));
            auto witness = brauer_iso(a, b, quantized_iso);
            if (!witness) {
                std::cout << "no isomorphism\n";
                return 1;
            }
            json out = json::object();
            for (DartId d = 0; d < a.num_darts(); ++d)
                out[a.dart_name(d)] = b.dart_name((*witness)[d]);
            emit_json(json{{"witness", out}}, "");
            return 0;
        }
        if (roundtrip_cmd->parsed()) {
            if (!corpus_dir.empty()) {
                bool all = true;
                std::vector<std::filesystem::path> files;
                for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
                    if (entry.path().extension() == ".json") files.push_back(entry.path());
                }
                std::sort(files.begin(), files.end());
                Rng rng(seed);
                for (const auto& file : files) {
                    RibbonBrauerGraph g = graph_from_json(load_json_file(file.string()));
                    auto W = random_brauer_weighting(rng, g, AbelianGroup({2}), 64, true);
                    std::cout << "== " << file.filename().string() << "\n";
                    if (!W) {
                        std::cout << "SKIP no connected Z_2 weighting found\n";
                        continue;
                    }
                    all = run_roundtrip(g, *W) && all;
                }
                return all ? 0 : 1;
            }
            if (graph_path.empty() || second_path.empty()) {
                std::cerr << "roundtrip needs a graph and a weighting, or --corpus\n";
                return 2;
            }
            RibbonBrauerGraph g = graph_from_json(load_json_file(graph_path));
            BrauerWeighting W = weighting_from_json(g, load_json_file(second_path));
            auto issues = validate_weighting(g, W);
            if (!issues.empty()) {
                for (const auto& s : issues) std::cout << s << "\n";
                return 1;
            }
            return run_roundtrip(g, W) ? 0 : 1;
        }
        if (appendix_cmd->parsed()) {
            Presentation pres = presentation_from_json(load_json_file(graph_path));
            auto [group, weights] = arrow_weights_from_json(pres, load_json_file(second_path));
            QuiverCoverResult cover = covering_quiver(pres, group, weights);
            emit_json(presentation_to_json(cover.cover), out_path);
            return 0;
        }
        if (gen_cmd->parsed()) {
            std::filesystem::create_directories(corpus_dir);
            Rng rng(seed);
            GraphGenOptions opts;
            opts.max_edges = gen_max_edges;
            opts.max_multiplicity = gen_max_mult;
            opts.quantized = gen_quantized;
            for (int i = 0; i < count; ++i) {
                RibbonBrauerGraph g = random_graph(rng, opts);
                std::string name = corpus_dir + "/graph_" + std::to_string(i) + ".json";
                save_json_file(name, graph_to_json(g));
            }
            std::cout << "wrote " << count << " graphs to " << corpus_dir << "\n";
            return 0;
        }
    } catch (const json::parse_error& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
