// capev: detection, coloring, verification, generation and oracle queries for
// clique blowups of triangle-free skeletons.
//
// Exit codes: 0 ok, 1 verification failed, 2 parse error, 3 hypothesis
// violated (skeleton has a triangle), 4 base bound exceeded.

#include "capev/blowup.hpp"
#include "capev/canonical.hpp"
#include "capev/coloring.hpp"
#include "capev/graph.hpp"
#include "capev/graph_io.hpp"
#include "capev/oracles.hpp"
#include "capev/structure.hpp"
#include "capev/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace capev;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitBaseBound = 4;

struct RunConfig {
    int p = 5;
    int q = 2;
    std::uint64_t seed = 1;
    int budget_n = 24;
    double budget_time = 0; // seconds; 0 = unlimited
    std::string format = "human";
    bool no_recognize = false;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(cfg.out);
        if (!f) throw ParseError("cannot open " + cfg.out + " for writing");
        f << text;
    }
}

bool looks_like_json(const std::string& path) {
    std::filesystem::path p(path);
    return p.extension() == ".json";
}

Graph load_graph(const std::string& path) {
    if (looks_like_json(path)) {
        json j = json::parse(slurp(path), nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid json in " + path);
        if (j.contains("skeleton"))
            return build_blowup(graph_from_json(j.at("skeleton").dump()),
                                j.at("multiplicity").get<std::vector<int>>())
                .graph;
        return graph_from_json(slurp(path));
    }
    return read_dimacs_file(path);
}

// Either an explicit BlowupMap json or a raw graph to be twin-contracted.
BlowupMap load_blowup(const std::string& path, bool no_recognize) {
    if (looks_like_json(path)) {
        json j = json::parse(slurp(path), nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid json in " + path);
        if (j.contains("skeleton")) return blowup_from_json(slurp(path));
        if (no_recognize)
            throw ParseError("--no-recognize requires an explicit blowup map");
        return recognize_blowup(graph_from_json(slurp(path)));
    }
    if (no_recognize) throw ParseError("--no-recognize requires an explicit blowup map");
    return recognize_blowup(read_dimacs_file(path));
}

json hole_json(const HoleWitness& h) { return h.vertices; }

json class_report_json(const ClassReport& r) {
    json w = json::object();
    if (r.triangle) w["triangle"] = *r.triangle;
    if (r.cap) w["cap"] = {{"hole", hole_json(r.cap->hole)}, {"apex", r.cap->apex}};
    if (r.even_hole) w["even_hole"] = hole_json(*r.even_hole);
    if (r.five_hole) w["five_hole"] = hole_json(*r.five_hole);
    return json{{"triangle_free", r.triangle_free},
                {"cap_free", r.cap_free},
                {"even_hole_free", r.even_hole_free},
                {"five_hole_free", r.five_hole_free},
                {"is_cube", r.is_cube},
                {"witnesses", std::move(w)}};
}

int cmd_detect(const RunConfig& cfg, const std::string& input) {
    ClassReport r = classify(load_graph(input));
    if (cfg.format == "json") {
        emit(cfg, class_report_json(r).dump(2));
    } else {
        std::ostringstream out;
        auto line = [&](const char* name, bool v) {
            out << name << ":\t" << (v ? "true" : "false") << "\n";
        };
        line("triangle_free", r.triangle_free);
        line("cap_free", r.cap_free);
        line("even_hole_free", r.even_hole_free);
        line("five_hole_free", r.five_hole_free);
        line("is_cube", r.is_cube);
        emit(cfg, out.str());
    }
    return kExitOk;
}

int cmd_color(const RunConfig& cfg, const std::string& input) {
    BlowupMap b = load_blowup(input, cfg.no_recognize);
    if (auto tri = find_triangle(b.skeleton)) {
        std::cerr << "hypothesis violated: skeleton has a triangle {" << (*tri)[0] << ","
                  << (*tri)[1] << "," << (*tri)[2] << "}\n";
        return kExitHypothesis;
    }
    Certificate cert = color_blowup(b, BoundParams(cfg.p, cfg.q));
    emit(cfg, certificate_to_json(cert));
    if (cert.base_bound_exceeded) {
        std::cerr << "base bound exceeded: skeleton lies outside the guaranteed class\n";
        return kExitBaseBound;
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& graph_path,
               const std::string& cert_path) {
    Graph g = load_graph(graph_path);
    Certificate cert = certificate_from_json(slurp(cert_path));
    VerificationReport r = check_certificate(g, cert, cfg.budget_n);
    if (cfg.format == "json") {
        json j{{"proper", r.proper},
               {"within_bound", r.within_bound},
               {"omega_confirmed", r.omega_confirmed},
               {"structural_omega", r.structural_omega},
               {"details", r.details}};
        emit(cfg, j.dump(2));
    } else {
        std::ostringstream out;
        out << "proper:\t" << (r.proper ? "true" : "false") << "\n"
            << "within_bound:\t" << (r.within_bound ? "true" : "false") << "\n"
            << "omega_confirmed:\t" << (r.omega_confirmed ? "true" : "false") << "\n";
        for (const auto& d : r.details) out << "# " << d << "\n";
        emit(cfg, out.str());
    }
    return r.all_ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_oracle(const RunConfig& cfg, const std::string& input) {
    Graph g = load_graph(input);
    OracleResult w = max_clique_size(g);
    OracleResult a = max_stable_set_size(g);
    OracleResult c = exact_chromatic(g);
    if (cfg.format == "json") {
        json j{{"n", g.vertex_count()},
               {"omega", w.value},
               {"alpha", a.value},
               {"chi", c.value},
               {"clique", w.witness},
               {"stable_set", a.witness},
               {"coloring", c.witness}};
        emit(cfg, j.dump(2));
    } else if (cfg.format == "tsv") {
        std::ostringstream out;
        out << "n\tomega\talpha\tchi\n"
            << g.vertex_count() << "\t" << w.value << "\t" << a.value << "\t" << c.value << "\n";
        emit(cfg, out.str());
    } else {
        std::ostringstream out;
        out << "omega:\t" << w.value << "\nalpha:\t" << a.value << "\nchi:\t" << c.value << "\n";
        emit(cfg, out.str());
    }
    return kExitOk;
}

int cmd_gen_cycle(int len, int k, const std::string& mult_csv, const std::string& stem) {
    std::vector<int> mult;
    if (!mult_csv.empty()) {
        std::istringstream ss(mult_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) mult.push_back(std::stoi(tok));
    } else if (len >= 5) {
        mult.assign(size_t(len), k);
    }
    auto r = cycle_blowup(len, mult);
    write_dimacs_file(stem + ".col", r.graph);
    std::ofstream bj(stem + ".blowup.json");
    bj << blowup_to_json(r.map);
    std::cout << stem << ".col\n" << stem << ".blowup.json\n";
    return kExitOk;
}

int cmd_gen_corpus(const RunConfig& cfg, int max_vertices, int max_steps,
                   const std::string& dir) {
    auto corpus = generate_skeleton_corpus(cfg.seed, max_vertices, max_steps);
    std::filesystem::create_directories(dir);
    std::ofstream cj(dir + "/corpus.json");
    cj << corpus_to_json(corpus);
    for (size_t i = 0; i < corpus.size(); ++i) {
        std::ostringstream name;
        name << dir << "/skeleton_" << i << ".col";
        write_dimacs_file(name.str(), corpus[i].graph);
    }
    std::cout << dir << "/corpus.json (" << corpus.size() << " graphs)\n";
    return kExitOk;
}

int cmd_tighten(const RunConfig& cfg, int q, int k_max) {
    TightnessTable t = tightness_table(q, k_max, cfg.budget_n, cfg.budget_time);
    if (cfg.format == "json")
        emit(cfg, tightness_to_json(t));
    else
        emit(cfg, tightness_to_tsv(t));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coloring engine for clique blowups of triangle-free skeletons"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--p", cfg.p, "bound numerator p (default 5)");
    app.add_option("--q", cfg.q, "bound parameter q (default 2), requires p > 2q");
    app.add_option("--seed", cfg.seed, "deterministic seed for generators");
    app.add_option("--budget-n", cfg.budget_n, "exact-solver vertex cap (default 24)");
    app.add_option("--budget-time", cfg.budget_time, "soft wall-clock cap in seconds");
    app.add_option("--format", cfg.format, "output format: json, tsv or human")
        ->check(CLI::IsMember({"json", "tsv", "human"}));
    app.add_flag("--no-recognize", cfg.no_recognize,
                 "require an explicit blowup map instead of twin contraction");
    app.add_option("--out", cfg.out, "write the result to a file instead of stdout");

    std::string input, cert_path, mult_csv, out_dir = "corpus";
    int len = 5, k = 1, q_arg = 2, k_max = 3, max_vertices = 14, max_steps = 1;
    std::string gen_kind;

    auto* detect = app.add_subcommand("detect", "classify a graph against the forbidden structures");
    detect->add_option("input", input, "graph file (.col or .json)")->required();

    auto* color = app.add_subcommand("color", "emit a bound certificate for a clique blowup");
    color->add_option("input", input, "graph or blowup-map file")->required();

    auto* verify = app.add_subcommand("verify", "independently check a certificate");
    verify->add_option("graph", input, "graph file")->required();
    verify->add_option("certificate", cert_path, "certificate json")->required();

    auto* oracle = app.add_subcommand("oracle", "exact omega, alpha and chi");
    oracle->add_option("input", input, "graph file")->required();

    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->add_option("kind", gen_kind, "cycle-blowup or corpus")
        ->required()
        ->check(CLI::IsMember({"cycle-blowup", "corpus"}));
    gen->add_option("--len", len, "cycle length (odd, >= 5)");
    gen->add_option("--k", k, "uniform multiplicity");
    gen->add_option("--mult", mult_csv, "comma-separated per-position multiplicities");
    gen->add_option("--stem", input, "output stem for cycle-blowup (default c<len>k<k>)");
    gen->add_option("--dir", out_dir, "output directory for corpus");
    gen->add_option("--max-vertices", max_vertices, "corpus vertex cap");
    gen->add_option("--max-steps", max_steps, "corpus ear additions per graph");

    auto* tighten = app.add_subcommand("tighten", "exact chi vs bound on odd-cycle blowups");
    tighten->add_option("q", q_arg, "q >= 2; the cycle has length 2q+1")->required();
    tighten->add_option("k_max", k_max, "largest uniform multiplicity")->required();

    // Global flags may follow the subcommand name.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        BoundParams check_params(cfg.p, cfg.q); // validates p > 2q early
        (void)check_params;
        if (detect->parsed()) return cmd_detect(cfg, input);
        if (color->parsed()) return cmd_color(cfg, input);
        if (verify->parsed()) return cmd_verify(cfg, input, cert_path);
        if (oracle->parsed()) return cmd_oracle(cfg, input);
        if (gen->parsed()) {
            if (gen_kind == "cycle-blowup") {
                std::string stem = input.empty()
                                       ? ("c" + std::to_string(len) + "k" + std::to_string(k))
                                       : input;
                return cmd_gen_cycle(len, k, mult_csv, stem);
            }
            return cmd_gen_corpus(cfg, max_vertices, max_steps, out_dir);
        }
        if (tighten->parsed()) return cmd_tighten(cfg, q_arg, k_max);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
