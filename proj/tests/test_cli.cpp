// End-to-end tests driving the capev binary through its documented surface:
// exit codes, stable json/tsv formats, and the color -> verify pipeline.

#include "capev/blowup.hpp"
#include "capev/graph.hpp"
#include "capev/graph_io.hpp"

#include "support/brute.hpp"

#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace capev;
using nlohmann::json;

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

std::filesystem::path work_dir() {
    static std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "capev_cli_tests";
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

CmdResult run(const std::string& args) {
    std::string cmd = "cd " + work_dir().string() + " && " + CAPEV_CLI_PATH + " " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

void write_file(const std::string& name, const std::string& text) {
    std::ofstream f(work_dir() / name);
    f << text;
}

std::string slurp(const std::string& name) {
    std::ifstream f(work_dir() / name);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("cli detect") {
    write_dimacs_file((work_dir() / "c5.col").string(), cycle_graph(5));
    write_dimacs_file((work_dir() / "c4.col").string(), cycle_graph(4));

    SUBCASE("C5 flags") {
        CmdResult r = run("detect c5.col --format json");
        CHECK(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j.at("cap_free") == true);
        CHECK(j.at("even_hole_free") == true);
        CHECK(j.at("five_hole_free") == false);
        CHECK(j.at("witnesses").contains("five_hole"));
    }
    SUBCASE("C4 carries an even-hole witness in json mode") {
        CmdResult r = run("detect c4.col --format json");
        CHECK(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j.at("even_hole_free") == false);
        CHECK(j.at("witnesses").at("even_hole").size() == 4);
    }
    SUBCASE("malformed file exits 2") {
        write_file("bad.col", "p edge nonsense\n");
        CHECK(run("detect bad.col").code == 2);
        CHECK(run("detect missing.col").code == 2);
    }
}

TEST_CASE("cli gen, oracle, tighten") {
    SUBCASE("cycle blowup files and the oracle on them") {
        CmdResult g = run("gen cycle-blowup --len 7 --k 3 --stem c7k3");
        CHECK(g.code == 0);
        CHECK(std::filesystem::exists(work_dir() / "c7k3.col"));
        CHECK(std::filesystem::exists(work_dir() / "c7k3.blowup.json"));

        CmdResult o = run("oracle c7k3.col --format json");
        CHECK(o.code == 0);
        json j = json::parse(o.out);
        CHECK(j.at("n") == 21);
        CHECK(j.at("omega") == 6);
        CHECK(j.at("alpha") == 3);
        CHECK(j.at("chi") == 7);
        CHECK(j.at("coloring").size() == 21);
    }
    SUBCASE("oracle tsv on K4") {
        write_dimacs_file((work_dir() / "k4.col").string(), complete_graph(4));
        CmdResult o = run("oracle k4.col --format tsv");
        CHECK(o.code == 0);
        CHECK(o.out == "n\tomega\talpha\tchi\n4\t4\t1\t4\n");
    }
    SUBCASE("tighten 2 3 is all-tight and deterministic") {
        CmdResult a = run("tighten 2 3 --format tsv");
        CHECK(a.code == 0);
        CHECK(a.out.find("false") == std::string::npos);
        // one header plus three rows
        CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 4);
        CmdResult b = run("tighten 2 3 --format tsv");
        CHECK(a.out == b.out);
        json j = json::parse(run("tighten 2 3 --format json").out);
        CHECK(j.at("rows").size() == 3);
        CHECK(j.at("rows")[1].at("tight") == true);
        CHECK(j.at("truncated") == false);
    }
    SUBCASE("corpus generation emits replayable json") {
        CmdResult g = run("gen corpus --seed 42 --max-vertices 12 --max-steps 1 --dir corp");
        CHECK(g.code == 0);
        std::ifstream cj(work_dir() / "corp" / "corpus.json");
        json j = json::parse(cj);
        CHECK(j.at("graphs").size() >= 4);
        for (const auto& e : j.at("graphs")) {
            CHECK(e.contains("initial_hole"));
            CHECK(e.contains("steps"));
            CHECK(e.at("graph").contains("adj"));
        }
        CHECK(std::filesystem::exists(work_dir() / "corp" / "skeleton_0.col"));
    }
}

TEST_CASE("cli color and verify pipeline") {
    run("gen cycle-blowup --len 5 --k 2 --stem c5k2");

    SUBCASE("certificate for C5^2 and a clean verify") {
        CmdResult c = run("color c5k2.col --p 5 --q 2 --out cert.json");
        CHECK(c.code == 0);
        std::ifstream cf(work_dir() / "cert.json");
        json cert = json::parse(cf);
        CHECK(cert.at("omega") == 4);
        CHECK(cert.at("bound") == 5);
        CHECK(cert.at("used") == 5);
        CHECK(cert.at("palette") == 5);
        CHECK(cert.at("base_bound_exceeded") == false);
        CHECK(cert.at("colors").size() == 10);
        REQUIRE(cert.at("trace").size() >= 1);
        CHECK(cert.at("trace")[0].contains("recursive_budget"));

        CmdResult v = run("verify c5k2.col cert.json --format json");
        CHECK(v.code == 0);
        json rep = json::parse(v.out);
        CHECK(rep.at("proper") == true);
        CHECK(rep.at("within_bound") == true);
        CHECK(rep.at("omega_confirmed") == true);
    }
    SUBCASE("a corrupted certificate fails verification with exit 1") {
        run("color c5k2.col --out cert2.json");
        std::ifstream cf(work_dir() / "cert2.json");
        json cert = json::parse(cf);
        cert["colors"][0] = cert["colors"][1]; // vertices 0,1 share a fiber
        write_file("cert2.json", cert.dump());
        CmdResult v = run("verify c5k2.col cert2.json");
        CHECK(v.code == 1);
        CHECK(v.out.find("proper:\tfalse") != std::string::npos);
    }
    SUBCASE("triangle skeleton exits 3") {
        // An explicit map with a K3 skeleton violates the hypothesis.
        auto k3 = build_blowup(complete_graph(3), {1, 1, 1});
        write_file("k3map.json", blowup_to_json(k3.map));
        CHECK(run("color k3map.json").code == 3);
        // So does a raw graph whose twin quotient keeps the triangle.
        Graph net = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
        write_dimacs_file((work_dir() / "net.col").string(), net);
        CHECK(run("color net.col").code == 3);
        // Raw K3 contracts to a single fiber, which is a legitimate blowup.
        write_dimacs_file((work_dir() / "k3.col").string(), complete_graph(3));
        CHECK(run("color k3.col").code == 0);
    }
    SUBCASE("out-of-class skeleton exits 4 but still writes the certificate") {
        write_file("grotzsch.json", graph_to_json(brute::grotzsch()));
        CmdResult c = run("color grotzsch.json --out gcert.json");
        CHECK(c.code == 4);
        std::ifstream cf(work_dir() / "gcert.json");
        json cert = json::parse(cf);
        CHECK(cert.at("base_bound_exceeded") == true);
        CHECK(cert.at("used") == 4);
    }
    SUBCASE("no-recognize requires an explicit map") {
        CHECK(run("color c5k2.col --no-recognize").code == 2);
        CHECK(run("color c5k2.blowup.json --no-recognize").code == 0);
    }
    SUBCASE("bad params exit 2") {
        CHECK(run("color c5k2.col --p 4 --q 2").code == 2);
    }
}

TEST_CASE("cli color output is byte-stable across runs") {
    run("gen cycle-blowup --len 7 --k 2 --stem det7");
    run("color det7.col --p 7 --q 3 --out deta.json");
    run("color det7.col --p 7 --q 3 --out detb.json");
    CHECK(slurp("deta.json") == slurp("detb.json"));
}

TEST_CASE("cli color-verify pipeline over generated corpus skeletons") {
    CHECK(run("gen corpus --seed 7 --max-vertices 12 --max-steps 1 --dir pipe").code == 0);
    int tried = 0;
    for (int i = 0; std::filesystem::exists(work_dir() / "pipe" /
                                            ("skeleton_" + std::to_string(i) + ".col"));
         ++i) {
        std::string col = "pipe/skeleton_" + std::to_string(i) + ".col";
        std::string cert = "pipe/cert_" + std::to_string(i) + ".json";
        CHECK(run("color " + col + " --out " + cert).code == 0);
        CHECK(run("verify " + col + " " + cert).code == 0);
        ++tried;
    }
    CHECK(tried >= 4);
}

TEST_CASE("cli blowup-map inputs work for detect and oracle") {
    run("gen cycle-blowup --len 5 --mult 1,2,1,2,1 --stem c5m");
    CmdResult o = run("oracle c5m.blowup.json --format json");
    CHECK(o.code == 0);
    json j = json::parse(o.out);
    CHECK(j.at("n") == 7);
    CHECK(j.at("omega") == 3);
    CmdResult d = run("detect c5m.blowup.json --format json");
    CHECK(d.code == 0);
    CHECK(json::parse(d.out).at("even_hole_free") == true);
}
