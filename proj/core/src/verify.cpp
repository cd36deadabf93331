#include "capev/verify.hpp"

#include "capev/blowup.hpp"
#include "capev/graph_io.hpp"
#include "capev/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace capev {

VerificationReport check_certificate(const Graph& g, const Certificate& cert,
                                     int exact_omega_cap) {
    int n = g.vertex_count();
    if (int(cert.coloring.size()) != n)
        throw std::invalid_argument("malformed certificate: coloring does not cover the graph");
    for (int c : cert.coloring)
        if (c < 1) throw std::invalid_argument("malformed certificate: uncolored vertex");

    VerificationReport rep;

    // Properness by a plain pairwise edge scan, independent of the engine.
    rep.proper = true;
    for (int u = 0; u < n && rep.proper; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) && cert.coloring[u] == cert.coloring[v]) {
                rep.proper = false;
                rep.details.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                      " is monochromatic in color " +
                                      std::to_string(cert.coloring[u]));
                break;
            }

    int omega;
    if (n <= exact_omega_cap) {
        omega = max_clique_size(g).value;
    } else {
        omega = blowup_omega(recognize_blowup(g));
        rep.structural_omega = true;
        rep.details.push_back("omega recomputed structurally (n > " +
                              std::to_string(exact_omega_cap) + ")");
    }
    rep.omega_confirmed = (omega == cert.omega);
    if (!rep.omega_confirmed)
        rep.details.push_back("claimed omega " + std::to_string(cert.omega) +
                              ", recomputed " + std::to_string(omega));

    std::set<int> used(cert.coloring.begin(), cert.coloring.end());
    int bound = compute_bound(cert.params, omega);
    rep.within_bound = int(used.size()) <= bound;
    if (!rep.within_bound)
        rep.details.push_back("uses " + std::to_string(used.size()) + " colors, bound is " +
                              std::to_string(bound));
    return rep;
}

TightnessTable tightness_table(int q, int k_max, int solver_cap, double time_budget_s) {
    if (q < 2) throw std::invalid_argument("tightness table needs q >= 2");
    TightnessTable t;
    int len = 2 * q + 1;
    auto start = std::chrono::steady_clock::now();
    for (int k = 1; k <= k_max; ++k) {
        bool over_time =
            time_budget_s > 0 &&
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
                time_budget_s;
        if (len * k > solver_cap || over_time) {
            t.truncated = true;
            t.first_skipped_k = k;
            break;
        }
        auto bu = cycle_blowup(len, k);
        TightnessRow row;
        row.q = q;
        row.k = k;
        row.n = bu.graph.vertex_count();
        row.omega = blowup_omega(bu.map);
        row.exact_chi = exact_chromatic(bu.graph).value;
        row.bound = compute_bound(BoundParams(len, q), row.omega);
        row.tight = (row.exact_chi == row.bound);
        t.rows.push_back(row);
    }
    return t;
}

std::string tightness_to_json(const TightnessTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"q", r.q},
                        {"k", r.k},
                        {"n", r.n},
                        {"omega", r.omega},
                        {"exact_chi", r.exact_chi},
                        {"bound", r.bound},
                        {"tight", r.tight}});
    nlohmann::json j{{"rows", std::move(rows)}, {"truncated", t.truncated}};
    if (t.truncated) j["first_skipped_k"] = t.first_skipped_k;
    return j.dump();
}

std::string tightness_to_tsv(const TightnessTable& t) {
    std::ostringstream out;
    out << "q\tk\tn\tomega\texact_chi\tbound\ttight\n";
    for (const auto& r : t.rows)
        out << r.q << "\t" << r.k << "\t" << r.n << "\t" << r.omega << "\t" << r.exact_chi
            << "\t" << r.bound << "\t" << (r.tight ? "true" : "false") << "\n";
    if (t.truncated)
        out << "# truncated: exact solver cap reached at k=" << t.first_skipped_k << "\n";
    return out.str();
}

namespace {

bool in_scan_class(const Graph& g, int q) {
    if (find_triangle(g)) return false;
    if (has_even_hole(g)) return false;
    for (int len = 5; len < 2 * q + 1; len += 2)
        if (find_hole_of_length(g, len)) return false;
    return true;
}

} // namespace

std::string scan_report_to_json(const ConjectureReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"corpus_index", row.corpus_index},
                        {"multiplicity", row.multiplicity},
                        {"n", row.n},
                        {"omega", row.omega},
                        {"chi", row.chi},
                        {"bound", row.bound}});
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"graph", nlohmann::json::parse(graph_to_json(v.graph))},
                              {"multiplicity", v.multiplicity},
                              {"omega", v.omega},
                              {"chi", v.chi},
                              {"bound", v.bound},
                              {"coloring", v.coloring}});
    nlohmann::json j{{"scanned", r.scanned},
                     {"skipped_out_of_class", r.skipped_out_of_class},
                     {"skipped_budget", r.skipped_budget},
                     {"rows", std::move(rows)},
                     {"violations", std::move(violations)},
                     {"verdict", r.no_violation() ? "no violation in scanned set" : "violation"}};
    return j.dump();
}

ConjectureReport conjecture_scan(int q, const std::vector<Graph>& corpus,
                                 const MultiplicityPolicy& policy, const ScanBudget& budget) {
    if (q < 4) throw std::invalid_argument("conjecture scan targets q >= 4");
    ConjectureReport rep;
    std::mt19937_64 rng(policy.seed);

    for (size_t ci = 0; ci < corpus.size(); ++ci) {
        const Graph& f = corpus[ci];
        if (!in_scan_class(f, q)) {
            ++rep.skipped_out_of_class;
            continue;
        }
        std::vector<std::vector<int>> mults;
        for (int k : policy.uniform_ks) mults.push_back(std::vector<int>(f.vertex_count(), k));
        for (int s = 0; s < policy.random_samples; ++s) {
            std::vector<int> m(f.vertex_count());
            for (int& x : m) x = 1 + int(rng() % std::uint64_t(policy.random_max_multiplicity));
            mults.push_back(std::move(m));
        }

        for (const auto& m : mults) {
            if (rep.scanned >= budget.max_instances) {
                ++rep.skipped_budget;
                continue;
            }
            auto bu = build_blowup(f, m);
            if (bu.graph.vertex_count() > budget.max_exact_n) {
                ++rep.skipped_budget;
                continue;
            }
            int omega = blowup_omega(bu.map);
            OracleResult chi = exact_chromatic(bu.graph);
            int bound = compute_bound(BoundParams(2 * q + 1, q), omega);
            rep.rows.push_back(
                {int(ci), m, bu.graph.vertex_count(), omega, chi.value, bound});
            ++rep.scanned;
            if (chi.value > bound)
                rep.violations.push_back({bu.graph, m, omega, chi.value, bound, chi.witness});
        }
    }
    return rep;
}

} // namespace capev
