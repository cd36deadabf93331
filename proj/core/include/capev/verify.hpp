#pragma once

#include "capev/coloring.hpp"
#include "capev/graph.hpp"
#include "capev/structure.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace capev {

/// Independent certificate check: fresh adjacency scan, fresh omega. Never
/// reuses engine state.
struct VerificationReport {
    bool proper = false;
    bool within_bound = false;
    bool omega_confirmed = false;
    bool structural_omega = false; // omega recomputed via blowup structure, not the oracle
    std::vector<std::string> details;

    bool all_ok() const { return proper && within_bound && omega_confirmed; }
};

/// Verifies coverage, properness, the ceil(p*omega/2q) bound and the claimed
/// omega. Coverage gaps or out-of-range colors throw std::invalid_argument
/// ("malformed certificate"). Graphs with more than `exact_omega_cap` vertices
/// get omega from the twin-quotient blowup structure instead of the oracle.
VerificationReport check_certificate(const Graph& g, const Certificate& cert,
                                     int exact_omega_cap = 24);

struct TightnessRow {
    int q = 0, k = 0;
    int n = 0, omega = 0, exact_chi = 0, bound = 0;
    bool tight = false;
};

struct TightnessTable {
    std::vector<TightnessRow> rows;
    bool truncated = false;   // ran into the exact-solver cap
    int first_skipped_k = 0;  // meaningful when truncated
};

/// Exact chi of C_{2q+1}^k against ceil((2q+1)*2k/(2q)) for k = 1..k_max.
/// Rows beyond the solver cap (n > cap) are skipped with a truncation marker;
/// a positive time budget truncates at the first row boundary past it.
TightnessTable tightness_table(int q, int k_max, int solver_cap = 24,
                               double time_budget_s = 0);

std::string tightness_to_json(const TightnessTable& t);
std::string tightness_to_tsv(const TightnessTable& t);

/// How conjecture_scan blows up each corpus skeleton.
struct MultiplicityPolicy {
    std::vector<int> uniform_ks = {1, 2}; // one instance per k per skeleton
    int random_samples = 0;               // extra random multiplicity vectors
    int random_max_multiplicity = 3;
    std::uint64_t seed = 1;
};

struct ScanBudget {
    int max_exact_n = 24;  // instances beyond this are skipped
    int max_instances = 1000;
};

struct ScanViolation {
    Graph graph;
    std::vector<int> multiplicity;
    int omega = 0, chi = 0, bound = 0;
    std::vector<int> coloring; // optimal coloring found by the oracle
};

/// Per-instance outcome of the conjecture scan.
struct ScanRow {
    int corpus_index = 0;
    std::vector<int> multiplicity;
    int n = 0, omega = 0, chi = 0, bound = 0;
};

struct ConjectureReport {
    int scanned = 0;
    int skipped_out_of_class = 0; // corpus graphs failing the G_q membership filter
    int skipped_budget = 0;
    std::vector<ScanRow> rows;
    std::vector<ScanViolation> violations;

    bool no_violation() const { return violations.empty(); }
};

/// Tests chi <= ceil((2q+1)*omega/2q) on blowups of corpus skeletons that are
/// triangle-free, even-hole-free and have no odd hole shorter than 2q+1. The
/// report never claims anything beyond the scanned set.
ConjectureReport conjecture_scan(int q, const std::vector<Graph>& corpus,
                                 const MultiplicityPolicy& policy, const ScanBudget& budget);

/// Scan report JSON; violations carry the full graph and optimal coloring.
std::string scan_report_to_json(const ConjectureReport& r);

} // namespace capev
