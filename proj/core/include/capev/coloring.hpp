#pragma once

#include "capev/blowup.hpp"
#include "capev/graph.hpp"
#include "capev/oracles.hpp"
#include "capev/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace capev {

/// The parameter pair (p, q) with p > 2q driving the bound ceil(p*omega/2q).
struct BoundParams {
    int p = 5;
    int q = 2;

    BoundParams() = default;
    BoundParams(int p_, int q_) : p(p_), q(q_) {
        if (p < 1 || q < 1 || p <= 2 * q)
            throw std::invalid_argument("bound params require positive p, q with p > 2q");
    }
};

/// ceil(p * omega / (2q)), exact integer arithmetic.
int compute_bound(const BoundParams& params, int omega);

/// max{2q(p - q - 2)/(p - 2q), 2q} as an exact rational. Instances with omega
/// at or below this threshold are handed to the base colorer.
Rational base_threshold(const BoundParams& params);

/// The transversal T meets each fiber in min{q, |Q_v|} vertices, taking the
/// lexicographically first ids of each fiber.
std::vector<int> select_transversal(const BlowupMap& b, const BoundParams& params);

/// V1 collects both fibers of every skeleton edge with one fiber of size
/// <= q-1 and the other of size >= omega-q+1; V2 is the rest. V1 \ T is a
/// union of pairwise anticomplete cliques, recorded in v1_cliques.
struct TransversalPartition {
    std::vector<int> t_set;
    std::vector<int> v1;
    std::vector<int> v2;
    std::vector<std::vector<int>> v1_cliques;
};

/// Computes and certifies the partition. Preconditions: connected triangle-free
/// skeleton, all multiplicities >= 1, omega above the base threshold. A failed
/// structural certification throws std::logic_error naming the violated claim.
TransversalPartition partition_v1_v2(const BlowupMap& b, const BoundParams& params, int omega);

/// One recursion level of the transversal coloring.
struct TraceLevel {
    int omega = 0;
    int t_size = 0;
    int v1_size = 0;
    int v2_size = 0;
    int recursive_budget = 0; // colors reserved for V2 \ T and the V1 cliques
    int fresh_colors = 0;     // colors reserved for T (at most p)
    bool checks_passed = false;
};

/// A proper coloring witnessing chi <= ceil(p*omega/2q) on one instance.
/// palette_size is the budget of the emitting branch; colors_used counts the
/// colors actually appearing.
struct Certificate {
    std::vector<int> coloring; // vertex -> 1..palette_size
    int palette_size = 0;
    int colors_used = 0;
    int omega = 0;
    BoundParams params;
    int bound = 0;
    bool base_bound_exceeded = false;
    std::vector<TraceLevel> trace;
};

/// Pluggable base-case colorer; must be exact enough to stay within
/// compute_bound(params, omega) on in-class instances. The hint is the budget.
using BaseColorer = std::function<OracleResult(const Graph&, int budget_hint)>;

BaseColorer exact_base_colorer();

/// Colors a clique blowup of a triangle-free skeleton within
/// ceil(p*omega/2q) colors by transversal recursion; instances with omega at
/// or below the base threshold go to `base`. Zero fibers are dropped and
/// skeleton components are colored independently under a shared palette.
/// An out-of-class base instance whose exact coloring needs more than the
/// bound sets base_bound_exceeded instead of failing.
Certificate color_blowup(const BlowupMap& b, const BoundParams& params,
                         const BaseColorer& base = exact_base_colorer());

/// Certificate JSON: {"colors", "palette", "used", "omega", "p", "q",
/// "bound", "base_bound_exceeded", "trace"}.
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

// --------------------------------------------------------------------------
// Path blowups and the coloring primitives used on them.

/// A path v_0..v_n blown up into nonempty cliques V_0..V_n, n >= 3 odd, with
/// palette bound r >= omega.
struct PathBlowup {
    std::vector<int> multiplicity; // size n+1
    int r = 0;

    int n() const { return int(multiplicity.size()) - 1; }
    int omega() const;
    void validate() const; // throws std::invalid_argument on a bad shape
};

/// Coloring of a path blowup: per position, the colors of that clique's
/// vertices (empty = uncolored). Slot counts must match multiplicities.
using PathColoring = std::vector<std::vector<int>>;

/// Extends a proper coloring of V_0 u V_n to all of the blowup except V_j
/// (j odd), within r colors, covering the reserved color set s on every even
/// clique. s must be drawn from colors(V_0) minus colors(V_n) and fit into
/// every even clique. Precondition violations throw std::invalid_argument; a
/// greedy dead end throws std::logic_error (it cannot happen when the
/// preconditions hold).
PathColoring path_extension(const PathBlowup& pb, const std::vector<int>& v0_colors,
                            const std::vector<int>& vn_colors, const std::vector<int>& s,
                            int j);

/// Outcome of a greedy chain sweep: either a full coloring or the position
/// where the palette ran out (a legitimate result, used by searches).
struct ChainResult {
    bool success = false;
    PathColoring coloring;
    int stuck_position = -1;
};

/// Sweeps the positions in `order`, filling uncolored slots; at each clique it
/// prefers colors shared with the clique two positions back in sweep
/// direction, then lowest color id. Colors in `reserved` are never placed by
/// the sweep. Pre-colored entries of `partial` are kept as given.
ChainResult greedy_chain_extension(const PathBlowup& pb, const PathColoring& partial,
                                   const std::vector<int>& reserved,
                                   const std::vector<int>& order);

} // namespace capev
