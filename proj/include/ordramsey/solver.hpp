#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordramsey/coloring.hpp"
#include "ordramsey/graph.hpp"

namespace ordramsey {

struct RamseyQuery {
    std::vector<OrderedGraph> targets;  // targets[c] must appear monochromatically in color c
    int N = 0;
};

struct SearchStats {
    long long nodes = 0;
    long long prunes = 0;
    double wall_ms = 0.0;
};

struct Certificate {
    RamseyQuery query;
    bool unavoidable = false;
    std::optional<EdgeColoring> witness;  // avoiding coloring when avoidable
    SearchStats stats;
};

inline constexpr int kDefaultEdgeCap = 200;

struct SolveOptions {
    int edge_cap = kDefaultEdgeCap;   // max C(N,2) for built-in search
    int threads = 1;
    int split_depth = 8;              // frontier depth for parallel subtree split
    bool naive_rescan = false;        // full rescan instead of the incremental
                                      // completion check (differential testing)
};

// Exhaustive backtracking over edges in lexicographic order, backtracking
// the moment any color class completes a monochromatic target. Avoidable
// verdicts carry a verified witness; the certificate is deterministic
// regardless of thread count.
Certificate decide(const RamseyQuery& query, const SolveOptions& opts = {});

struct RamseyNumberResult {
    bool closed = false;   // false when the cap stopped the search (bracket only)
    int value = 0;         // r_< when closed; otherwise best-known lower bound + 1
    std::optional<Certificate> avoidable_below;   // witness at value-1
    std::optional<Certificate> unavoidable_at;    // exhaustion at value
};

RamseyNumberResult ramsey_number(const std::vector<OrderedGraph>& targets, int start_N = 1,
                                 const SolveOptions& opts = {});

inline constexpr long long kDefaultOracleCap = 1 << 24;

// Independent oracle: plain enumeration of all q^C(N,2) colorings with a
// per-coloring monochromatic scan. Shares no code with decide's pruning
// path. Returns true iff every coloring hits some monochromatic target.
bool brute_force_oracle(const std::vector<OrderedGraph>& targets, int N,
                        long long enum_cap = kDefaultOracleCap);

// DIMACS CNF export (q = 2): one variable per pair (true = color 0), one
// clause per target embedding forbidding the all-that-color assignment.
// Header comments record the variable <-> pair map.
void sat_export(const RamseyQuery& query, const std::string& path);
std::string sat_export_text(const RamseyQuery& query);

// Re-imports a DIMACS-style assignment (one literal per token, as in
// "v 1 -2 3 ... 0" lines or a plain list) as a coloring for the query.
EdgeColoring coloring_from_assignment(const RamseyQuery& query, const std::vector<int>& literals);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

struct VerifyResult {
    bool ok = false;
    bool search_trusted = false;  // unavoidable certificate out of brute-force range
    std::string detail;
};

// Re-checks an avoidable witness from scratch; unavoidable certificates are
// re-checked only when within brute-force range.
VerifyResult verify_certificate(const Certificate& cert);
VerifyResult verify_certificate_file(const std::string& path);

// Stable hash of a query for the results ledger.
std::string query_hash(const RamseyQuery& query);

} // namespace ordramsey
