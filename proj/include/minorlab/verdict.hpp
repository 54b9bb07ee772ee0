#pragma once

#include "minorlab/graph.hpp"
#include "minorlab/invariants.hpp"
#include "minorlab/minors.hpp"
#include "minorlab/patterns.hpp"

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace minorlab {

/// Outcome of checking h(G) >= chi(G) on one graph.
struct Verdict {
    enum class Outcome { holds, counterexample, unknown };

    Outcome outcome = Outcome::unknown;
    /// holds: a minor certificate with at least `colouring->count` sets.
    std::optional<MinorCertificate> minor;
    std::optional<ColoringCert> colouring;
    /// counterexample: the t for which the exact search was exhausted (t = chi).
    int exhausted_t = 0;
    std::string reason;
};

[[nodiscard]] auto to_string(Verdict::Outcome o) -> std::string;

struct VerdictOptions {
    MinorSearchOptions minor;
};

/// Colours the graph exactly (matching identity when alpha <= 2), then looks for a
/// K_chi minor: heuristic first, exact search when the order is within the cap.
/// A counterexample is reported only after the exact search is exhausted.
/// Graphs with alpha >= 3 must have order <= the exact cap.
[[nodiscard]] auto hc_verdict(const Graph& g, const VerdictOptions& opts = {}) -> Verdict;

/// For alpha <= 2 and order <= 14: (h >= chi) == (h >= ceil(n/2)), from exact h and chi.
[[nodiscard]] auto hc2iff_check(const Graph& g, const MinorSearchOptions& opts = {}) -> bool;

/// omega >= n/4 for even n, omega >= (n+3)/4 for odd n.
[[nodiscard]] auto seagull_condition(int n, int omega) -> bool;
[[nodiscard]] auto seagull_condition(const Graph& g) -> bool;

/// Orders a minimal counterexample can have: 27 or at least 29.
[[nodiscard]] auto lemma1_admissible(int n) -> bool;

/// True iff min degree <= n - 7 (graphs with min degree >= n - 6 satisfy the conjecture).
[[nodiscard]] auto min_degree_cap(const Graph& g) -> bool;

struct FilterOutcome {
    bool pass = true;
    std::string reason;
};

struct DegreeProfile {
    int n = 0;
    int min_degree = 0;
    int max_degree = 0;
};

/// Degree analysis for K8-free candidates with alpha <= 2. Only n = 27,
/// min degree 19, max degree 20 or 21 survives; every rejection names the case.
[[nodiscard]] auto k8_degree_filter(const DegreeProfile& p) -> FilterOutcome;
[[nodiscard]] auto k8_degree_filter(const Graph& g) -> FilterOutcome;

/// Patterns H for which every H-free graph with alpha <= 2 is known to satisfy the conjecture.
[[nodiscard]] auto proven_pattern_names() -> std::vector<std::string>;

/// Rejects when the graph avoids any of `names`; the reason lists the avoided patterns.
[[nodiscard]] auto proven_h_filter(const Graph& g, const std::vector<std::string>& names = proven_pattern_names())
    -> FilterOutcome;

/// A vertex cut T whose removal leaves exactly two components F1 (larger) and F2.
struct SeparationStructure {
    VertexSet separator;
    VertexSet larger;
    VertexSet smaller;

    friend auto operator==(const SeparationStructure&, const SeparationStructure&) -> bool = default;
};

/// Minimum-size cut, lexicographically least among those, with |F1| >= min_larger.
/// F1 is the larger side (ties: the side with the smaller least vertex). Requires
/// alpha <= 2, under which both sides are cliques.
[[nodiscard]] auto find_clique_separation(const Graph& g, int min_larger = 0) -> std::optional<SeparationStructure>;

struct ClaimCheck {
    std::string name;
    bool holds = true;
    std::string detail;
};

/// An induced K5plus assembled the way a claim's proof assembles it; image follows
/// the catalog's K5plus labelling (0 is the hub, 5 the pendant).
struct PredictedCopy {
    std::string source;
    Embedding embedding;
    bool induced = false;
};

struct AuditReport {
    SeparationStructure separation;
    std::vector<ClaimCheck> claims;
    std::vector<PredictedCopy> predicted;
    std::optional<Embedding> matcher_copy;
    std::vector<std::string> discrepancies;
    /// "consistent", "predicted", or "discrepancy".
    std::string status;
};

/// Evaluates the four separation claims on the minimum cut with |F1| >= 6, builds the
/// K5plus copies their proofs predict, and cross-checks with an independent K5plus search.
/// Requires alpha <= 2 and such a cut; throws GraphError otherwise.
[[nodiscard]] auto claims_audit(const Graph& g) -> AuditReport;

void to_json(nlohmann::json& j, const AuditReport& r);

} // namespace minorlab
