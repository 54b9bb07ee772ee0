#pragma once

#include "minorlab/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace minorlab {

/// Disjoint connected branch sets, pairwise joined by a host edge: a K_t minor with t = sets.size().
struct MinorCertificate {
    std::vector<VertexSet> sets;

    [[nodiscard]] auto size() const -> int { return static_cast<int>(sets.size()); }
    friend auto operator==(const MinorCertificate&, const MinorCertificate&) -> bool = default;
};

enum class CertificateFault { vertex_out_of_range, overlap, disconnected_set, missing_cross_edge };

class CertificateError : public std::invalid_argument {
public:
    CertificateError(CertificateFault fault, const std::string& what) : std::invalid_argument(what), fault_(fault) {}
    [[nodiscard]] auto fault() const -> CertificateFault { return fault_; }

private:
    CertificateFault fault_;
};

/// Checks every certificate invariant and returns the number of branch sets.
/// Throws CertificateError naming the first violated invariant.
auto verify_certificate(const Graph& g, const MinorCertificate& c) -> int;

enum class SearchMode { exact, heuristic };
enum class SearchStatus { found, exhausted, unknown };

struct MinorSearchOptions {
    int exact_cap = 14;
    /// Node limit for the exact search; 0 means unlimited.
    std::uint64_t node_budget = 0;
    /// Restart count for the heuristic; 0 means 10 * order.
    int restarts = 0;
    std::uint64_t seed = 0x5EED;
};

struct MinorSearchResult {
    SearchStatus status = SearchStatus::unknown;
    std::optional<MinorCertificate> certificate;
    std::uint64_t nodes = 0;
};

/// Looks for a K_t minor.
///
/// Exact mode (order <= exact_cap) answers found or exhausted, or unknown when
/// the node budget runs out. Heuristic mode contracts a random greedy family of
/// small branch sets and repairs it; it answers found or unknown only.
auto hadwiger_at_least(const Graph& g, int t, SearchMode mode, const MinorSearchOptions& opts = {})
    -> MinorSearchResult;

struct HadwigerNumber {
    int value = 0;
    MinorCertificate certificate;
};

/// Exact Hadwiger number with a witness; order <= exact_cap.
auto hadwiger_number(const Graph& g, const MinorSearchOptions& opts = {}) -> HadwigerNumber;

/// Disjoint host edges, pairwise joined by a host edge, each adjacent to every
/// vertex not covered by the matching.
struct DominatingMatching {
    std::vector<Edge> edges;

    [[nodiscard]] auto size() const -> int { return static_cast<int>(edges.size()); }
    [[nodiscard]] auto covered() const -> VertexSet;
    friend auto operator==(const DominatingMatching&, const DominatingMatching&) -> bool = default;
};

[[nodiscard]] auto is_connected_dominating_matching(const Graph& g, const DominatingMatching& m) -> bool;

/// A smallest connected dominating matching with at most `max_size` edges, first in
/// lexicographic edge order among those of that size. Size 1 is a dominating edge.
[[nodiscard]] auto find_connected_dominating_matching(const Graph& g, int max_size) -> std::optional<DominatingMatching>;

/// The host with every matching edge contracted.
struct MatchingReduction {
    DominatingMatching matching;
    Graph reduced;
    /// origin[r] is the set of one or two host vertices that reduced vertex r stands for.
    std::vector<VertexSet> origin;
};

[[nodiscard]] auto reduce_by_matching(const Graph& g, const DominatingMatching& m) -> MatchingReduction;

/// Lifts `inner`, a certificate for the subgraph induced by the vertices outside `m`
/// (relabelled in ascending order), to a certificate for `g`: one branch set per
/// matching edge followed by the inner sets mapped back to host ids.
[[nodiscard]] auto reduce_and_lift(const Graph& g, const DominatingMatching& m, const MinorCertificate& inner)
    -> MinorCertificate;

void to_json(nlohmann::json& j, const MinorCertificate& c);
void from_json(const nlohmann::json& j, MinorCertificate& c);

} // namespace minorlab
