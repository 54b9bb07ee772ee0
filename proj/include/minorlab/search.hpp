#pragma once

#include "minorlab/graph6.hpp"
#include "minorlab/verdict.hpp"

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace minorlab {

/// Which counterexample filters run, in which order, with their parameters.
///
/// Known filters: alpha2, lemma1, mindeg, omega7, k8, seagull, patterns, dommatch.
struct FilterConfig {
    std::vector<std::string> order;
    std::vector<std::string> patterns = proven_pattern_names();
    int omega_min = 7;
    int dommatch_max = 3;

    /// Every known filter, cheapest first.
    static auto defaults() -> FilterConfig;
    /// Parses a comma-separated list; throws std::invalid_argument on an unknown name.
    static auto parse(const std::string& list) -> FilterConfig;
};

[[nodiscard]] auto known_filters() -> const std::vector<std::string>&;

struct FilterTrace {
    std::string name;
    bool pass = true;
    std::string reason;
};

/// Runs one named filter. A rejection means the graph cannot be a minimal
/// counterexample (or lies outside the alpha <= 2 scope).
[[nodiscard]] auto run_filter(const std::string& name, const Graph& g, const FilterConfig& cfg) -> FilterTrace;

struct SearchConfig {
    FilterConfig filters;
    /// Run hc_verdict on graphs that pass every filter.
    bool run_verdict = true;
    VerdictOptions verdict;
    int jobs = 1;
};

struct GraphRecord {
    std::size_t seq = 0;
    std::string g6;
    int n = 0;
    std::vector<FilterTrace> filters;
    Verdict::Outcome verdict = Verdict::Outcome::unknown;
    std::optional<MinorCertificate> h_cert;
    std::optional<int> chi;
    /// Set for lines that failed to parse; the other fields are then unused.
    std::optional<std::string> error;

    [[nodiscard]] auto survived() const -> bool;
};

struct SearchReport {
    std::vector<GraphRecord> records; // ordered by seq
    std::map<std::string, int> rejections;
    std::vector<std::string> survivors;
    int parse_errors = 0;
    int counterexamples = 0;
    int unknown = 0;
    int holds = 0;
};

/// Processes one graph6 line: parse, filter trace, then (optionally) the verdict.
[[nodiscard]] auto process_line(const graph6::Line& line, const SearchConfig& cfg) -> GraphRecord;

/// Processes every line, in parallel when cfg.jobs > 1; records come back in input order.
[[nodiscard]] auto search_corpus(const std::vector<graph6::Line>& lines, const SearchConfig& cfg) -> SearchReport;
[[nodiscard]] auto search_corpus(std::istream& in, const SearchConfig& cfg) -> SearchReport;

void to_json(nlohmann::json& j, const GraphRecord& r);
[[nodiscard]] auto summary_json(const SearchReport& report) -> nlohmann::json;

} // namespace minorlab
