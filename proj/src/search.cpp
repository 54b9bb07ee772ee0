#include "minorlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace minorlab {

auto known_filters() -> const std::vector<std::string>&
{
    static const std::vector<std::string> names{"alpha2", "lemma1", "mindeg", "omega7",
                                                "k8",     "seagull", "patterns", "dommatch"};
    return names;
}

auto FilterConfig::defaults() -> FilterConfig
{
    FilterConfig cfg;
    cfg.order = known_filters();
    return cfg;
}

auto FilterConfig::parse(const std::string& list) -> FilterConfig
{
    FilterConfig cfg;
    std::stringstream in(list);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (name.empty())
            continue;
        const auto& known = known_filters();
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw std::invalid_argument("unknown filter: " + name);
        cfg.order.push_back(name);
    }
    return cfg;
}

auto run_filter(const std::string& name, const Graph& g, const FilterConfig& cfg) -> FilterTrace
{
    const int n = g.order();
    FilterTrace t{name, true, ""};
    auto reject = [&](std::string reason) {
        t.pass = false;
        t.reason = std::move(reason);
    };

    if (name == "alpha2") {
        if (!alpha_at_most_2(g))
            reject("α≥3");
    } else if (name == "lemma1") {
        if (!lemma1_admissible(n))
            reject("n=" + std::to_string(n) + ": a minimal counterexample has n=27 or n≥29");
    } else if (name == "mindeg") {
        if (!min_degree_cap(g))
            reject("δ=" + std::to_string(g.min_degree()) + " > n-7: δ ≥ n-6 forces h ≥ χ");
    } else if (name == "omega7") {
        const int omega = clique_number(g);
        if (omega < cfg.omega_min)
            reject("ω=" + std::to_string(omega) + " < " + std::to_string(cfg.omega_min) + ": K7-free graphs satisfy h ≥ χ");
    } else if (name == "k8") {
        if (clique_number(g) >= 8) {
            t.reason = "contains K8: degree analysis does not apply";
        } else {
            auto r = k8_degree_filter(g);
            t.pass = r.pass;
            t.reason = std::move(r.reason);
        }
    } else if (name == "seagull") {
        const int omega = clique_number(g);
        if (seagull_condition(n, omega))
            reject("ω=" + std::to_string(omega) + " meets the clique bound for n=" + std::to_string(n));
    } else if (name == "patterns") {
        auto r = proven_h_filter(g, cfg.patterns);
        t.pass = r.pass;
        t.reason = std::move(r.reason);
    } else if (name == "dommatch") {
        if (auto m = find_connected_dominating_matching(g, cfg.dommatch_max)) {
            std::string edges;
            for (auto [u, v] : m->edges)
                edges += (edges.empty() ? "" : ",") + std::to_string(u) + "-" + std::to_string(v);
            reject("connected dominating matching {" + edges + "}");
        }
    } else {
        throw std::invalid_argument("unknown filter: " + name);
    }
    return t;
}

auto GraphRecord::survived() const -> bool
{
    return !error && std::all_of(filters.begin(), filters.end(), [](const FilterTrace& f) { return f.pass; });
}

auto process_line(const graph6::Line& line, const SearchConfig& cfg) -> GraphRecord
{
    GraphRecord rec;
    rec.seq = line.seq;
    rec.g6 = line.text;
    Graph g;
    try {
        g = graph6::decode(line.text);
    } catch (const std::exception& e) {
        rec.error = e.what();
        return rec;
    }
    rec.n = g.order();
    for (const auto& name : cfg.filters.order) {
        rec.filters.push_back(run_filter(name, g, cfg.filters));
        if (!rec.filters.back().pass)
            return rec;
    }
    if (!cfg.run_verdict)
        return rec;
    try {
        auto v = hc_verdict(g, cfg.verdict);
        rec.verdict = v.outcome;
        rec.h_cert = std::move(v.minor);
        if (v.colouring)
            rec.chi = v.colouring->count;
    } catch (const GraphError&) {
        rec.verdict = Verdict::Outcome::unknown;
    }
    return rec;
}

auto search_corpus(const std::vector<graph6::Line>& lines, const SearchConfig& cfg) -> SearchReport
{
    SearchReport report;
    report.records.resize(lines.size());
    const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(lines.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < lines.size(); i = next++)
            report.records[i] = process_line(lines[i], cfg);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const GraphRecord& a, const GraphRecord& b) { return a.seq < b.seq; });

    for (const auto& r : report.records) {
        if (r.error) {
            ++report.parse_errors;
            continue;
        }
        if (!r.survived()) {
            ++report.rejections[r.filters.back().name];
            continue;
        }
        report.survivors.push_back(r.g6);
        if (!cfg.run_verdict)
            continue;
        switch (r.verdict) {
        case Verdict::Outcome::holds:
            ++report.holds;
            break;
        case Verdict::Outcome::counterexample:
            ++report.counterexamples;
            break;
        case Verdict::Outcome::unknown:
            ++report.unknown;
            break;
        }
    }
    return report;
}

auto search_corpus(std::istream& in, const SearchConfig& cfg) -> SearchReport
{
    std::vector<graph6::Line> lines;
    graph6::Reader reader(in);
    graph6::Line line;
    while (reader.next(line))
        lines.push_back(line);
    return search_corpus(lines, cfg);
}

void to_json(nlohmann::json& j, const GraphRecord& r)
{
    if (r.error) {
        j = nlohmann::json{{"seq", r.seq}, {"g6", r.g6}, {"error", *r.error}};
        return;
    }
    auto filters = nlohmann::json::array();
    for (const auto& f : r.filters)
        filters.push_back({{"name", f.name}, {"result", f.pass ? "pass" : "reject"}, {"reason", f.reason}});
    j = nlohmann::json{{"seq", r.seq}, {"g6", r.g6}, {"n", r.n}, {"filters", std::move(filters)},
                       {"verdict", to_string(r.verdict)}};
    if (r.h_cert)
        j["h_cert"] = *r.h_cert;
    if (r.chi)
        j["chi"] = *r.chi;
}

auto summary_json(const SearchReport& report) -> nlohmann::json
{
    return nlohmann::json{{"graphs", report.records.size()},
                          {"parse_errors", report.parse_errors},
                          {"rejections", report.rejections},
                          {"survivors", report.survivors},
                          {"holds", report.holds},
                          {"counterexamples", report.counterexamples},
                          {"unknown", report.unknown}};
}

} // namespace minorlab
