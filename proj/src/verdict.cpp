#include "minorlab/verdict.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace minorlab {

namespace {

auto set_text(VertexSet s) -> std::string
{
    std::string out = "{";
    bool first = true;
    for (auto v : s.to_vector()) {
        if (!first)
            out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

auto ceil_half(int n) -> int { return (n + 1) / 2; }

} // namespace

auto to_string(Verdict::Outcome o) -> std::string
{
    switch (o) {
    case Verdict::Outcome::holds:
        return "holds";
    case Verdict::Outcome::counterexample:
        return "counterexample";
    case Verdict::Outcome::unknown:
        return "unknown";
    }
    return "unknown";
}

auto hc_verdict(const Graph& g, const VerdictOptions& opts) -> Verdict
{
    const int n = g.order();
    const bool alpha2 = alpha_at_most_2(g);
    if (!alpha2 && n > opts.minor.exact_cap)
        throw GraphError("hc_verdict: graphs with independence number >= 3 need order <= " +
                         std::to_string(opts.minor.exact_cap));

    Verdict v;
    v.colouring = alpha2 ? chromatic_alpha2(g) : chromatic_number_exact(g);
    const int chi = v.colouring->count;

    auto r = hadwiger_at_least(g, chi, SearchMode::heuristic, opts.minor);
    if (r.status != SearchStatus::found && n <= opts.minor.exact_cap)
        r = hadwiger_at_least(g, chi, SearchMode::exact, opts.minor);

    switch (r.status) {
    case SearchStatus::found:
        v.outcome = Verdict::Outcome::holds;
        v.minor = std::move(r.certificate);
        break;
    case SearchStatus::exhausted:
        v.outcome = Verdict::Outcome::counterexample;
        v.exhausted_t = chi;
        v.reason = "exact search found no K" + std::to_string(chi) + " minor";
        break;
    case SearchStatus::unknown:
        v.outcome = Verdict::Outcome::unknown;
        v.reason = n <= opts.minor.exact_cap ? "node budget exhausted"
                                             : "heuristic found no K" + std::to_string(chi) +
                                                   " minor and the order exceeds the exact cap";
        break;
    }
    return v;
}

auto hc2iff_check(const Graph& g, const MinorSearchOptions& opts) -> bool
{
    if (!alpha_at_most_2(g))
        throw GraphError("hc2iff_check: graph has three pairwise non-adjacent vertices");
    const int h = hadwiger_number(g, opts).value;
    const int chi = chromatic_alpha2(g).count;
    return (h >= chi) == (h >= ceil_half(g.order()));
}

auto seagull_condition(int n, int omega) -> bool
{
    return n % 2 == 0 ? 4 * omega >= n : 4 * omega >= n + 3;
}

auto seagull_condition(const Graph& g) -> bool { return seagull_condition(g.order(), clique_number(g)); }

auto lemma1_admissible(int n) -> bool { return n == 27 || n >= 29; }

auto min_degree_cap(const Graph& g) -> bool { return g.order() > 0 && g.min_degree() <= g.order() - 7; }

auto k8_degree_filter(const DegreeProfile& p) -> FilterOutcome
{
    const auto [n, lo, hi] = p;
    if (n != 27)
        return {false, "n=" + std::to_string(n) + ": only n=27 admits a K8-free counterexample (R(3,8)=28)"};
    if (hi >= 23)
        return {false, "Δ=" + std::to_string(hi) + ": 23 neighbours contain a K7 (R(3,7)=23), closing a K8"};
    if (lo <= 18)
        return {false, "δ=" + std::to_string(lo) + ": the ≥8 non-neighbours of a minimum-degree vertex form a K8"};
    if (hi == 22)
        return {false, "Δ=22: |N₁|+…+|N₄| ≤ 21 < 22"};
    if (lo == hi && (n * lo) % 2 != 0)
        return {false, "parity: no " + std::to_string(lo) + "-regular graph on " + std::to_string(n) + " vertices"};
    if (hi == 21 && lo >= 20)
        return {false, "Δ=21: |N₁|+…+|N₅|+|N| ≤ 19 < 21"};
    if (hi == 20 && lo >= 20)
        return {false, "Δ=20: an edge of A dominating N(v) and vx with x ∈ N₁ form a connected dominating matching"};
    return {true, "open case: n=27, δ=19, Δ=" + std::to_string(hi)};
}

auto k8_degree_filter(const Graph& g) -> FilterOutcome
{
    return k8_degree_filter(DegreeProfile{g.order(), g.min_degree(), g.max_degree()});
}

auto proven_pattern_names() -> std::vector<std::string>
{
    using namespace pattern_names;
    return {std::string(k1_6_bar), std::string(h7), std::string(k5_plus), std::string(w5)};
}

auto proven_h_filter(const Graph& g, const std::vector<std::string>& names) -> FilterOutcome
{
    std::string avoided;
    for (const auto& r : is_pattern_free(g, names)) {
        if (!r.is_free)
            continue;
        avoided += avoided.empty() ? "" : ",";
        avoided += r.name;
    }
    if (avoided.empty())
        return {true, ""};
    return {false, "avoids " + avoided};
}

auto find_clique_separation(const Graph& g, int min_larger) -> std::optional<SeparationStructure>
{
    if (!alpha_at_most_2(g))
        throw GraphError("find_clique_separation: graph has three pairwise non-adjacent vertices");
    const int n = g.order();
    const auto all = g.vertices();

    for (int k = 0; k + 2 <= n; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            VertexSet cut;
            for (int i : idx)
                cut.insert(i);
            const auto parts = g.components(all - cut);
            if (parts.size() == 2) {
                auto larger = parts[0];
                auto smaller = parts[1];
                if (smaller.size() > larger.size())
                    std::swap(larger, smaller);
                if (larger.size() >= min_larger) {
                    if (!g.is_clique(larger) || !g.is_clique(smaller))
                        throw std::logic_error("find_clique_separation: component is not a clique");
                    return SeparationStructure{cut, larger, smaller};
                }
            }
            // Advance to the next k-combination in lexicographic order.
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

namespace {

auto lowest(VertexSet s, int count) -> std::vector<Vertex>
{
    auto v = s.to_vector();
    v.resize(std::min<std::size_t>(v.size(), count));
    return v;
}

auto predicted(const Graph& g, std::string source, Vertex hub, const std::vector<Vertex>& rest, Vertex pendant)
    -> PredictedCopy
{
    PredictedCopy p{std::move(source), Embedding{{hub}}, false};
    p.embedding.image.insert(p.embedding.image.end(), rest.begin(), rest.end());
    p.embedding.image.push_back(pendant);
    p.induced = is_induced_embedding(g, find_pattern(pattern_names::k5_plus).graph, p.embedding);
    return p;
}

auto image_text(const Embedding& e) -> std::string
{
    std::string out = "[";
    for (std::size_t i = 0; i < e.image.size(); ++i)
        out += (i ? "," : "") + std::to_string(e.image[i]);
    return out + "]";
}

} // namespace

auto claims_audit(const Graph& g) -> AuditReport
{
    if (!alpha_at_most_2(g))
        throw GraphError("claims_audit: graph has three pairwise non-adjacent vertices");
    auto sep = find_clique_separation(g, 6);
    if (!sep)
        throw GraphError("claims_audit: no vertex cut leaves a component with at least 6 vertices");

    AuditReport r;
    r.separation = *sep;
    const auto [cut, f1, f2] = *sep;
    const auto cut_vertices = cut.to_vector();

    ClaimCheck claim1{"claim1", true, ""};
    ClaimCheck claim2{"claim2", true, ""};
    for (auto t : cut_vertices) {
        const auto in_f1 = g.neighbours(t) & f1;
        const int d = in_f1.size();
        if (d < 2 || d > 3) {
            claim1.holds = false;
            claim1.detail += (claim1.detail.empty() ? "" : "; ") + std::to_string(t) + ":|N_F1|=" + std::to_string(d);
        }
        if (!(f2 - g.neighbours(t)).empty()) {
            claim2.holds = false;
            claim2.detail += (claim2.detail.empty() ? "" : "; ") + std::to_string(t) + " misses " +
                             set_text(f2 - g.neighbours(t));
        }

        // Copies assembled by the two halves of the first claim's proof.
        const auto in_f2 = g.neighbours(t) & f2;
        if (d == 1 && f1.size() >= 5) {
            const Vertex u = in_f1.first();
            r.predicted.push_back(predicted(g, "claim1:|N_F1(" + std::to_string(t) + ")|=1", u, lowest(f1 - in_f1, 4), t));
        } else if (d >= 4 && !in_f2.empty()) {
            r.predicted.push_back(
                predicted(g, "claim1:|N_F1(" + std::to_string(t) + ")|>=4", t, lowest(in_f1, 4), in_f2.first()));
        }
    }
    const bool claim3_holds = f2.size() >= 1 && f2.size() <= 3;
    ClaimCheck claim3{"claim3", claim3_holds, "|F2|=" + std::to_string(f2.size())};
    if (!claim3_holds && !cut_vertices.empty()) {
        const Vertex t = cut_vertices.front();
        const auto in_f2 = g.neighbours(t) & f2;
        const auto in_f1 = g.neighbours(t) & f1;
        if (in_f2.size() >= 4 && !in_f1.empty())
            r.predicted.push_back(predicted(g, "claim3:|F2|>=4", t, lowest(in_f2, 4), in_f1.first()));
    }
    ClaimCheck claim4{"claim4", f1.size() == 6, "|F1|=" + std::to_string(f1.size())};
    if (claim1.holds)
        claim1.detail = "every v_T has 2..3 neighbours in F1";
    if (claim2.holds)
        claim2.detail = "T is complete to F2";
    r.claims = {claim1, claim2, claim3, claim4};

    r.matcher_copy = contains_induced(g, find_pattern(pattern_names::k5_plus));
    const bool any_violation = std::any_of(r.claims.begin(), r.claims.end(), [](const ClaimCheck& c) { return !c.holds; });

    for (const auto& p : r.predicted) {
        if (p.induced && !r.matcher_copy)
            r.discrepancies.push_back(p.source + ": predicted copy " + image_text(p.embedding) +
                                      " is induced but the matcher found none");
    }
    if (any_violation && !r.matcher_copy)
        r.discrepancies.push_back("a claim is violated yet the graph has no induced K5plus");

    // The pendant construction also applies when 2 <= |N_F1(v_T)| <= |F1| - 4.
    for (auto t : cut_vertices) {
        const auto in_f1 = g.neighbours(t) & f1;
        const int d = in_f1.size();
        if (d >= 2 && d <= 3 && d <= f1.size() - 4) {
            auto probe = predicted(g, "claim1-lower-bound:|N_F1(" + std::to_string(t) + ")|=" + std::to_string(d),
                                   in_f1.first(), lowest(f1 - in_f1, 4), t);
            if (probe.induced)
                r.discrepancies.push_back("claim1 lower bound: v_T=" + std::to_string(t) + " has |N_F1|=" +
                                          std::to_string(d) + " yet " + image_text(probe.embedding) +
                                          " induces K5plus");
            r.predicted.push_back(std::move(probe));
        }
    }
    if (!any_violation && r.matcher_copy && r.discrepancies.empty())
        r.discrepancies.push_back("every claim holds yet the graph has an induced K5plus " +
                                  image_text(*r.matcher_copy));

    if (!r.discrepancies.empty())
        r.status = "discrepancy";
    else if (any_violation)
        r.status = "predicted";
    else
        r.status = "consistent";
    return r;
}

void to_json(nlohmann::json& j, const AuditReport& r)
{
    auto claims = nlohmann::json::array();
    for (const auto& c : r.claims)
        claims.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    auto predicted = nlohmann::json::array();
    for (const auto& p : r.predicted)
        predicted.push_back({{"source", p.source}, {"image", p.embedding.image}, {"induced", p.induced}});
    j = nlohmann::json{
        {"status", r.status},
        {"separation",
         {{"T", r.separation.separator.to_vector()},
          {"F1", r.separation.larger.to_vector()},
          {"F2", r.separation.smaller.to_vector()}}},
        {"claims", std::move(claims)},
        {"predicted", std::move(predicted)},
        {"matcher_copy", r.matcher_copy ? nlohmann::json(r.matcher_copy->image) : nlohmann::json(nullptr)},
        {"discrepancies", r.discrepancies},
    };
}

} // namespace minorlab
