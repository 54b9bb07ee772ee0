// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "corpus.hpp"
#include "oracles.hpp"

#include "minorlab/cli.hpp"
#include "minorlab/graph6.hpp"
#include "minorlab/ramsey.hpp"
#include "minorlab/verdict.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace minorlab;

namespace {

// Pinned limits.
constexpr int corpus_max_order = 10;
constexpr int naive_check_max_order = 7;
constexpr int hadwiger_random_graphs = 10000;
constexpr int hadwiger_max_order = 8;
constexpr int matching_max_size = 3;
constexpr int pattern_random_hosts = 1000;
constexpr int pattern_host_max_order = 9;
constexpr double corpus_seconds_limit = 600.0;
constexpr double ramsey_seconds_limit = 120.0;

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point start) -> double
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

auto report(int id, const std::string& title, const Outcome& o, double secs) -> bool
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  [" << o.detail
              << "; " << buf << "]" << std::endl;
    return o.pass;
}

auto corpus(int n) -> const std::vector<Graph>& { return testing_corpus::alpha2_graphs(n); }

// Outcomes from criterion 1, reused by criterion 5.
std::vector<std::vector<Verdict::Outcome>> corpus_verdicts(corpus_max_order + 1);

auto criterion1() -> Outcome
{
    Outcome o;
    for (int n = 1; n <= naive_check_max_order; ++n) {
        const auto generated = generate_triangle_free(n);
        const auto naive = oracle::triangle_free_classes(n);
        if (generated.size() != naive.size()) {
            o.fail("n=" + std::to_string(n) + ": generated " + std::to_string(generated.size()) + " classes, naive " +
                   std::to_string(naive.size()));
            continue;
        }
        for (const auto& r : naive) {
            const auto hits = std::count_if(generated.begin(), generated.end(),
                                            [&](const Graph& g) { return oracle::isomorphic(g, r); });
            if (hits != 1)
                o.fail("n=" + std::to_string(n) + ": a naive class matched " + std::to_string(hits) + " generated graphs");
        }
    }

    std::size_t total = 0;
    for (int n = 1; n <= corpus_max_order; ++n) {
        for (const auto& g : corpus(n)) {
            ++total;
            const auto g6 = graph6::encode(g);
            if (!alpha_at_most_2(g)) {
                o.fail(g6 + " has an independent triple");
                corpus_verdicts[n].push_back(Verdict::Outcome::unknown);
                continue;
            }
            const auto v = hc_verdict(g);
            corpus_verdicts[n].push_back(v.outcome);
            if (v.outcome != Verdict::Outcome::holds) {
                o.fail(g6 + ": verdict " + to_string(v.outcome));
                continue;
            }
            if (!v.colouring || !v.colouring->is_valid_for(g) || !v.minor) {
                o.fail(g6 + ": missing or invalid certificate");
                continue;
            }
            try {
                if (verify_certificate(g, *v.minor) < v.colouring->count)
                    o.fail(g6 + ": minor certificate smaller than chi");
            } catch (const CertificateError& e) {
                o.fail(g6 + ": " + e.what());
            }
            if (!hc2iff_check(g))
                o.fail(g6 + ": h >= chi and h >= ceil(n/2) disagree");
        }
    }
    if (o.pass)
        o.detail = std::to_string(total) + " graphs, n<=" + std::to_string(corpus_max_order) +
                   ", generation matches naive enumeration for n<=" + std::to_string(naive_check_max_order);
    return o;
}

auto check_hadwiger(const Graph& g, Outcome& o) -> void
{
    const int h = oracle::hadwiger_number(g);
    for (int t = 1; t <= g.order(); ++t) {
        const auto r = hadwiger_at_least(g, t, SearchMode::exact);
        const bool want = t <= h;
        if (r.status == SearchStatus::unknown || (r.status == SearchStatus::found) != want) {
            o.fail(graph6::encode(g) + ": t=" + std::to_string(t) + " disagrees with oracle h=" + std::to_string(h));
            return;
        }
        if (r.status == SearchStatus::found) {
            try {
                if (!r.certificate || verify_certificate(g, *r.certificate) < t)
                    o.fail(graph6::encode(g) + ": certificate too small at t=" + std::to_string(t));
            } catch (const CertificateError& e) {
                o.fail(graph6::encode(g) + ": " + e.what());
            }
        }
    }
}

auto criterion2() -> Outcome
{
    Outcome o;
    std::mt19937_64 rng(0xA11CE);
    std::uniform_int_distribution<int> order(1, hadwiger_max_order);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < hadwiger_random_graphs; ++i)
        check_hadwiger(oracle::random_graph(rng, order(rng), density(rng)), o);
    std::size_t corpus_count = 0;
    for (int n = 1; n <= hadwiger_max_order; ++n)
        for (const auto& g : corpus(n)) {
            check_hadwiger(g, o);
            ++corpus_count;
        }
    if (o.pass)
        o.detail = std::to_string(hadwiger_random_graphs) + " random graphs + " + std::to_string(corpus_count) +
                   " corpus graphs, every t in 1..n";
    return o;
}

auto criterion3() -> Outcome
{
    Outcome o;
    std::size_t total = 0;
    for (int n = 1; n <= corpus_max_order; ++n)
        for (const auto& g : corpus(n)) {
            ++total;
            const auto a = chromatic_alpha2(g);
            const auto b = chromatic_number_exact(g);
            if (!a.is_valid_for(g) || !b.is_valid_for(g) || a.count != b.count)
                o.fail(graph6::encode(g) + ": matching colouring " + std::to_string(a.count) + " vs exact " +
                       std::to_string(b.count));
        }
    if (o.pass)
        o.detail = std::to_string(total) + " graphs";
    return o;
}

auto criterion4() -> Outcome
{
    Outcome o;
    std::size_t with_matching = 0;
    std::size_t reached = 0;
    for (int n = 1; n <= corpus_max_order; ++n)
        for (const auto& g : corpus(n)) {
            const auto m = find_connected_dominating_matching(g, matching_max_size);
            if (!m)
                continue;
            ++with_matching;
            const auto inner_graph = induced_subgraph(g, g.vertices() - m->covered());
            const int target = (n - 2 * m->size() + 1) / 2;
            const auto r = hadwiger_at_least(inner_graph, target, SearchMode::exact);
            if (r.status != SearchStatus::found)
                continue;
            ++reached;
            try {
                const auto lifted = reduce_and_lift(g, *m, *r.certificate);
                if (verify_certificate(g, lifted) < (n + 1) / 2)
                    o.fail(graph6::encode(g) + ": lifted certificate below ceil(n/2)");
            } catch (const std::exception& e) {
                o.fail(graph6::encode(g) + ": " + e.what());
            }
        }
    if (o.pass)
        o.detail = std::to_string(with_matching) + " graphs with a matching of size <=" +
                   std::to_string(matching_max_size) + ", " + std::to_string(reached) + " reached the target and lifted";
    return o;
}

auto criterion5() -> Outcome
{
    Outcome o;
    std::size_t applicable = 0;
    for (int n = 1; n <= corpus_max_order; ++n) {
        const auto& graphs = corpus(n);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (!seagull_condition(graphs[i]))
                continue;
            ++applicable;
            const auto outcome = i < corpus_verdicts[n].size() ? corpus_verdicts[n][i] : hc_verdict(graphs[i]).outcome;
            if (outcome != Verdict::Outcome::holds)
                o.fail(graph6::encode(graphs[i]) + ": clique bound met but verdict " + to_string(outcome));
        }
    }
    if (o.pass)
        o.detail = std::to_string(applicable) + " graphs meet the clique bound";
    return o;
}

auto criterion6() -> Outcome
{
    Outcome o;
    const std::vector<int> values{6, 9, 14, 18, 23, 28};
    for (int k = 3; k <= 8; ++k)
        if (ramsey::r3_constant(k) != values[k - 3])
            o.fail("R(3," + std::to_string(k) + ") constant");
    if (!ramsey::verify_upper_small(3))
        o.fail("upper bound k=3");
    if (!ramsey::verify_upper_small(4))
        o.fail("upper bound k=4");

    // Independent re-check of the two upper bounds with the oracles.
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << 15); ++code) {
        const auto g = oracle::graph_from_code(6, code);
        if (!oracle::has_triangle(g) && oracle::independence_number(g) < 3) {
            o.fail("oracle: 6-vertex graph without triangle or independent triple");
            break;
        }
    }
    for (const auto& g : generate_triangle_free(9))
        if (oracle::has_triangle(g) || oracle::independence_number(g) < 4)
            o.fail("oracle: 9-vertex triangle-free graph with independence number < 4");

    for (int k = 3; k <= 5; ++k) {
        const auto w = ramsey::verify_lower_witness(k);
        if (w.order() != values[k - 3] - 1 || oracle::has_triangle(w) || oracle::independence_number(w) >= k)
            o.fail("lower witness k=" + std::to_string(k));
    }
    if (ramsey::verify_lower_witness(3) != named::cycle(5))
        o.fail("k=3 witness is not C5");
    if (oracle::independence_number(ramsey::verify_lower_witness(4)) != 3)
        o.fail("k=4 witness does not have independence number 3");
    if (ramsey::verify_lower_witness(5) != named::circulant(13, {1, 5}))
        o.fail("k=5 witness is not the circulant C13(1,5)");
    if (o.pass)
        o.detail = "constants k=3..8, upper k=3 (2^15 graphs), upper k=4 (9-vertex classes), witnesses k=3,4,5";
    return o;
}

auto criterion7() -> Outcome
{
    Outcome o;
    const auto d22 = k8_degree_filter(DegreeProfile{27, 19, 22});
    if (d22.pass || d22.reason != "Δ=22: |N₁|+…+|N₄| ≤ 21 < 22")
        o.fail("Δ=22 profile: " + d22.reason);
    const auto reg = k8_degree_filter(DegreeProfile{27, 21, 21});
    if (reg.pass || reg.reason.rfind("parity", 0) != 0)
        o.fail("21-regular profile: " + reg.reason);
    const auto open = k8_degree_filter(DegreeProfile{27, 19, 20});
    if (!open.pass)
        o.fail("δ=19, Δ=20 rejected: " + open.reason);
    if (o.pass)
        o.detail = "Δ=22 and 21-regular rejected, δ=19/Δ=20 open";
    return o;
}

auto criterion8() -> Outcome
{
    Outcome o;
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<int> order(1, pattern_host_max_order);
    std::uniform_real_distribution<double> density(0.2, 0.95);
    std::size_t found = 0;
    for (int i = 0; i < pattern_random_hosts; ++i) {
        const auto host = oracle::random_graph(rng, order(rng), density(rng));
        for (const auto& p : catalog()) {
            const auto e = contains_induced(host, p);
            const bool want = oracle::has_induced_copy(host, p.graph);
            if (e.has_value() != want)
                o.fail(p.name + " in " + graph6::encode(host) + ": matcher " + (e ? "yes" : "no") + ", oracle " +
                       (want ? "yes" : "no"));
            if (e && !is_induced_embedding(host, p.graph, *e))
                o.fail(p.name + " in " + graph6::encode(host) + ": invalid embedding");
            found += e.has_value();
        }
    }
    const auto k15 = contains_induced(find_pattern("K1_6bar").graph, find_pattern("K1_5bar"));
    if (!k15 || !is_induced_embedding(find_pattern("K1_6bar").graph, find_pattern("K1_5bar").graph, *k15))
        o.fail("K1_5bar not found in K1_6bar");
    const auto k5h = contains_induced(find_pattern("H7").graph, find_pattern("K5plus"));
    if (!k5h || !is_induced_embedding(find_pattern("H7").graph, find_pattern("K5plus").graph, *k5h))
        o.fail("K5plus not found in H7");
    if (o.pass)
        o.detail = std::to_string(pattern_random_hosts) + " hosts x " + std::to_string(catalog().size()) +
                   " patterns (" + std::to_string(found) + " copies), both inclusions confirmed";
    return o;
}

// K6 on 0..5; vertex 6 joined to the first `attach` clique vertices and to vertex 7.
auto crafted_host(int attach) -> Graph
{
    Graph g = disjoint_union(named::complete(6), Graph(2));
    for (int i = 0; i < attach; ++i)
        g.add_edge(6, i);
    g.add_edge(6, 7);
    return g;
}

auto audit_text(const Graph& g) -> std::string
{
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    if (cli::run({"audit", graph6::encode(g)}, in, out, err) != cli::exit_ok)
        return "error: " + err.str();
    return out.str();
}

auto criterion9() -> Outcome
{
    Outcome o;
    const auto& k5plus = find_pattern("K5plus").graph;

    const auto one = crafted_host(1);
    const auto r1 = claims_audit(one);
    const bool predicted_copy = std::any_of(r1.predicted.begin(), r1.predicted.end(), [&](const PredictedCopy& p) {
        VertexSet image;
        for (auto v : p.embedding.image)
            image.insert(v);
        return p.source.rfind("claim1:", 0) == 0 && p.induced && is_induced_embedding(one, k5plus, p.embedding) &&
               oracle::has_induced_copy(induced_subgraph(one, image), k5plus);
    });
    if (!predicted_copy)
        o.fail("|N_F1(t)|=1 host: no induced K5plus predicted");
    if (r1.status != "predicted" || !r1.discrepancies.empty())
        o.fail("|N_F1(t)|=1 host: status " + r1.status);

    const auto two = crafted_host(2);
    const auto r2 = claims_audit(two);
    if (r2.discrepancies.empty() || r2.status != "discrepancy")
        o.fail("|N_F1(t)|=2 host: no discrepancy record");

    for (const auto& g : {one, two}) {
        const auto a = audit_text(g);
        const auto b = audit_text(g);
        const auto c = nlohmann::json(claims_audit(g)).dump() + "\n";
        if (a != b || a != c)
            o.fail("audit output for " + graph6::encode(g) + " is not byte-stable");
    }
    if (o.pass)
        o.detail = "pendant copy predicted for |N|=1; |N|=2 flagged: " + r2.discrepancies.front();
    return o;
}

} // namespace

auto main() -> int
{
    bool all = true;
    auto timed = [&](int id, const std::string& title, auto&& body, double limit = 0.0) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = seconds_since(start);
        if (limit > 0.0 && secs > limit)
            o.fail("took " + std::to_string(secs) + "s, limit " + std::to_string(limit) + "s");
        all = report(id, title, o, secs) && all;
    };

    timed(1, "alpha<=2 corpus n<=10: verdict holds with certificates, two-sided check", criterion1,
          corpus_seconds_limit);
    timed(2, "exact minor search vs partition oracle", criterion2);
    timed(3, "matching colouring equals exact colouring on the corpus", criterion3);
    timed(4, "reduce-and-lift through connected dominating matchings", criterion4);
    timed(5, "clique bound implies the verdict holds", criterion5);
    timed(6, "Ramsey constants, upper bounds and lower witnesses", criterion6, ramsey_seconds_limit);
    timed(7, "K8 degree filter profiles", criterion7);
    timed(8, "induced containment vs injective-map oracle", criterion8);
    timed(9, "separation claims audit on crafted hosts", criterion9);

    std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
    return all ? 0 : 1;
}
