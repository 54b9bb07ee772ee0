#include "minorlab/cli.hpp"

#include "minorlab/canonical.hpp"
#include "minorlab/graph6.hpp"
#include "minorlab/patterns.hpp"
#include "minorlab/ramsey.hpp"
#include "minorlab/search.hpp"
#include "minorlab/verdict.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace minorlab::cli {

namespace {

constexpr std::size_t chunk_size = 64;

auto default_jobs() -> int
{
    if (const char* env = std::getenv("MINORLAB_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

struct CheckArgs {
    std::string g6;
    bool json = false;
    int exact_cap = 14;
    std::uint64_t budget = 0;
};

auto run_check(const CheckArgs& a, std::ostream& out) -> int
{
    const auto g = graph6::decode(a.g6);
    VerdictOptions opts;
    opts.minor.exact_cap = a.exact_cap;
    opts.minor.node_budget = a.budget;
    const auto v = hc_verdict(g, opts);

    std::optional<int> h_exact;
    if (g.order() <= a.exact_cap && v.outcome != Verdict::Outcome::unknown)
        h_exact = hadwiger_number(g, opts.minor).value;
    const int chi = v.colouring ? v.colouring->count : 0;

    if (a.json) {
        nlohmann::json j{{"g6", a.g6}, {"n", g.order()}, {"verdict", to_string(v.outcome)}, {"chi", chi}};
        if (h_exact)
            j["h"] = *h_exact;
        if (v.minor)
            j["h_cert"] = *v.minor;
        if (!v.reason.empty())
            j["reason"] = v.reason;
        out << j.dump() << '\n';
    } else {
        out << "verdict: " << to_string(v.outcome) << '\n' << "chi: " << chi << '\n';
        if (h_exact)
            out << "h: " << *h_exact << '\n';
        else if (v.minor)
            out << "h: >=" << v.minor->size() << '\n';
        if (v.minor)
            out << "certificate: " << nlohmann::json(*v.minor).dump() << '\n';
        if (!v.reason.empty())
            out << "reason: " << v.reason << '\n';
    }
    return v.outcome == Verdict::Outcome::counterexample ? exit_counterexample : exit_ok;
}

struct SearchArgs {
    std::string input = "-";
    std::string filters;
    bool filters_given = false;
    bool filters_only = false;
    int exact_cap = 14;
    std::uint64_t budget = 0;
    int jobs = 0;
    std::string cursor;
};

auto read_cursor(const std::string& path) -> std::size_t
{
    std::ifstream in(path);
    std::size_t next = 0;
    if (in && !(in >> next))
        throw std::runtime_error("unreadable cursor file: " + path);
    return next;
}

auto run_search(const SearchArgs& a, std::istream& in, std::ostream& out, std::ostream& err) -> int
{
    SearchConfig cfg;
    if (!a.filters_given)
        cfg.filters = FilterConfig::defaults();
    else if (a.filters != "none")
        cfg.filters = FilterConfig::parse(a.filters);
    cfg.run_verdict = !a.filters_only;
    cfg.verdict.minor.exact_cap = a.exact_cap;
    cfg.verdict.minor.node_budget = a.budget;
    cfg.jobs = a.jobs > 0 ? a.jobs : default_jobs();

    std::vector<graph6::Line> lines;
    {
        std::ifstream file;
        std::istream* source = &in;
        if (a.input != "-") {
            file.open(a.input);
            if (!file)
                throw std::runtime_error("cannot open input file: " + a.input);
            source = &file;
        }
        graph6::Reader reader(*source);
        graph6::Line line;
        while (reader.next(line))
            lines.push_back(line);
    }

    std::size_t start = a.cursor.empty() ? 0 : read_cursor(a.cursor);
    SearchReport total;
    for (std::size_t begin = std::min(start, lines.size()); begin < lines.size(); begin += chunk_size) {
        const auto end = std::min(lines.size(), begin + chunk_size);
        const std::vector<graph6::Line> chunk(lines.begin() + static_cast<std::ptrdiff_t>(begin),
                                              lines.begin() + static_cast<std::ptrdiff_t>(end));
        auto report = search_corpus(chunk, cfg);
        for (const auto& r : report.records)
            out << nlohmann::json(r).dump() << '\n';
        out.flush();

        for (auto& [name, count] : report.rejections)
            total.rejections[name] += count;
        total.survivors.insert(total.survivors.end(), report.survivors.begin(), report.survivors.end());
        total.parse_errors += report.parse_errors;
        total.holds += report.holds;
        total.counterexamples += report.counterexamples;
        total.unknown += report.unknown;
        total.records.insert(total.records.end(), std::make_move_iterator(report.records.begin()),
                             std::make_move_iterator(report.records.end()));
        if (!a.cursor.empty()) {
            std::ofstream cursor(a.cursor, std::ios::trunc);
            cursor << end << '\n';
        }
    }
    err << summary_json(total).dump() << '\n';
    return total.counterexamples > 0 ? exit_counterexample : exit_ok;
}

auto run_gen(int n, bool complemented, std::ostream& out) -> int
{
    for_each_triangle_free(n, [&](const Graph& g) { out << graph6::encode(complemented ? complement(g) : g) << '\n'; });
    return exit_ok;
}

auto run_ramsey(int k, const std::string& mode, std::ostream& out) -> int
{
    if (mode == "const") {
        const auto f = ramsey::fact(k);
        out << "R(3," << k << ")=" << f.value << " " << ramsey::to_string(f.level) << '\n';
        return exit_ok;
    }
    if (mode == "lower") {
        const auto g = ramsey::verify_lower_witness(k);
        out << "verified " << graph6::encode(g) << '\n';
        return exit_ok;
    }
    const bool ok = ramsey::verify_upper_small(k);
    out << (ok ? "verified" : "refuted") << '\n';
    return ok ? exit_ok : exit_counterexample;
}

auto run_catalog(const std::string& emit, std::ostream& out) -> int
{
    for (const auto& p : catalog()) {
        if (emit == "g6")
            out << p.name << '\t' << graph6::encode(p.graph) << '\n';
        else
            out << p.name << '\t' << p.graph.order() << " vertices, " << p.graph.edge_count() << " edges\t"
                << p.provenance << '\n';
    }
    return exit_ok;
}

auto run_audit(const std::string& g6, std::ostream& out) -> int
{
    const auto report = claims_audit(graph6::decode(g6));
    out << nlohmann::json(report).dump() << '\n';
    return exit_ok;
}

} // namespace

auto run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) -> int
{
    CLI::App app{"Machine checks for Hadwiger's conjecture on graphs with independence number at most two", "minorlab"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Verdict for one graph6 graph");
    check_cmd->add_option("g6", check.g6, "graph6 string")->required();
    check_cmd->add_flag("--json", check.json, "Emit one JSON record");
    check_cmd->add_option("--exact-cap", check.exact_cap, "Largest order for exact minor search");
    check_cmd->add_option("--budget", check.budget, "Node budget for exact search (0 = unlimited)");

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "Filter and check a graph6 corpus, JSONL to stdout");
    search_cmd->add_option("--input", search.input, "graph6 file, '-' for stdin");
    auto* filters_opt = search_cmd->add_option("--filters", search.filters, "Comma-separated filters or 'none'");
    search_cmd->add_flag("--filters-only", search.filters_only, "Skip the minor-search verdict");
    search_cmd->add_option("--exact-cap", search.exact_cap, "Largest order for exact minor search");
    search_cmd->add_option("--budget", search.budget, "Node budget per exact search (0 = unlimited)");
    search_cmd->add_option("--jobs", search.jobs, "Worker threads (default: MINORLAB_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--cursor", search.cursor, "Resume file holding the next line index");

    int gen_n = 0;
    bool gen_complement = false;
    auto* gen_cmd = app.add_subcommand("gen-tf", "Triangle-free graphs up to isomorphism, as graph6");
    gen_cmd->add_option("-n", gen_n, "Order (1..10)")->required();
    gen_cmd->add_flag("--complement", gen_complement, "Emit complements (the alpha <= 2 corpus)");

    int ramsey_k = 0;
    std::string ramsey_mode;
    auto* ramsey_cmd = app.add_subcommand("ramsey", "Ramsey constants R(3,k) and their checks");
    ramsey_cmd->add_option("--k", ramsey_k, "k")->required();
    ramsey_cmd->add_option("--mode", ramsey_mode, "lower | upper | const")
        ->required()
        ->check(CLI::IsMember({"lower", "upper", "const"}));

    std::string emit = "text";
    auto* catalog_cmd = app.add_subcommand("catalog", "List the pattern catalog");
    catalog_cmd->add_option("--emit", emit, "text | g6")->check(CLI::IsMember({"text", "g6"}));

    std::string audit_g6;
    auto* audit_cmd = app.add_subcommand("audit", "Separation claims audit for one graph6 graph");
    audit_cmd->add_option("g6", audit_g6, "graph6 string")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_error;
    }

    try {
        if (check_cmd->parsed())
            return run_check(check, out);
        if (search_cmd->parsed()) {
            search.filters_given = filters_opt->count() > 0;
            return run_search(search, in, out, err);
        }
        if (gen_cmd->parsed())
            return run_gen(gen_n, gen_complement, out);
        if (ramsey_cmd->parsed())
            return run_ramsey(ramsey_k, ramsey_mode, out);
        if (catalog_cmd->parsed())
            return run_catalog(emit, out);
        if (audit_cmd->parsed())
            return run_audit(audit_g6, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

} // namespace minorlab::cli
