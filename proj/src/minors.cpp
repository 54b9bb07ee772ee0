#include "minorlab/minors.hpp"

#include "minorlab/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace minorlab {

auto verify_certificate(const Graph& g, const MinorCertificate& c) -> int
{
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
        const auto s = c.sets[i];
        if ((s.mask() & ~g.vertices().mask()) != 0)
            throw CertificateError(CertificateFault::vertex_out_of_range,
                                   "branch set " + std::to_string(i) + " names a vertex outside the graph");
        if ((s.mask() & used) != 0)
            throw CertificateError(CertificateFault::overlap, "branch set " + std::to_string(i) + " overlaps an earlier set");
        used |= s.mask();
        if (!g.is_connected(s))
            throw CertificateError(CertificateFault::disconnected_set,
                                   "branch set " + std::to_string(i) + " is empty or disconnected");
    }
    for (std::size_t i = 0; i < c.sets.size(); ++i)
        for (std::size_t j = i + 1; j < c.sets.size(); ++j)
            if ((g.neighbourhood(c.sets[i]) & c.sets[j]).empty())
                throw CertificateError(CertificateFault::missing_cross_edge, "branch sets " + std::to_string(i) + " and " +
                                                                                std::to_string(j) + " are not adjacent");
    return c.size();
}

namespace {

auto singleton_certificate(VertexSet clique) -> MinorCertificate
{
    MinorCertificate c;
    for (auto v : clique.to_vector())
        c.sets.push_back(VertexSet{bit(v)});
    return c;
}

struct ConnectedSet {
    std::uint64_t mask;
    std::uint64_t neighbours;
};

// Exact K_t search over families of connected sets listed in increasing order of
// least vertex. Each vertex is, in turn, the least member of the next set, or is
// skipped for good; sets with more than two vertices are tried after the small ones.
class ExactMinorSearch {
public:
    explicit ExactMinorSearch(const Graph& g) : g_(g), n_(g.order()), by_least_(n_)
    {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n_); ++mask) {
            const VertexSet s{mask};
            if (g.is_connected(s))
                by_least_[s.first()].push_back({mask, g.neighbourhood(s).mask()});
        }
        for (auto& list : by_least_)
            std::stable_sort(list.begin(), list.end(), [](const ConnectedSet& a, const ConnectedSet& b) {
                return std::popcount(a.mask) < std::popcount(b.mask);
            });
    }

    auto run(int t, std::uint64_t budget) -> MinorSearchResult
    {
        target_ = t;
        budget_ = budget;
        nodes_ = 0;
        aborted_ = false;
        chosen_.clear();
        MinorSearchResult out;
        if (descend(0, 0)) {
            out.status = SearchStatus::found;
            MinorCertificate c;
            for (const auto& s : chosen_)
                c.sets.push_back(VertexSet{s.mask});
            out.certificate = std::move(c);
        } else {
            out.status = aborted_ ? SearchStatus::unknown : SearchStatus::exhausted;
        }
        out.nodes = nodes_;
        return out;
    }

private:
    auto descend(std::uint64_t used, int floor) -> bool
    {
        if (budget_ != 0 && ++nodes_ > budget_) {
            aborted_ = true;
            return false;
        }
        if (budget_ == 0)
            ++nodes_;
        const int depth = static_cast<int>(chosen_.size());
        if (depth >= target_)
            return true;

        const std::uint64_t available = low_mask(n_) & ~used & ~low_mask(floor);
        if (depth + std::popcount(available) < target_)
            return false;
        for (const auto& c : chosen_)
            if ((c.neighbours & available) == 0)
                return false;

        for (int v = floor; v < n_; ++v) {
            if (((available >> v) & 1U) == 0)
                continue;
            if (depth + std::popcount(available & ~low_mask(v)) < target_)
                break;
            for (const auto& s : by_least_[v]) {
                if ((s.mask & ~available) != 0)
                    continue;
                bool touches_all = true;
                for (const auto& c : chosen_)
                    if ((s.neighbours & c.mask) == 0) {
                        touches_all = false;
                        break;
                    }
                if (!touches_all)
                    continue;
                chosen_.push_back(s);
                if (descend(used | s.mask, v + 1))
                    return true;
                chosen_.pop_back();
                if (aborted_)
                    return false;
            }
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<ConnectedSet>> by_least_;
    std::vector<ConnectedSet> chosen_;
    int target_ = 0;
    std::uint64_t budget_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

// Greedy family of small branch sets over a vertex order, with a pair-swap repair.
class GreedyFamily {
public:
    explicit GreedyFamily(const Graph& g) : g_(g) {}

    void build(const std::vector<Vertex>& order)
    {
        sets_.clear();
        used_ = 0;
        for (auto v : order)
            if (!is_used(v) && fits(bit(v), -1))
                add(bit(v));
        add_pairs(order);
        grow_larger(order);
    }

    // Swap one vertex of a two-vertex set for an unused vertex when the freed
    // vertex can then start a new set.
    auto repair(const std::vector<Vertex>& order) -> bool
    {
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            if (std::popcount(sets_[i]) != 2)
                continue;
            const Vertex a = std::countr_zero(sets_[i]);
            const Vertex b = 63 - std::countl_zero(sets_[i]);
            for (auto u : order) {
                if (is_used(u))
                    continue;
                for (auto [keep, freed] : {std::pair{a, b}, std::pair{b, a}}) {
                    if (!g_.adjacent(keep, u))
                        continue;
                    const std::uint64_t replacement = bit(keep) | bit(u);
                    if (!fits(replacement, static_cast<int>(i)))
                        continue;
                    const auto saved = sets_;
                    const auto saved_used = used_;
                    used_ = (used_ & ~sets_[i]) | replacement;
                    sets_[i] = replacement;
                    const auto before = sets_.size();
                    std::vector<Vertex> retry{freed};
                    retry.insert(retry.end(), order.begin(), order.end());
                    add_pairs(retry);
                    if (sets_.size() == before) {
                        for (auto v : retry)
                            if (!is_used(v) && fits(bit(v), -1))
                                add(bit(v));
                    }
                    if (sets_.size() > before)
                        return true;
                    sets_ = saved;
                    used_ = saved_used;
                }
            }
        }
        return false;
    }

    [[nodiscard]] auto size() const -> int { return static_cast<int>(sets_.size()); }

    [[nodiscard]] auto certificate() const -> MinorCertificate
    {
        MinorCertificate c;
        for (auto s : sets_)
            c.sets.push_back(VertexSet{s});
        return c;
    }

private:
    [[nodiscard]] auto is_used(Vertex v) const -> bool { return (used_ >> v) & 1U; }

    [[nodiscard]] auto fits(std::uint64_t s, int skip) const -> bool
    {
        const auto nbrs = g_.neighbourhood(VertexSet{s}).mask();
        for (std::size_t i = 0; i < sets_.size(); ++i)
            if (static_cast<int>(i) != skip && (nbrs & sets_[i]) == 0)
                return false;
        return true;
    }

    void add(std::uint64_t s)
    {
        sets_.push_back(s);
        used_ |= s;
    }

    void add_pairs(const std::vector<Vertex>& order)
    {
        for (auto v : order) {
            if (is_used(v))
                continue;
            for (auto w : order) {
                if (w == v || is_used(w) || !g_.adjacent(v, w))
                    continue;
                if (fits(bit(v) | bit(w), -1)) {
                    add(bit(v) | bit(w));
                    break;
                }
            }
        }
    }

    void grow_larger(const std::vector<Vertex>& order)
    {
        for (auto v : order) {
            if (is_used(v))
                continue;
            std::uint64_t s = bit(v);
            while (true) {
                const auto nbrs = g_.neighbourhood(VertexSet{s}).mask();
                std::vector<std::size_t> missing;
                for (std::size_t i = 0; i < sets_.size(); ++i)
                    if ((nbrs & sets_[i]) == 0)
                        missing.push_back(i);
                if (missing.empty()) {
                    add(s);
                    break;
                }
                Vertex pick = -1;
                int pick_gain = 0;
                for (auto u : order) {
                    if (is_used(u) || ((s >> u) & 1U) || ((nbrs >> u) & 1U) == 0)
                        continue;
                    int gain = 0;
                    for (auto i : missing)
                        if ((g_.row(u) & sets_[i]) != 0)
                            ++gain;
                    if (gain > pick_gain) {
                        pick = u;
                        pick_gain = gain;
                    }
                }
                if (pick < 0)
                    break;
                s |= bit(pick);
            }
        }
    }

    const Graph& g_;
    std::vector<std::uint64_t> sets_;
    std::uint64_t used_ = 0;
};

auto heuristic_search(const Graph& g, int t, const MinorSearchOptions& opts) -> MinorSearchResult
{
    const int n = g.order();
    const int restarts = opts.restarts > 0 ? opts.restarts : std::max(1, 10 * n);
    std::mt19937_64 rng(opts.seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);

    MinorSearchResult out;
    GreedyFamily family(g);
    for (int r = 0; r < restarts; ++r) {
        if (r > 0)
            std::shuffle(order.begin(), order.end(), rng);
        family.build(order);
        for (int pass = 0; family.size() < t && pass < n && family.repair(order); ++pass) {
        }
        ++out.nodes;
        if (family.size() >= t) {
            out.status = SearchStatus::found;
            out.certificate = family.certificate();
            return out;
        }
    }
    return out;
}

} // namespace

auto hadwiger_at_least(const Graph& g, int t, SearchMode mode, const MinorSearchOptions& opts) -> MinorSearchResult
{
    const int n = g.order();
    if (t > n)
        throw GraphError("hadwiger_at_least: t = " + std::to_string(t) + " exceeds order " + std::to_string(n));
    if (mode == SearchMode::exact && n > opts.exact_cap)
        throw GraphError("hadwiger_at_least: exact mode limited to order " + std::to_string(opts.exact_cap));
    if (t <= 0)
        return {SearchStatus::found, MinorCertificate{}, 0};

    // A clique of size t is already a certificate.
    const auto clique = max_clique(g);
    if (clique.size() >= t) {
        auto c = singleton_certificate(clique);
        c.sets.resize(t);
        return {SearchStatus::found, std::move(c), 0};
    }
    if (mode == SearchMode::heuristic)
        return heuristic_search(g, t, opts);
    ExactMinorSearch search(g);
    return search.run(t, opts.node_budget);
}

auto hadwiger_number(const Graph& g, const MinorSearchOptions& opts) -> HadwigerNumber
{
    const int n = g.order();
    if (n > opts.exact_cap)
        throw GraphError("hadwiger_number: order " + std::to_string(n) + " exceeds exact cap " +
                         std::to_string(opts.exact_cap));
    HadwigerNumber out;
    if (n == 0)
        return out;
    const auto clique = max_clique(g);
    out.value = clique.size();
    out.certificate = singleton_certificate(clique);

    ExactMinorSearch search(g);
    for (int t = out.value + 1; t <= n; ++t) {
        auto r = search.run(t, opts.node_budget);
        if (r.status == SearchStatus::unknown)
            throw std::runtime_error("hadwiger_number: node budget exhausted at t = " + std::to_string(t));
        if (r.status == SearchStatus::exhausted)
            break;
        out.value = t;
        out.certificate = std::move(*r.certificate);
    }
    return out;
}

auto DominatingMatching::covered() const -> VertexSet
{
    std::uint64_t m = 0;
    for (auto [u, v] : edges)
        m |= bit(u) | bit(v);
    return VertexSet{m};
}

namespace {

auto edge_mask(Edge e) -> std::uint64_t { return bit(e.first) | bit(e.second); }

auto edges_touch(const Graph& g, Edge a, Edge b) -> bool
{
    return ((g.row(a.first) | g.row(a.second)) & edge_mask(b)) != 0;
}

auto dominates(const Graph& g, Edge e, std::uint64_t outside) -> bool
{
    return ((g.row(e.first) | g.row(e.second)) & outside) == outside;
}

class MatchingScan {
public:
    MatchingScan(const Graph& g, int size) : g_(g), edges_(g.edges()), size_(size) {}

    auto run() -> std::optional<DominatingMatching>
    {
        if (pick(0, 0))
            return DominatingMatching{chosen_};
        return std::nullopt;
    }

private:
    auto pick(std::size_t from, std::uint64_t covered) -> bool
    {
        if (static_cast<int>(chosen_.size()) == size_) {
            const std::uint64_t outside = g_.vertices().mask() & ~covered;
            for (auto e : chosen_)
                if (!dominates(g_, e, outside))
                    return false;
            return true;
        }
        for (std::size_t i = from; i < edges_.size(); ++i) {
            const auto e = edges_[i];
            if ((edge_mask(e) & covered) != 0)
                continue;
            bool touches = true;
            for (auto c : chosen_)
                touches = touches && edges_touch(g_, c, e);
            if (!touches)
                continue;
            chosen_.push_back(e);
            if (pick(i + 1, covered | edge_mask(e)))
                return true;
            chosen_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    std::vector<Edge> edges_;
    int size_;
    std::vector<Edge> chosen_;
};

} // namespace

auto is_connected_dominating_matching(const Graph& g, const DominatingMatching& m) -> bool
{
    std::uint64_t covered = 0;
    for (auto e : m.edges) {
        auto [u, v] = e;
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
            return false;
        if ((covered & edge_mask(e)) != 0)
            return false;
        covered |= edge_mask(e);
    }
    for (std::size_t i = 0; i < m.edges.size(); ++i)
        for (std::size_t j = i + 1; j < m.edges.size(); ++j)
            if (!edges_touch(g, m.edges[i], m.edges[j]))
                return false;
    const std::uint64_t outside = g.vertices().mask() & ~covered;
    return std::all_of(m.edges.begin(), m.edges.end(), [&](Edge e) { return dominates(g, e, outside); });
}

auto find_connected_dominating_matching(const Graph& g, int max_size) -> std::optional<DominatingMatching>
{
    for (int size = 1; size <= max_size && 2 * size <= g.order(); ++size) {
        MatchingScan scan(g, size);
        if (auto m = scan.run())
            return m;
    }
    return std::nullopt;
}

auto reduce_by_matching(const Graph& g, const DominatingMatching& m) -> MatchingReduction
{
    std::vector<Vertex> partner(g.order(), -1);
    for (auto [u, v] : m.edges) {
        partner[u] = v;
        partner[v] = u;
    }
    MatchingReduction out{m, Graph{}, {}};
    std::vector<int> group(g.order(), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (group[v] != -1)
            continue;
        group[v] = static_cast<int>(out.origin.size());
        VertexSet s{bit(v)};
        if (partner[v] != -1) {
            group[partner[v]] = group[v];
            s.insert(partner[v]);
        }
        out.origin.push_back(s);
    }
    out.reduced = Graph(static_cast<int>(out.origin.size()));
    for (auto [u, v] : g.edges())
        if (group[u] != group[v] && !out.reduced.adjacent(group[u], group[v]))
            out.reduced.add_edge(group[u], group[v]);
    return out;
}

auto reduce_and_lift(const Graph& g, const DominatingMatching& m, const MinorCertificate& inner) -> MinorCertificate
{
    if (!is_connected_dominating_matching(g, m))
        throw GraphError("reduce_and_lift: matching is not a connected dominating matching");
    const auto outside = g.vertices() - m.covered();
    verify_certificate(induced_subgraph(g, outside), inner);

    const auto ids = outside.to_vector();
    MinorCertificate out;
    for (auto e : m.edges)
        out.sets.push_back(VertexSet{edge_mask(e)});
    for (auto s : inner.sets) {
        VertexSet lifted;
        for_each_bit(s.mask(), [&](Vertex v) { lifted.insert(ids[v]); });
        out.sets.push_back(lifted);
    }
    verify_certificate(g, out);
    return out;
}

void to_json(nlohmann::json& j, const MinorCertificate& c)
{
    auto sets = nlohmann::json::array();
    for (auto s : c.sets)
        sets.push_back(s.to_vector());
    j = nlohmann::json{{"sets", std::move(sets)}};
}

void from_json(const nlohmann::json& j, MinorCertificate& c)
{
    c.sets.clear();
    for (const auto& s : j.at("sets")) {
        VertexSet set;
        for (const auto& v : s) {
            const int id = v.get<int>();
            if (id < 0 || id >= max_order)
                throw GraphError("certificate vertex id out of range: " + std::to_string(id));
            set.insert(id);
        }
        c.sets.push_back(set);
    }
}

} // namespace minorlab
