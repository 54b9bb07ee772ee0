#include "minorlab/ramsey.hpp"

#include "minorlab/canonical.hpp"
#include "minorlab/invariants.hpp"

#include <array>
#include <optional>

namespace minorlab::ramsey {

namespace {

constexpr std::array<int, 6> values{6, 9, 14, 18, 23, 28};

void check_k(int k, int lo, int hi, const char* what)
{
    if (k < lo || k > hi)
        throw GraphError(std::string(what) + ": k = " + std::to_string(k) + " outside verified range " +
                         std::to_string(lo) + ".." + std::to_string(hi));
}

auto is_witness(const Graph& g, int k) -> bool
{
    return g.order() == r3_constant(k) - 1 && is_triangle_free(g) && independence_number(g) < k;
}

} // namespace

auto to_string(Verification v) -> std::string_view
{
    switch (v) {
    case Verification::constant_only:
        return "constant-only";
    case Verification::lower_witnessed:
        return "lower-witnessed";
    case Verification::fully_verified:
        return "fully-verified";
    }
    return "?";
}

auto r3_constant(int k) -> int
{
    check_k(k, 3, 8, "r3_constant");
    return values[k - 3];
}

auto fact(int k) -> Fact
{
    Fact f{k, r3_constant(k), Verification::constant_only};
    if (k <= 4)
        f.level = Verification::fully_verified;
    else if (k == 5)
        f.level = Verification::lower_witnessed;
    return f;
}

auto verify_lower_witness(int k) -> Graph
{
    check_k(k, 3, 5, "verify_lower_witness");
    std::optional<Graph> witness;
    if (k == 3) {
        witness = named::cycle(5);
    } else if (k == 4) {
        for_each_triangle_free(8, [&](const Graph& g) {
            if (!witness && independence_number(g) == 3)
                witness = g;
        });
    } else {
        witness = named::circulant(13, {1, 5});
    }
    if (!witness || !is_witness(*witness, k))
        throw std::logic_error("verify_lower_witness: no witness for k = " + std::to_string(k));
    return *witness;
}

auto verify_upper_small(int k) -> bool
{
    check_k(k, 3, 4, "verify_upper_small");
    if (k == 3) {
        constexpr int n = 6;
        std::vector<Edge> pairs;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                pairs.emplace_back(u, v);
        for (std::uint32_t code = 0; code < (1U << pairs.size()); ++code) {
            Graph g(n);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((code >> i) & 1U)
                    g.add_edge(pairs[i].first, pairs[i].second);
            if (is_triangle_free(g) && alpha_at_most_2(g))
                return false;
        }
        return true;
    }
    bool all = true;
    for_each_triangle_free(9, [&](const Graph& g) { all = all && independence_number(g) >= 4; });
    return all;
}

} // namespace minorlab::ramsey
