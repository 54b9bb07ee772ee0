#include "minorlab/graph6.hpp"

namespace minorlab::graph6 {

namespace {

constexpr int offset = 63;
constexpr int short_form_limit = 62;

auto triangle_bits(int n) -> std::size_t { return static_cast<std::size_t>(n) * (n - 1) / 2; }

} // namespace

auto decode(std::string_view text) -> Graph
{
    if (text.empty())
        throw ParseError("graph6: empty line");
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte " + std::to_string(c) + " at position " + std::to_string(i) +
                             " outside 63..126");
    }
    if (text[0] == '~')
        throw ParseError("graph6: long-form header (order > 62) is not supported");

    const int n = text[0] - offset;
    const std::size_t bits = triangle_bits(n);
    const std::size_t groups = (bits + 5) / 6;
    if (text.size() != 1 + groups)
        throw ParseError("graph6: expected " + std::to_string(1 + groups) + " bytes for order " +
                         std::to_string(n) + ", got " + std::to_string(text.size()));

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int group = text[1 + k / 6] - offset;
            if ((group >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    for (; k < groups * 6; ++k) {
        const int group = text[1 + k / 6] - offset;
        if ((group >> (5 - k % 6)) & 1)
            throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

auto encode(const Graph& g) -> std::string
{
    const int n = g.order();
    if (n > short_form_limit)
        throw GraphError("graph6: order " + std::to_string(n) + " needs long form, which is not supported");
    const std::size_t bits = triangle_bits(n);
    std::string out(1 + (bits + 5) / 6, static_cast<char>(offset));
    out[0] = static_cast<char>(offset + n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j))
                out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    return out;
}

auto Reader::next(Line& out) -> bool
{
    std::string line;
    while (std::getline(in_, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        out.seq = seq_++;
        out.text = std::move(line);
        return true;
    }
    return false;
}

} // namespace minorlab::graph6
