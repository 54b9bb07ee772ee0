#pragma once

#include "minorlab/graph.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <variant>

namespace minorlab::graph6 {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decode a short-form graph6 line (no trailing newline). Long form is rejected.
[[nodiscard]] auto decode(std::string_view text) -> Graph;

/// Encode to short-form graph6; requires order <= 62.
[[nodiscard]] auto encode(const Graph& g) -> std::string;

/// One input line of a graph6 file after comment skipping.
struct Line {
    std::size_t seq = 0; // 0-based index among non-comment lines
    std::string text;
};

/// Reads graph6 files line by line, skipping '#' comments and blank lines.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    /// Next data line, or false at end of input.
    auto next(Line& out) -> bool;

private:
    std::istream& in_;
    std::size_t seq_ = 0;
};

} // namespace minorlab::graph6
