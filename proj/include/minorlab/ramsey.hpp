#pragma once

#include "minorlab/graph.hpp"

#include <string_view>

namespace minorlab::ramsey {

enum class Verification { constant_only, lower_witnessed, fully_verified };

struct Fact {
    int k = 0;
    int value = 0; // R(3, k)
    Verification level = Verification::constant_only;
};

[[nodiscard]] auto to_string(Verification v) -> std::string_view;

/// R(3,k) for 3 <= k <= 8: 6, 9, 14, 18, 23, 28.
[[nodiscard]] auto r3_constant(int k) -> int;

/// The constant together with how much of it this library checks by machine.
[[nodiscard]] auto fact(int k) -> Fact;

/// A triangle-free graph on R(3,k)-1 vertices with independence number below k,
/// re-verified before it is returned. k in {3, 4, 5}.
[[nodiscard]] auto verify_lower_witness(int k) -> Graph;

/// k = 3: every graph on 6 vertices has a triangle or an independent triple.
/// k = 4: every triangle-free graph on 9 vertices has independence number >= 4.
[[nodiscard]] auto verify_upper_small(int k) -> bool;

} // namespace minorlab::ramsey
