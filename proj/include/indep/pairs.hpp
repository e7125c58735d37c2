#pragma once

#include <compare>

#include "indep/vertex_set.hpp"

namespace indep {

/// Tight orthogonal pair (D, U) of independent sets.
struct Top {
    VertexSet down;  // D
    VertexSet up;    // U

    friend constexpr bool operator==(const Top&, const Top&) = default;
    friend constexpr auto operator<=>(const Top&, const Top&) = default;
};

/// Maximal orthogonal pair (X, Y).
struct Mop {
    VertexSet x;
    VertexSet y;

    friend constexpr bool operator==(const Mop&, const Mop&) = default;
    friend constexpr auto operator<=>(const Mop&, const Mop&) = default;
};

}  // namespace indep
