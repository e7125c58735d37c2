#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indep/dag.hpp"
#include "indep/pairs.hpp"

namespace indep {

/// No D -> U edge and D, U disjoint. Throws NotIndependent if either set is
/// not independent.
bool is_orthogonal(const Dag& d, VertexSet down, VertexSet up);

/// One way a pair fails to be tight: which move succeeds.
struct TightnessViolation {
    enum class Move { add_to_down, add_to_up, increase_down, decrease_up };
    Move move;
    Vertex removed = -1;  // element replaced, for increase/decrease
    Vertex inserted = -1;

    std::string describe(const Dag& d) const;
};

/// First successful single-element perturbation, scanning moves in the order
/// add-to-D, add-to-U, increase, decrease. Throws NotOrthogonal (or
/// NotIndependent) if the pair is not an orthogonal pair.
std::optional<TightnessViolation> tightness_violation(const Dag& d, VertexSet down, VertexSet up);

bool is_tight(const Dag& d, VertexSet down, VertexSet up);
inline bool is_top(const Dag& d, const Top& t) {
    return d.is_independent(t.down) && d.is_independent(t.up) && is_orthogonal(d, t.down, t.up) &&
           is_tight(d, t.down, t.up);
}

/// The unique top (D, I), built greedily over the reverse linear extension.
Top complete_down(const Dag& d, VertexSet independent);
/// The unique top (I, U), built greedily over the linear extension.
Top complete_up(const Dag& d, VertexSet independent);

/// Bottom element (empty D) and top element (empty U) of top(G).
inline Top bottom_top(const Dag& d) { return complete_up(d, {}); }
inline Top top_top(const Dag& d) { return complete_down(d, {}); }

/// flip_g using the canonical extensions of d.
Top flip(const Dag& d, const Top& t, Vertex g);
/// flip_g using caller-supplied linear extension `ell` and reverse linear
/// extension `ell_rev`.
Top flip(const Dag& d, const Top& t, Vertex g, const VertexSeq& ell, const VertexSeq& ell_rev);

struct FlipTreeEdge {
    int parent;
    int child;
    Vertex vertex;
};

struct FlipTree {
    std::vector<Top> tops;  // depth-first order, tops[0] is the bottom
    std::vector<FlipTreeEdge> edges;
};

/// Spanning tree of top(G) obtained by flipping upward in increasing order of
/// the canonical linear extension.
FlipTree flip_tree(const Dag& d);
std::vector<Top> enumerate_tops(const Dag& d);

/// The bijection top(d) -> top(toggle_graph(d, g)). Throws NotExtremal.
Top toggle_top(const Dag& d, const Top& t, Vertex g);

/// Toggle of an independent set at g. Throws NotIndependent.
VertexSet toggle_indep(const Dag& d, VertexSet independent, Vertex g);

enum class RowMethod { global, slow, deform };

Top row(const Dag& d, const Top& t, RowMethod method = RowMethod::global);

struct RowOrbit {
    std::vector<Top> tops;
    int length() const { return static_cast<int>(tops.size()); }
};

/// Orbit decomposition of rowmotion; orbits are listed by their first element
/// in enumeration order, so the orbit of the bottom element comes first.
std::vector<RowOrbit> row_orbits(const Dag& d);

/// Pair swap (D, U) -> (U, D).
inline Top swap_sides(const Top& t) { return Top{t.up, t.down}; }

}  // namespace indep
