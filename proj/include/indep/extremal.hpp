#pragma once

#include <optional>
#include <vector>

#include "indep/dag.hpp"
#include "indep/pairs.hpp"
#include "indep/poset.hpp"

namespace indep {

enum class Side { left, right };

/// Polar of s in the Galois connection "no edge x -> y, x != y".
/// right: largest Y disjoint from s with no edge s -> Y.
/// left:  largest X disjoint from s with no edge X -> s.
VertexSet closure(const Dag& d, VertexSet s, Side side);

/// All maximal orthogonal pairs, sorted by X as a bitset. Enumerated as the
/// closed sets of X -> left(right(X)) with Ganter's NextClosure. Throws
/// TooLarge above 25 vertices.
std::vector<Mop> enumerate_mops(const Dag& d);

/// Join intersects the Y sides, meet intersects the X sides.
Mop mop_join(const Dag& d, const Mop& a, const Mop& b);
Mop mop_meet(const Dag& d, const Mop& a, const Mop& b);

/// The lattice L(G) of mops ordered by inclusion of X, with Mop payloads.
Poset mop_lattice(const Dag& d);

/// Longest chain equals the number of join- and of meet-irreducibles.
/// Throws NotLattice.
bool is_extremal(const Poset& p);

/// Join- and meet-irreducible attached to each vertex of the Galois graph.
/// Vertex i is the i-th step of the spine chain used to build the pairing.
struct IrreduciblePairing {
    std::vector<int> join;   // j_i
    std::vector<int> meet;   // m_i
    std::vector<int> chain;  // x_0 < ... < x_n
    int size() const { return static_cast<int>(join.size()); }
};

/// Pairing read off a maximum-length chain. Throws NotExtremalLattice or
/// AmbiguousPairing.
IrreduciblePairing irreducible_pairing(const Poset& p);
IrreduciblePairing pairing_from_chain(const Poset& p, const std::vector<int>& chain);

/// Every chain from minimum to maximum of maximum length, up to `limit` chains.
std::vector<std::vector<int>> maximum_length_chains(const Poset& p, std::size_t limit = 10000);

struct TrimCheck {
    bool extremal = false;
    bool overlapping = false;          // every cover overlaps under the pairing
    bool left_modular_chain = false;   // a maximal chain of left-modular elements
};

/// Both trimness criteria. Throws NotLattice.
TrimCheck trim_check(const Poset& p);

/// Extremal with every cover overlapping. The left-modular criterion is
/// evaluated as well; disagreement raises std::logic_error. Throws NotLattice.
bool is_trim(const Poset& p);

/// Left-modular elements of a lattice, in index order.
std::vector<int> left_modular_elements(const Poset& p, const LatticeTables& tables);

struct CoverLabels {
    IrreduciblePairing pairing;
    std::vector<Top> labels;  // per element: (downward labels, upward labels)
};

/// Downward and upward overlap labels of every element. Throws NotTrim.
CoverLabels cover_labels(const Poset& p);

/// Galois graph: vertex i per irreducible pair, edge i -> k iff j_i is not
/// below m_k. Throws NotExtremalLattice, CycleDetected.
Dag galois_graph(const Poset& p);

/// Greedy restriction of a mop to a top. Assumes L(d) is trim.
Top phi_greedy(const Dag& d, const Mop& m);
/// Same map, after checking that L(d) is trim. Throws NotTrim.
Top phi(const Dag& d, const Mop& m);

enum class ThetaOrder {
    theta1_first,  // theta2 after theta1
    theta2_first,  // theta1 after theta2
};

/// Extension of a top to a mop.
Mop theta(const Dag& d, const Top& t, ThetaOrder order);

struct FiveSetWitness {
    VertexSet x1, x2, x3, x4, z;
    friend bool operator==(const FiveSetWitness&, const FiveSetWitness&) = default;
};

inline constexpr int kMaxFiveSetVertices = 12;

/// First partition (vertices in id order, blocks tried X1, X2, X3, X4, Z)
/// obstructing the lattice property, if any. Throws TooLarge above 12 vertices.
std::optional<FiveSetWitness> five_set_witness(const Dag& d);

/// Checks conditions (i)-(v) and that the blocks partition the vertex set.
bool satisfies_five_set(const Dag& d, const FiveSetWitness& w);

}  // namespace indep
