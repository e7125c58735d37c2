#pragma once

#include <string>
#include <utility>
#include <vector>

#include "indep/error.hpp"
#include "indep/vertex_set.hpp"

namespace indep {

using Edge = std::pair<Vertex, Vertex>;

/// Permutation of vertex ids.
using VertexSeq = std::vector<Vertex>;

enum class TieBreak { smallest_id, largest_id };

/// Finite acyclic directed graph. An edge g -> h means g > h in G-order.
///
/// Immutable after construction. Reachability (the G-order), adjacency and the
/// canonical linear extensions are computed once by the constructor.
class Dag {
public:
    Dag() = default;

    /// Builds from dense ids; labels[i] names vertex i. Throws CycleDetected,
    /// DuplicateEdge, DuplicateLabel or UnknownLabel (for out-of-range ids).
    Dag(std::vector<std::string> labels, std::vector<Edge> edges);

    /// Builds from label pairs; vertex ids follow the order of `labels`.
    static Dag from_labels(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& edges);

    int size() const { return static_cast<int>(labels_.size()); }
    VertexSet vertices() const { return VertexSet::full(size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_[v]; }
    /// Id of a label; throws UnknownLabel.
    Vertex id_of(const std::string& label) const;

    /// Sorted edge list (by source then target).
    std::vector<Edge> edges() const;
    int edge_count() const;

    bool has_edge(Vertex from, Vertex to) const { return out_[from].contains(to); }
    VertexSet out(Vertex v) const { return out_[v]; }
    VertexSet in(Vertex v) const { return in_[v]; }
    VertexSet neighbors(Vertex v) const { return out_[v] | in_[v]; }

    /// Vertices strictly below v (reachable from v by a non-empty path).
    VertexSet below(Vertex v) const { return below_[v]; }
    /// Vertices strictly above v.
    VertexSet above(Vertex v) const { return above_[v]; }

    /// True iff a directed path g ~> h exists; reflexive.
    bool greater_equal(Vertex g, Vertex h) const { return g == h || below_[g].contains(h); }
    bool comparable(Vertex g, Vertex h) const { return greater_equal(g, h) || greater_equal(h, g); }

    bool is_minimal(Vertex v) const { return out_[v].empty(); }
    bool is_maximal(Vertex v) const { return in_[v].empty(); }
    bool is_extremal(Vertex v) const { return is_minimal(v) || is_maximal(v); }

    /// Out-neighbours of any member of s.
    VertexSet out_of(VertexSet s) const;
    /// In-neighbours of any member of s.
    VertexSet in_of(VertexSet s) const;

    /// Members pairwise non-adjacent, ignoring direction.
    bool is_independent(VertexSet s) const;

    /// Canonical linear extension l (sinks first, smallest id among the ready
    /// vertices) and its reversal l'.
    const VertexSeq& linear_extension() const { return ell_; }
    const VertexSeq& reverse_linear_extension() const { return ell_rev_; }

    std::string label_set(VertexSet s) const;

    friend bool operator==(const Dag& a, const Dag& b) {
        return a.labels_ == b.labels_ && a.out_ == b.out_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::vector<VertexSet> below_;
    std::vector<VertexSet> above_;
    VertexSeq ell_;
    VertexSeq ell_rev_;
};

/// Linear extension where each step emits a vertex all of whose out-neighbours
/// have been emitted; `reversed` returns the reversal of that sequence.
VertexSeq linear_extension(const Dag& d, bool reversed, TieBreak tie = TieBreak::smallest_id);

/// Checks the precedence condition of a (reverse) linear extension.
bool is_linear_extension(const Dag& d, const VertexSeq& seq, bool reversed);

struct Subgraph {
    Dag graph;
    /// parent_id[i] is the id in the parent graph of vertex i in `graph`.
    std::vector<Vertex> parent_id;
};

/// closed = false deletes g; closed = true deletes g and all its neighbours.
Subgraph subgraph_delete(const Dag& d, Vertex g, bool closed);

/// Induced subgraph on `keep`, ids renumbered in increasing order.
Subgraph induced_subgraph(const Dag& d, VertexSet keep);

/// Reverses every edge incident to an extremal vertex g. Throws NotExtremal.
Dag toggle_graph(const Dag& d, Vertex g);

Dag reverse_all(const Dag& d);

inline constexpr int kMaxBruteForceVertices = 25;
inline constexpr int kMaxIsomorphismVertices = 12;

/// All independent sets in increasing bitset order; includes the empty set.
/// Throws TooLarge above 25 vertices.
std::vector<VertexSet> independent_sets_bruteforce(const Dag& d);

/// Edge-preserving vertex bijection exists. Throws TooLarge above 12 vertices.
bool digraph_isomorphic(const Dag& a, const Dag& b);

/// Every labelled DAG on n vertices (labels "1".."n"), in a fixed order.
std::vector<Dag> all_dags(int n);

}  // namespace indep
