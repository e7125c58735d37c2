#include "indep/dag.hpp"

#include <algorithm>
#include <tuple>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace indep {
namespace {

// Returns the vertices of one directed cycle, or an empty vector if acyclic.
std::vector<Vertex> find_cycle(const std::vector<VertexSet>& out) {
    const int n = static_cast<int>(out.size());
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::vector<Vertex> stack;
    std::vector<Vertex> cycle;

    std::function<bool(Vertex)> visit = [&](Vertex v) {
        state[v] = 1;
        stack.push_back(v);
        for (Vertex w : out[v].members()) {
            if (state[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cycle.assign(it, stack.end());
                return true;
            }
            if (state[w] == 0 && visit(w)) return true;
        }
        stack.pop_back();
        state[v] = 2;
        return false;
    };
    for (Vertex v = 0; v < n; ++v) {
        if (state[v] == 0 && visit(v)) return cycle;
    }
    return {};
}

VertexSeq sinks_first(const std::vector<VertexSet>& out, TieBreak tie) {
    const int n = static_cast<int>(out.size());
    VertexSeq seq;
    seq.reserve(n);
    VertexSet emitted;
    while (static_cast<int>(seq.size()) < n) {
        Vertex pick = -1;
        for (int i = 0; i < n; ++i) {
            Vertex v = tie == TieBreak::smallest_id ? i : n - 1 - i;
            if (!emitted.contains(v) && out[v].subset_of(emitted)) {
                pick = v;
                break;
            }
        }
        if (pick < 0) break;  // cyclic; callers validate beforehand
        seq.push_back(pick);
        emitted.insert(pick);
    }
    return seq;
}

bool acyclic_masks(const std::vector<VertexSet>& out) {
    const int n = static_cast<int>(out.size());
    VertexSet emitted;
    bool progress = true;
    while (progress) {
        progress = false;
        for (Vertex v = 0; v < n; ++v) {
            if (!emitted.contains(v) && out[v].subset_of(emitted)) {
                emitted.insert(v);
                progress = true;
            }
        }
    }
    return emitted.size() == n;
}

}  // namespace

Dag::Dag(std::vector<std::string> labels, std::vector<Edge> edges) : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    if (n > kMaxVertices) {
        throw Error(ErrorKind::TooLarge, "at most " + std::to_string(kMaxVertices) + " vertices supported");
    }
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' repeated");
    }
    out_.assign(n, {});
    in_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(ErrorKind::UnknownLabel,
                        "edge endpoint out of range: " + std::to_string(u) + " -> " + std::to_string(v));
        }
        if (u == v) throw Error(ErrorKind::CycleDetected, "self-loop at " + labels_[u]);
        if (out_[u].contains(v)) {
            throw Error(ErrorKind::DuplicateEdge, labels_[u] + " -> " + labels_[v]);
        }
        out_[u].insert(v);
        in_[v].insert(u);
    }
    if (auto cycle = find_cycle(out_); !cycle.empty()) {
        std::string msg;
        for (Vertex v : cycle) msg += labels_[v] + " -> ";
        msg += labels_[cycle.front()];
        throw Error(ErrorKind::CycleDetected, msg);
    }

    ell_ = sinks_first(out_, TieBreak::smallest_id);
    ell_rev_.assign(ell_.rbegin(), ell_.rend());

    below_.assign(n, {});
    for (Vertex v : ell_) {
        VertexSet b = out_[v];
        out_[v].for_each([&](Vertex w) { b |= below_[w]; });
        below_[v] = b;
    }
    above_.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
        below_[v].for_each([&](Vertex w) { above_[w].insert(v); });
    }
}

Dag Dag::from_labels(std::vector<std::string> labels,
                     const std::vector<std::pair<std::string, std::string>>& edges) {
    std::map<std::string, Vertex> ids;
    for (std::size_t i = 0; i < labels.size(); ++i) ids.emplace(labels[i], static_cast<Vertex>(i));
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = ids.find(a);
        auto ib = ids.find(b);
        if (ia == ids.end()) throw Error(ErrorKind::UnknownLabel, "'" + a + "'");
        if (ib == ids.end()) throw Error(ErrorKind::UnknownLabel, "'" + b + "'");
        es.emplace_back(ia->second, ib->second);
    }
    return Dag(std::move(labels), std::move(es));
}

Vertex Dag::id_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error(ErrorKind::UnknownLabel, "'" + label + "'");
    return static_cast<Vertex>(it - labels_.begin());
}

std::vector<Edge> Dag::edges() const {
    std::vector<Edge> es;
    for (Vertex u = 0; u < size(); ++u) {
        out_[u].for_each([&](Vertex v) { es.emplace_back(u, v); });
    }
    return es;
}

int Dag::edge_count() const {
    int c = 0;
    for (auto s : out_) c += s.size();
    return c;
}

VertexSet Dag::out_of(VertexSet s) const {
    VertexSet r;
    s.for_each([&](Vertex v) { r |= out_[v]; });
    return r;
}

VertexSet Dag::in_of(VertexSet s) const {
    VertexSet r;
    s.for_each([&](Vertex v) { r |= in_[v]; });
    return r;
}

bool Dag::is_independent(VertexSet s) const {
    return !out_of(s).intersects(s);
}

std::string Dag::label_set(VertexSet s) const {
    std::string r = "{";
    bool first = true;
    s.for_each([&](Vertex v) {
        if (!first) r += ",";
        r += labels_[v];
        first = false;
    });
    return r + "}";
}

VertexSeq linear_extension(const Dag& d, bool reversed, TieBreak tie) {
    std::vector<VertexSet> out(d.size());
    for (Vertex v = 0; v < d.size(); ++v) out[v] = d.out(v);
    VertexSeq seq = sinks_first(out, tie);
    if (reversed) std::reverse(seq.begin(), seq.end());
    return seq;
}

bool is_linear_extension(const Dag& d, const VertexSeq& seq, bool reversed) {
    if (static_cast<int>(seq.size()) != d.size()) return false;
    std::vector<int> pos(d.size(), -1);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0 || seq[i] >= d.size() || pos[seq[i]] >= 0) return false;
        pos[seq[i]] = static_cast<int>(i);
    }
    for (auto [u, v] : d.edges()) {
        if (reversed ? pos[u] > pos[v] : pos[v] > pos[u]) return false;
    }
    return true;
}

Subgraph induced_subgraph(const Dag& d, VertexSet keep) {
    Subgraph sub;
    std::vector<Vertex> new_id(d.size(), -1);
    std::vector<std::string> labels;
    keep.for_each([&](Vertex v) {
        new_id[v] = static_cast<Vertex>(sub.parent_id.size());
        sub.parent_id.push_back(v);
        labels.push_back(d.label(v));
    });
    std::vector<Edge> edges;
    for (auto [u, v] : d.edges()) {
        if (keep.contains(u) && keep.contains(v)) edges.emplace_back(new_id[u], new_id[v]);
    }
    sub.graph = Dag(std::move(labels), std::move(edges));
    return sub;
}

Subgraph subgraph_delete(const Dag& d, Vertex g, bool closed) {
    VertexSet drop = VertexSet::single(g);
    if (closed) drop |= d.neighbors(g);
    return induced_subgraph(d, d.vertices() - drop);
}

Dag toggle_graph(const Dag& d, Vertex g) {
    if (!d.is_extremal(g)) {
        throw Error(ErrorKind::NotExtremal, "vertex " + d.label(g) + " is neither minimal nor maximal");
    }
    std::vector<Edge> edges;
    for (auto [u, v] : d.edges()) {
        if (u == g || v == g) edges.emplace_back(v, u);
        else edges.emplace_back(u, v);
    }
    return Dag(d.labels(), std::move(edges));
}

Dag reverse_all(const Dag& d) {
    std::vector<Edge> edges;
    for (auto [u, v] : d.edges()) edges.emplace_back(v, u);
    return Dag(d.labels(), std::move(edges));
}

std::vector<VertexSet> independent_sets_bruteforce(const Dag& d) {
    const int n = d.size();
    if (n > kMaxBruteForceVertices) {
        throw Error(ErrorKind::TooLarge, "independent set enumeration limited to " +
                                             std::to_string(kMaxBruteForceVertices) + " vertices");
    }
    std::vector<VertexSet> adj(n);
    for (Vertex v = 0; v < n; ++v) adj[v] = d.neighbors(v);
    std::vector<VertexSet> result;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        VertexSet s(bits);
        bool ok = true;
        for (std::uint64_t b = bits; b != 0 && ok; b &= b - 1) {
            ok = !adj[std::countr_zero(b)].intersects(s);
        }
        if (ok) result.push_back(s);
    }
    return result;
}

bool digraph_isomorphic(const Dag& a, const Dag& b) {
    if (a.size() > kMaxIsomorphismVertices || b.size() > kMaxIsomorphismVertices) {
        throw Error(ErrorKind::TooLarge, "isomorphism test limited to " +
                                             std::to_string(kMaxIsomorphismVertices) + " vertices");
    }
    const int n = a.size();
    if (n != b.size() || a.edge_count() != b.edge_count()) return false;

    using Sig = std::tuple<int, int, int, int>;
    auto sig = [](const Dag& d, Vertex v) {
        return Sig{d.out(v).size(), d.in(v).size(), d.below(v).size(), d.above(v).size()};
    };
    std::vector<Sig> sa(n), sb(n);
    for (Vertex v = 0; v < n; ++v) {
        sa[v] = sig(a, v);
        sb[v] = sig(b, v);
    }
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }

    std::vector<Vertex> map(n, -1);
    VertexSet used;
    std::function<bool(Vertex)> extend = [&](Vertex v) {
        if (v == n) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used.contains(w) || sa[v] != sb[w]) continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u) {
                ok = a.has_edge(v, u) == b.has_edge(w, map[u]) && a.has_edge(u, v) == b.has_edge(map[u], w);
            }
            if (!ok) continue;
            map[v] = w;
            used.insert(w);
            if (extend(v + 1)) return true;
            used.erase(w);
            map[v] = -1;
        }
        return false;
    };
    return extend(0);
}

std::vector<Dag> all_dags(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<Edge> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::uint64_t total = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;

    std::vector<Dag> result;
    std::vector<VertexSet> out(n);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::fill(out.begin(), out.end(), VertexSet{});
        std::vector<Edge> edges;
        std::uint64_t c = code;
        for (auto [i, j] : pairs) {
            int digit = static_cast<int>(c % 3);
            c /= 3;
            if (digit == 1) {
                out[i].insert(j);
                edges.emplace_back(i, j);
            } else if (digit == 2) {
                out[j].insert(i);
                edges.emplace_back(j, i);
            }
        }
        if (acyclic_masks(out)) result.emplace_back(labels, std::move(edges));
    }
    return result;
}

}  // namespace indep
