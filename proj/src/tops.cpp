#include "indep/tops.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace indep {
namespace {

void require_independent(const Dag& d, VertexSet s, const char* what) {
    if (!d.is_independent(s)) {
        throw Error(ErrorKind::NotIndependent, std::string(what) + " = " + d.label_set(s));
    }
}

// Orthogonal pair of independent sets.
bool valid_pair(const Dag& d, VertexSet down, VertexSet up) {
    return !down.intersects(up) && d.is_independent(down) && d.is_independent(up) &&
           !d.out_of(down).intersects(up);
}

}  // namespace

bool is_orthogonal(const Dag& d, VertexSet down, VertexSet up) {
    require_independent(d, down, "D");
    require_independent(d, up, "U");
    return !down.intersects(up) && !d.out_of(down).intersects(up);
}

std::string TightnessViolation::describe(const Dag& d) const {
    switch (move) {
        case Move::add_to_down: return "vertex " + d.label(inserted) + " can be added to D";
        case Move::add_to_up: return "vertex " + d.label(inserted) + " can be added to U";
        case Move::increase_down:
            return "D element " + d.label(removed) + " can be increased to " + d.label(inserted);
        case Move::decrease_up:
            return "U element " + d.label(removed) + " can be decreased to " + d.label(inserted);
    }
    return "unknown move";
}

std::optional<TightnessViolation> tightness_violation(const Dag& d, VertexSet down, VertexSet up) {
    using Move = TightnessViolation::Move;
    if (!is_orthogonal(d, down, up)) {
        throw Error(ErrorKind::NotOrthogonal, "(" + d.label_set(down) + ", " + d.label_set(up) + ")");
    }
    const VertexSet all = d.vertices();
    for (Vertex x : (all - down).members()) {
        if (valid_pair(d, down.with(x), up)) return TightnessViolation{Move::add_to_down, -1, x};
    }
    for (Vertex x : (all - up).members()) {
        if (valid_pair(d, down, up.with(x))) return TightnessViolation{Move::add_to_up, -1, x};
    }
    for (Vertex x : down.members()) {
        for (Vertex y : (d.above(x) - down).members()) {
            if (valid_pair(d, down.without(x).with(y), up)) return TightnessViolation{Move::increase_down, x, y};
        }
    }
    for (Vertex x : up.members()) {
        for (Vertex y : (d.below(x) - up).members()) {
            if (valid_pair(d, down, up.without(x).with(y))) return TightnessViolation{Move::decrease_up, x, y};
        }
    }
    return std::nullopt;
}

bool is_tight(const Dag& d, VertexSet down, VertexSet up) {
    return !tightness_violation(d, down, up).has_value();
}

Top complete_down(const Dag& d, VertexSet independent) {
    require_independent(d, independent, "I");
    VertexSet down;
    VertexSet into_down;  // vertices with an edge from D
    for (Vertex k : d.reverse_linear_extension()) {
        if (!independent.contains(k) && !into_down.contains(k) && !d.out(k).intersects(independent)) {
            down.insert(k);
            into_down |= d.out(k);
        }
    }
    return Top{down, independent};
}

Top complete_up(const Dag& d, VertexSet independent) {
    require_independent(d, independent, "I");
    const VertexSet from_independent = d.out_of(independent);
    VertexSet up;
    VertexSet into_up;  // vertices with an edge to U
    for (Vertex k : d.linear_extension()) {
        if (!independent.contains(k) && !from_independent.contains(k) && !into_up.contains(k)) {
            up.insert(k);
            into_up |= d.in(k);
        }
    }
    return Top{independent, up};
}

Top flip(const Dag& d, const Top& t, Vertex g) {
    return flip(d, t, g, d.linear_extension(), d.reverse_linear_extension());
}

Top flip(const Dag& d, const Top& t, Vertex g, const VertexSeq& ell, const VertexSeq& ell_rev) {
    const bool in_up = t.up.contains(g);
    const bool in_down = t.down.contains(g);
    if (!in_up && !in_down) return t;

    const VertexSet at_or_below = d.below(g).with(g);
    const VertexSet at_or_above = d.above(g).with(g);

    VertexSet down = t.down - at_or_below;
    VertexSet up = t.up - at_or_above;
    if (in_up) down.insert(g);
    else up.insert(g);

    for (Vertex k : ell_rev) {
        if (at_or_above.contains(k) || up.contains(k) || down.contains(k)) continue;
        if (d.out(k).intersects(up) || d.neighbors(k).intersects(down)) continue;
        down.insert(k);
    }
    for (Vertex k : ell) {
        if (at_or_below.contains(k) || down.contains(k) || up.contains(k)) continue;
        if (d.in(k).intersects(down) || d.neighbors(k).intersects(up)) continue;
        up.insert(k);
    }
    return Top{down, up};
}

FlipTree flip_tree(const Dag& d) {
    FlipTree tree;
    const VertexSeq& ell = d.linear_extension();
    tree.tops.push_back(bottom_top(d));

    std::function<void(int, int)> visit = [&](int node, int next_pos) {
        for (int p = next_pos; p < static_cast<int>(ell.size()); ++p) {
            const Vertex g = ell[p];
            if (!tree.tops[node].up.contains(g)) continue;
            Top child = flip(d, tree.tops[node], g);
            const int id = static_cast<int>(tree.tops.size());
            tree.tops.push_back(child);
            tree.edges.push_back({node, id, g});
            visit(id, p + 1);
        }
    };
    visit(0, 0);
    return tree;
}

std::vector<Top> enumerate_tops(const Dag& d) {
    return flip_tree(d).tops;
}

Top toggle_top(const Dag& d, const Top& t, Vertex g) {
    const Dag toggled = toggle_graph(d, g);  // throws NotExtremal
    if (d.is_minimal(g)) {
        if (t.up.contains(g)) return Top{t.down.with(g), t.up.without(g)};
        return complete_up(toggled, t.down.without(g));
    }
    if (t.down.contains(g)) return Top{t.down.without(g), t.up.with(g)};
    return complete_down(toggled, t.up.without(g));
}

VertexSet toggle_indep(const Dag& d, VertexSet independent, Vertex g) {
    require_independent(d, independent, "I");
    if (independent.contains(g)) return independent.without(g);
    if (d.is_independent(independent.with(g))) return independent.with(g);
    return independent;
}

Top row(const Dag& d, const Top& t, RowMethod method) {
    switch (method) {
        case RowMethod::global:
            return complete_down(d, t.down);
        case RowMethod::slow: {
            Top cur = t;
            for (Vertex g : d.linear_extension()) cur = flip(d, cur, g);
            return cur;
        }
        case RowMethod::deform: {
            Dag graph = d;
            Top cur = t;
            for (Vertex g : d.reverse_linear_extension()) {
                cur = toggle_top(graph, cur, g);
                graph = toggle_graph(graph, g);
            }
            if (!(graph == d)) throw std::logic_error("deformotion did not return to the original graph");
            return cur;
        }
    }
    throw std::logic_error("unknown rowmotion method");
}

std::vector<RowOrbit> row_orbits(const Dag& d) {
    const std::vector<Top> tops = enumerate_tops(d);
    std::map<Top, int> index;
    for (std::size_t i = 0; i < tops.size(); ++i) index.emplace(tops[i], static_cast<int>(i));

    std::vector<bool> seen(tops.size(), false);
    std::vector<RowOrbit> orbits;
    for (std::size_t i = 0; i < tops.size(); ++i) {
        if (seen[i]) continue;
        RowOrbit orbit;
        int cur = static_cast<int>(i);
        while (!seen[cur]) {
            seen[cur] = true;
            orbit.tops.push_back(tops[cur]);
            auto it = index.find(row(d, tops[cur]));
            if (it == index.end()) throw std::logic_error("rowmotion left top(G)");
            cur = it->second;
        }
        if (cur != static_cast<int>(i)) throw std::logic_error("rowmotion is not a bijection");
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace indep
