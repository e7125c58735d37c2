#include "indep/extremal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "indep/tops.hpp"

namespace indep {

VertexSet closure(const Dag& d, VertexSet s, Side side) {
    const VertexSet blocked = side == Side::right ? d.out_of(s) : d.in_of(s);
    return d.vertices() - s - blocked;
}

std::vector<Mop> enumerate_mops(const Dag& d) {
    const int n = d.size();
    if (n > kMaxBruteForceVertices) {
        throw Error(ErrorKind::TooLarge, "mop enumeration limited to " +
                                             std::to_string(kMaxBruteForceVertices) + " vertices");
    }
    auto close = [&](VertexSet x) { return closure(d, closure(d, x, Side::right), Side::left); };

    std::vector<Mop> mops;
    VertexSet a = close({});
    for (;;) {
        mops.push_back(Mop{a, closure(d, a, Side::right)});
        bool advanced = false;
        for (Vertex i = n - 1; i >= 0; --i) {
            if (a.contains(i)) continue;
            const VertexSet prefix = VertexSet::full(i);
            VertexSet b = close((a & prefix).with(i));
            if ((b & prefix) == (a & prefix)) {
                a = b;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    std::sort(mops.begin(), mops.end());
    return mops;
}

Mop mop_join(const Dag& d, const Mop& a, const Mop& b) {
    const VertexSet y = a.y & b.y;
    return Mop{closure(d, y, Side::left), y};
}

Mop mop_meet(const Dag& d, const Mop& a, const Mop& b) {
    const VertexSet x = a.x & b.x;
    return Mop{x, closure(d, x, Side::right)};
}

Poset mop_lattice(const Dag& d) {
    const std::vector<Mop> mops = enumerate_mops(d);
    std::vector<Payload> payloads(mops.begin(), mops.end());
    Poset p = Poset::from_order(
        static_cast<int>(mops.size()),
        [&](int i, int j) { return mops[i].x.subset_of(mops[j].x); }, std::move(payloads));

    const LatticeTables tables = lattice_tables(p);
    if (!tables.is_lattice) throw std::logic_error("mop poset is not a lattice");
    std::map<Mop, int> index;
    for (std::size_t i = 0; i < mops.size(); ++i) index.emplace(mops[i], static_cast<int>(i));
    for (int i = 0; i < p.size(); ++i) {
        for (int j = i + 1; j < p.size(); ++j) {
            if (index.at(mop_join(d, mops[i], mops[j])) != tables.join_of(i, j) ||
                index.at(mop_meet(d, mops[i], mops[j])) != tables.meet_of(i, j)) {
                throw std::logic_error("mop join/meet disagree with the lattice tables");
            }
        }
    }
    return p;
}

namespace {

void require_lattice(const Poset& p) {
    if (!is_lattice(p)) throw Error(ErrorKind::NotLattice, "poset is not a lattice");
}

bool extremal_unchecked(const Poset& p) {
    const Irreducibles irr = irreducibles(p);
    const auto len = static_cast<std::size_t>(longest_chain(p));
    return irr.join.size() == len && irr.meet.size() == len;
}

// Longest chain from the minimum to the maximum, smallest indices first.
std::vector<int> spine_chain(const Poset& p) {
    std::vector<int> depth(p.size(), 0);
    for (int y : p.topological_order())
        for (int l : p.lower_covers(y)) depth[y] = std::max(depth[y], depth[l] + 1);
    std::vector<int> chain{*p.maximum()};
    while (!p.lower_covers(chain.back()).empty()) {
        int best = -1;
        for (int l : p.lower_covers(chain.back())) {
            if (depth[l] == depth[chain.back()] - 1 && (best < 0 || l < best)) best = l;
        }
        chain.push_back(best);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

}  // namespace

bool is_extremal(const Poset& p) {
    require_lattice(p);
    return extremal_unchecked(p);
}

IrreduciblePairing pairing_from_chain(const Poset& p, const std::vector<int>& chain) {
    const Irreducibles irr = irreducibles(p);
    IrreduciblePairing pairing;
    pairing.chain = chain;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const int cur = chain[i];
        const int prev = chain[i - 1];
        std::vector<int> js, ms;
        for (int j : irr.join)
            if (p.leq(j, cur) && !p.leq(j, prev)) js.push_back(j);
        for (int m : irr.meet)
            if (p.leq(prev, m) && !p.leq(cur, m)) ms.push_back(m);
        if (js.size() != 1 || ms.size() != 1) {
            throw Error(ErrorKind::AmbiguousPairing, "chain step " + std::to_string(i) + " has " +
                                                         std::to_string(js.size()) + " join- and " +
                                                         std::to_string(ms.size()) + " meet-irreducible candidates");
        }
        pairing.join.push_back(js[0]);
        pairing.meet.push_back(ms[0]);
    }
    return pairing;
}

IrreduciblePairing irreducible_pairing(const Poset& p) {
    if (!is_lattice(p) || !extremal_unchecked(p)) {
        throw Error(ErrorKind::NotExtremalLattice, "irreducible pairing needs an extremal lattice");
    }
    return pairing_from_chain(p, spine_chain(p));
}

std::vector<std::vector<int>> maximum_length_chains(const Poset& p, std::size_t limit) {
    std::vector<std::vector<int>> chains;
    auto lo = p.minimum();
    auto hi = p.maximum();
    if (!lo || !hi) return chains;
    const int len = longest_chain(p);
    std::vector<int> height(p.size(), 0);  // longest chain from x up to the maximum
    const auto& topo = p.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        for (int u : p.upper_covers(*it)) height[*it] = std::max(height[*it], height[u] + 1);

    std::vector<int> chain{*lo};
    std::function<void()> walk = [&] {
        if (chains.size() >= limit) return;
        const int x = chain.back();
        if (x == *hi) {
            if (static_cast<int>(chain.size()) == len + 1) chains.push_back(chain);
            return;
        }
        for (int u : p.upper_covers(x)) {
            if (height[u] + static_cast<int>(chain.size()) != len) continue;
            chain.push_back(u);
            walk();
            chain.pop_back();
        }
    };
    walk();
    return chains;
}

std::vector<int> left_modular_elements(const Poset& p, const LatticeTables& t) {
    std::vector<int> out;
    const int m = p.size();
    for (int x = 0; x < m; ++x) {
        bool ok = true;
        for (int y = 0; y < m && ok; ++y) {
            const Bits& ups = p.up_set(y);
            for (auto z = ups.find_first(); z != Bits::npos && ok; z = ups.find_next(z)) {
                const int zi = static_cast<int>(z);
                ok = t.meet_of(t.join_of(y, x), zi) == t.join_of(y, t.meet_of(x, zi));
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

TrimCheck trim_check(const Poset& p) {
    const LatticeTables tables = lattice_tables(p);
    if (!tables.is_lattice) throw Error(ErrorKind::NotLattice, "poset is not a lattice");
    TrimCheck check;
    check.extremal = extremal_unchecked(p);
    if (!check.extremal) return check;

    const IrreduciblePairing pairing = pairing_from_chain(p, spine_chain(p));
    const int n = pairing.size();
    auto below_set = [&](int x) {
        VertexSet s;
        for (int i = 0; i < n; ++i)
            if (p.leq(pairing.join[i], x)) s.insert(i);
        return s;
    };
    auto above_set = [&](int x) {
        VertexSet s;
        for (int i = 0; i < n; ++i)
            if (p.leq(x, pairing.meet[i])) s.insert(i);
        return s;
    };
    check.overlapping = std::all_of(p.covers().begin(), p.covers().end(), [&](const Cover& c) {
        return above_set(c.first).intersects(below_set(c.second));
    });

    const std::vector<int> lm = left_modular_elements(p, tables);
    std::vector<bool> is_lm(p.size(), false);
    for (int x : lm) is_lm[x] = true;
    const int lo = *p.minimum();
    const int hi = *p.maximum();
    std::vector<bool> reached(p.size(), false);
    if (is_lm[lo]) {
        std::vector<int> stack{lo};
        reached[lo] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int u : p.upper_covers(x)) {
                if (is_lm[u] && !reached[u]) {
                    reached[u] = true;
                    stack.push_back(u);
                }
            }
        }
    }
    check.left_modular_chain = reached[hi];
    return check;
}

bool is_trim(const Poset& p) {
    const TrimCheck c = trim_check(p);
    const bool by_overlap = c.extremal && c.overlapping;
    const bool by_modularity = c.extremal && c.left_modular_chain;
    if (by_overlap != by_modularity) {
        throw std::logic_error("overlapping-cover and left-modular trimness criteria disagree");
    }
    return by_overlap;
}

CoverLabels cover_labels(const Poset& p) {
    if (!is_trim(p)) throw Error(ErrorKind::NotTrim, "cover labels need a trim lattice");
    CoverLabels out;
    out.pairing = irreducible_pairing(p);
    const int n = out.pairing.size();
    std::vector<VertexSet> below(p.size()), above(p.size());
    for (int x = 0; x < p.size(); ++x) {
        for (int i = 0; i < n; ++i) {
            if (p.leq(out.pairing.join[i], x)) below[x].insert(i);
            if (p.leq(x, out.pairing.meet[i])) above[x].insert(i);
        }
    }
    out.labels.assign(p.size(), Top{});
    for (auto [x, y] : p.covers()) {
        const VertexSet overlap = above[x] & below[y];
        if (overlap.size() != 1) throw std::logic_error("cover of a trim lattice overlaps in more than one label");
        out.labels[y].down |= overlap;
        out.labels[x].up |= overlap;
    }
    return out;
}

Dag galois_graph(const Poset& p) {
    const IrreduciblePairing pairing = irreducible_pairing(p);
    const int n = pairing.size();
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        if (p.leq(pairing.join[i], pairing.meet[i])) {
            throw Error(ErrorKind::AmbiguousPairing, "j_" + std::to_string(i + 1) + " lies below m_" +
                                                         std::to_string(i + 1));
        }
        for (int k = 0; k < n; ++k) {
            if (k != i && !p.leq(pairing.join[i], pairing.meet[k])) edges.emplace_back(i, k);
        }
    }
    return Dag(std::move(labels), std::move(edges));
}

Top phi_greedy(const Dag& d, const Mop& m) {
    VertexSet down, up;
    for (Vertex k : d.reverse_linear_extension()) {
        if (m.x.contains(k) && !d.neighbors(k).intersects(down)) down.insert(k);
    }
    for (Vertex k : d.linear_extension()) {
        if (m.y.contains(k) && !d.neighbors(k).intersects(up)) up.insert(k);
    }
    return Top{down, up};
}

Top phi(const Dag& d, const Mop& m) {
    if (!is_trim(mop_lattice(d))) throw Error(ErrorKind::NotTrim, "L(G) is not trim");
    return phi_greedy(d, m);
}

Mop theta(const Dag& d, const Top& t, ThetaOrder order) {
    auto theta1 = [&](Mop m) {
        m.y |= d.vertices() - m.x - d.out_of(m.x);
        return m;
    };
    auto theta2 = [&](Mop m) {
        m.x |= d.vertices() - m.y - d.in_of(m.y);
        return m;
    };
    const Mop start{t.down, t.up};
    return order == ThetaOrder::theta1_first ? theta2(theta1(start)) : theta1(theta2(start));
}

namespace {

enum Block { kX1 = 0, kX2 = 1, kX3 = 2, kX4 = 3, kZ = 4 };

bool local_condition(const Dag& d, Vertex w, const std::vector<int>& block) {
    auto has_out_to = [&](int b) {
        bool found = false;
        d.out(w).for_each([&](Vertex v) { found = found || block[v] == b; });
        return found;
    };
    auto has_in_from = [&](int b) {
        bool found = false;
        d.in(w).for_each([&](Vertex v) { found = found || block[v] == b; });
        return found;
    };
    switch (block[w]) {
        case kX3: return has_in_from(kX4) && has_out_to(kX2);
        case kX2: return has_out_to(kX1) && has_in_from(kX3);
        case kZ: return has_in_from(kX4) && has_out_to(kX1);
        default: return true;
    }
}

bool forbidden_edge(int from, int to) {
    return (from == kX4 && (to == kX2 || to == kX1)) || (from == kX3 && to == kX1);
}

}  // namespace

std::optional<FiveSetWitness> five_set_witness(const Dag& d) {
    const int n = d.size();
    if (n > kMaxFiveSetVertices) {
        throw Error(ErrorKind::TooLarge, "five-set search limited to " +
                                             std::to_string(kMaxFiveSetVertices) + " vertices");
    }
    if (n < 4) return std::nullopt;
    std::vector<int> block(n, -1);
    std::vector<int> counts(5, 0);

    std::function<bool(Vertex)> assign = [&](Vertex v) {
        if (v == n) {
            return counts[kX1] > 0 && counts[kX2] > 0 && counts[kX3] > 0 && counts[kX4] > 0;
        }
        for (int b = kX1; b <= kZ; ++b) {
            block[v] = b;
            bool ok = true;
            d.out(v).for_each([&](Vertex w) { ok = ok && (w > v || !forbidden_edge(b, block[w])); });
            d.in(v).for_each([&](Vertex w) { ok = ok && (w > v || !forbidden_edge(block[w], b)); });
            // Vertices whose whole neighbourhood is now assigned can be checked.
            const VertexSet assigned = VertexSet::full(v + 1);
            if (ok) {
                const VertexSet touched = (d.neighbors(v) & assigned).with(v);
                touched.for_each([&](Vertex w) {
                    if (ok && d.neighbors(w).subset_of(assigned)) ok = local_condition(d, w, block);
                });
            }
            if (ok) {
                ++counts[b];
                if (assign(v + 1)) return true;
                --counts[b];
            }
        }
        block[v] = -1;
        return false;
    };
    if (!assign(0)) return std::nullopt;

    FiveSetWitness w;
    VertexSet* slots[5] = {&w.x1, &w.x2, &w.x3, &w.x4, &w.z};
    for (Vertex v = 0; v < n; ++v) slots[block[v]]->insert(v);
    return w;
}

bool satisfies_five_set(const Dag& d, const FiveSetWitness& w) {
    const VertexSet parts[5] = {w.x1, w.x2, w.x3, w.x4, w.z};
    VertexSet all;
    for (int i = 0; i < 5; ++i) {
        if (all.intersects(parts[i])) return false;
        all |= parts[i];
    }
    if (all != d.vertices()) return false;
    if (w.x1.empty() || w.x2.empty() || w.x3.empty() || w.x4.empty()) return false;
    std::vector<int> block(d.size());
    for (int i = 0; i < 5; ++i) parts[i].for_each([&](Vertex v) { block[v] = i; });
    for (auto [u, v] : d.edges()) {
        if (forbidden_edge(block[u], block[v])) return false;
    }
    for (Vertex v = 0; v < d.size(); ++v) {
        if (!local_condition(d, v, block)) return false;
    }
    return true;
}

}  // namespace indep
