#include "indep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "indep/extremal.hpp"
#include "indep/io.hpp"
#include "indep/poset.hpp"
#include "indep/tops.hpp"

namespace indep {
namespace {

using Failure = std::optional<std::string>;

// Everything the properties share for one graph.
struct Context {
    const Dag& d;
    std::vector<Top> tops;
    std::map<Top, int> index;
    Poset poset;
    bool lattice = false;
    std::vector<Mop> mops;
    Poset mops_poset;

    explicit Context(const Dag& g) : d(g) {
        tops = enumerate_tops(d);
        for (std::size_t i = 0; i < tops.size(); ++i) index.emplace(tops[i], static_cast<int>(i));
        poset = independence_poset(d);
        lattice = is_lattice(poset);
        mops = enumerate_mops(d);
        mops_poset = mop_lattice(d);
    }

    std::string top(const Top& t) const { return io::format_top(d, t); }
    std::string vertex(Vertex v) const { return d.label(v); }
};

struct Notes {
    bool theta_images_differ = false;
};

using Check = std::function<Failure(const Context&, Notes&)>;

struct Property {
    const char* id;
    const char* description;
    Check check;
};

Failure count_tops(const Context& c, Notes&) {
    const auto indep = independent_sets_bruteforce(c.d);
    if (c.tops.size() != indep.size()) {
        return std::to_string(c.tops.size()) + " tops vs " + std::to_string(indep.size()) + " independent sets";
    }
    if (c.index.size() != c.tops.size()) return std::string("enumeration repeats a top");
    return std::nullopt;
}

Failure rowmotion_agrees(const Context& c, Notes&) {
    for (const Top& t : c.tops) {
        const Top g = row(c.d, t, RowMethod::global);
        const Top s = row(c.d, t, RowMethod::slow);
        const Top f = row(c.d, t, RowMethod::deform);
        if (!(g == s) || !(g == f)) {
            return "row" + c.top(t) + ": global " + c.top(g) + ", slow " + c.top(s) + ", deform " + c.top(f);
        }
    }
    std::size_t total = 0;
    for (const RowOrbit& o : row_orbits(c.d)) total += o.tops.size();
    if (total != c.tops.size()) return std::string("orbits do not partition top(G)");
    return std::nullopt;
}

Failure flips_commute(const Context& c, Notes&) {
    const int n = c.d.size();
    for (const Top& t : c.tops) {
        for (Vertex g = 0; g < n; ++g) {
            const Top once = flip(c.d, t, g);
            if (!c.index.contains(once)) return "flip_" + c.vertex(g) + c.top(t) + " is not a top";
            if (!(flip(c.d, once, g) == t)) return "flip_" + c.vertex(g) + " is not an involution at " + c.top(t);
            for (Vertex h = g + 1; h < n; ++h) {
                if (c.d.comparable(g, h)) continue;
                if (!(flip(c.d, flip(c.d, t, h), g) == flip(c.d, once, h))) {
                    return "flip_" + c.vertex(g) + " and flip_" + c.vertex(h) + " do not commute at " + c.top(t);
                }
            }
        }
    }
    return std::nullopt;
}

Failure five_set(const Context& c, Notes&) {
    const auto w = five_set_witness(c.d);
    if (w.has_value() == c.lattice) {
        return std::string(c.lattice ? "lattice with a five-set witness" : "non-lattice without a witness");
    }
    if (w && !satisfies_five_set(c.d, *w)) return std::string("witness violates the five-set conditions");
    return std::nullopt;
}

Failure lattice_trim_extremal(const Context& c, Notes&) {
    if (!c.lattice) return std::nullopt;
    if (!is_trim(c.poset)) return std::string("lattice that is not trim");
    if (!is_extremal(c.poset)) return std::string("trim lattice that is not extremal");
    return std::nullopt;
}

Failure tops_vs_mops(const Context& c, Notes&) {
    if (c.tops.size() > c.mops.size()) return std::string("more tops than mops");
    if ((c.tops.size() == c.mops.size()) != c.lattice) {
        return std::to_string(c.tops.size()) + " tops, " + std::to_string(c.mops.size()) + " mops, lattice=" +
               (c.lattice ? "true" : "false");
    }
    return std::nullopt;
}

Failure phi_theta(const Context& c, Notes&) {
    if (!c.lattice) return std::nullopt;
    if (!is_trim(c.mops_poset)) return std::string("top(G) is a lattice but L(G) is not trim");
    std::vector<int> map(c.mops.size());
    for (std::size_t i = 0; i < c.mops.size(); ++i) {
        const Top t = phi_greedy(c.d, c.mops[i]);
        auto it = c.index.find(t);
        if (it == c.index.end()) return "phi" + io::format_mop(c.d, c.mops[i]) + " is not a top";
        map[i] = it->second;
        for (ThetaOrder o : {ThetaOrder::theta1_first, ThetaOrder::theta2_first}) {
            if (!(theta(c.d, t, o) == c.mops[i])) return "theta(phi" + io::format_mop(c.d, c.mops[i]) + ") differs";
        }
    }
    if (!is_order_isomorphism(c.mops_poset, c.poset, map)) return std::string("phi is not an order isomorphism");
    return std::nullopt;
}

Failure theta_injective(const Context& c, Notes& notes) {
    const std::set<Mop> all(c.mops.begin(), c.mops.end());
    std::set<Mop> images[2];
    int k = 0;
    for (ThetaOrder o : {ThetaOrder::theta1_first, ThetaOrder::theta2_first}) {
        for (const Top& t : c.tops) {
            const Mop m = theta(c.d, t, o);
            if (!all.contains(m)) return "theta" + c.top(t) + " is not a mop";
            images[k].insert(m);
        }
        if (images[k].size() != c.tops.size()) {
            return std::string(k == 0 ? "theta2.theta1" : "theta1.theta2") + " is not injective";
        }
        ++k;
    }
    notes.theta_images_differ = images[0] != images[1];
    return std::nullopt;
}

Failure toggles_consistent(const Context& c, Notes&) {
    for (Vertex g = 0; g < c.d.size(); ++g) {
        if (!c.d.is_extremal(g)) continue;
        const Dag toggled = toggle_graph(c.d, g);
        for (const Top& t : c.tops) {
            const Top u = toggle_top(c.d, t, g);
            if (!is_top(toggled, u)) return "tog_" + c.vertex(g) + c.top(t) + " is not a top of the toggled graph";
            if (!(toggle_top(toggled, u, g) == t)) return "tog_" + c.vertex(g) + " is not a bijection at " + c.top(t);
            if (c.d.is_minimal(g)) {
                if (u.down != toggle_indep(c.d, t.down, g)) return "D side of tog_" + c.vertex(g) + c.top(t);
            } else if (u.up != toggle_indep(c.d, t.up, g)) {
                return "U side of tog_" + c.vertex(g) + c.top(t);
            }
        }
    }
    return std::nullopt;
}

Failure duality(const Context& c, Notes&) {
    const Dag star = reverse_all(c.d);
    const Poset q = independence_poset(star);
    std::map<Top, int> qi;
    for (int x = 0; x < q.size(); ++x) qi.emplace(std::get<Top>(q.payload(x)), x);
    std::vector<int> map(c.tops.size());
    for (int x = 0; x < c.poset.size(); ++x) {
        auto it = qi.find(swap_sides(std::get<Top>(c.poset.payload(x))));
        if (it == qi.end()) return "swap of " + c.top(std::get<Top>(c.poset.payload(x))) + " is not a top of G*";
        map[x] = it->second;
    }
    if (!is_order_isomorphism(c.poset, dual(q), map)) return std::string("(D,U) -> (U,D) does not reverse the order");
    return std::nullopt;
}

Failure all_tight(const Context& c, Notes&) {
    for (const Top& t : c.tops) {
        if (!is_orthogonal(c.d, t.down, t.up)) return c.top(t) + " is not orthogonal";
        if (auto v = tightness_violation(c.d, t.down, t.up)) return c.top(t) + ": " + v->describe(c.d);
    }
    return std::nullopt;
}

Failure uniqueness(const Context& c, Notes&) {
    std::map<VertexSet, int> by_down, by_up;
    for (const Top& t : c.tops) {
        ++by_down[t.down];
        ++by_up[t.up];
    }
    for (VertexSet s : independent_sets_bruteforce(c.d)) {
        if (by_down[s] != 1 || by_up[s] != 1) return c.d.label_set(s) + " is not a unique D and U side";
        const Top down = complete_down(c.d, s);
        const Top up = complete_up(c.d, s);
        if (!c.index.contains(down) || !c.index.contains(up)) return "completion of " + c.d.label_set(s) + " is not enumerated";
    }
    return std::nullopt;
}

Failure galois_fixpoint(const Context& c, Notes&) {
    for (const Mop& m : c.mops) {
        if (closure(c.d, m.x, Side::right) != m.y || closure(c.d, m.y, Side::left) != m.x) {
            return io::format_mop(c.d, m) + " is not closed";
        }
    }
    return std::nullopt;
}

Failure covers_reduced(const Context& c, Notes&) {
    const Poset closure_poset =
        Poset::from_order(c.poset.size(), [&](int x, int y) { return c.poset.less(x, y); });
    if (closure_poset.covers() != c.poset.covers()) return std::string("flip covers are not the transitive reduction");
    return std::nullopt;
}

Failure chain_bound(const Context& c, Notes&) {
    const int len = longest_chain(c.poset);
    if (len < c.d.size()) return "longest chain " + std::to_string(len) + " < " + std::to_string(c.d.size());
    return std::nullopt;
}

Failure mobius_sums(const Context& c, Notes&) {
    const auto mu = mobius(c.poset);
    const int top = *c.poset.maximum();
    for (int x = 0; x < c.poset.size(); ++x) {
        long long sum = 0;
        for (long long v : mu[x]) sum += v;
        if (sum != (x == top ? 1 : 0)) return "Mobius row sum " + std::to_string(sum) + " at element " + std::to_string(x);
    }
    return std::nullopt;
}

Failure trim_iff_lattice(const Context& c, Notes&) {
    if (is_trim(c.mops_poset) != c.lattice) return std::string("L(G) trim does not match top(G) lattice");
    return std::nullopt;
}

Failure galois_round_trip(const Context& c, Notes&) {
    if (!c.lattice) return std::nullopt;
    if (!digraph_isomorphic(galois_graph(c.poset), c.d)) return std::string("Galois graph is not isomorphic to G");
    return std::nullopt;
}

Failure extension_independent(const Context& c, Notes&) {
    const VertexSeq ell = linear_extension(c.d, false, TieBreak::largest_id);
    const VertexSeq ell_rev = linear_extension(c.d, true, TieBreak::largest_id);
    for (const Top& t : c.tops) {
        for (Vertex g = 0; g < c.d.size(); ++g) {
            if (!(flip(c.d, t, g, ell, ell_rev) == flip(c.d, t, g))) {
                return "flip_" + c.vertex(g) + c.top(t) + " depends on the linear extension";
            }
        }
    }
    return std::nullopt;
}

Failure graph_toggles(const Context& c, Notes&) {
    for (Vertex g = 0; g < c.d.size(); ++g) {
        if (!c.d.is_extremal(g)) continue;
        if (!(toggle_graph(toggle_graph(c.d, g), g) == c.d)) return "tog_" + c.vertex(g) + " twice is not the identity";
    }
    return std::nullopt;
}

Failure order_axioms(const Context& c, Notes&) {
    const int n = c.d.size();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
            if (a != b && c.d.greater_equal(a, b) && c.d.greater_equal(b, a)) return std::string("G-order not antisymmetric");
            for (Vertex e = 0; e < n; ++e) {
                if (c.d.greater_equal(a, b) && c.d.greater_equal(b, e) && !c.d.greater_equal(a, e)) {
                    return std::string("G-order not transitive");
                }
            }
        }
    }
    return std::nullopt;
}

const std::vector<Property>& properties() {
    static const std::vector<Property> all{
        {"a", "tops equal independent sets", count_tops},
        {"b", "global, slow and deform rowmotion agree", rowmotion_agrees},
        {"c", "flip involution and commutation", flips_commute},
        {"d", "no five-set witness iff lattice", five_set},
        {"e", "lattice => trim => extremal", lattice_trim_extremal},
        {"f", "#tops <= #mops, equality iff lattice", tops_vs_mops},
        {"g", "phi order isomorphism, theta.phi = id on lattices", phi_theta},
        {"h", "theta compositions injective", theta_injective},
        {"i", "toggle_top matches toggle_indep", toggles_consistent},
        {"j", "top(G) dual to top(G*)", duality},
        {"tight", "every enumerated top is tight", all_tight},
        {"unique", "one top per D side and per U side", uniqueness},
        {"closed", "mops are Galois-closed", galois_fixpoint},
        {"covers", "flip covers are a transitive reduction", covers_reduced},
        {"chain", "longest chain >= |G|", chain_bound},
        {"mobius", "Mobius row sums", mobius_sums},
        {"trim-L", "L(G) trim iff top(G) lattice", trim_iff_lattice},
        {"galois", "Galois graph round trip on lattices", galois_round_trip},
        {"ext", "flips independent of the linear extension", extension_independent},
        {"toggle", "graph toggle is an involution", graph_toggles},
        {"order", "G-order is a partial order", order_axioms},
    };
    return all;
}

struct Outcome {
    std::vector<std::optional<std::string>> failures;  // per property
    bool theta_images_differ = false;
};

Outcome run_one(const Dag& d) {
    const auto& props = properties();
    Outcome out;
    out.failures.resize(props.size());
    std::optional<Context> ctx;
    try {
        ctx.emplace(d);
    } catch (const std::exception& e) {
        for (auto& f : out.failures) f = std::string("setup: ") + e.what();
        return out;
    }
    for (std::size_t i = 0; i < props.size(); ++i) {
        Notes notes;
        try {
            out.failures[i] = props[i].check(*ctx, notes);
        } catch (const std::exception& e) {
            out.failures[i] = std::string("exception: ") + e.what();
        }
        out.theta_images_differ = out.theta_images_differ || notes.theta_images_differ;
    }
    return out;
}

Dag from_orientation(int n, const std::vector<int>& choice) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<Edge> edges;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if (choice[k] == 1) edges.emplace_back(i, j);
            else if (choice[k] == 2) edges.emplace_back(j, i);
        }
    }
    return Dag(std::move(labels), std::move(edges));
}

}  // namespace

bool SweepReport::ok() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.ok(); });
}

std::vector<Dag> random_dags(int count, int min_n, int max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(min_n, max_n);
    std::vector<Dag> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        const int n = size(rng);
        std::vector<int> choice(n * (n - 1) / 2);
        for (;;) {
            for (int& c : choice) c = static_cast<int>(rng() % 3);
            try {
                out.push_back(from_orientation(n, choice));
                break;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::CycleDetected) throw;
            }
        }
    }
    return out;
}

SweepReport run_sweep(const std::vector<Dag>& graphs, unsigned threads) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, graphs.size()));

    std::vector<Outcome> outcomes(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++) outcomes[i] = run_one(graphs[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    SweepReport report;
    report.graphs = static_cast<long>(graphs.size());
    std::map<int, long> per_n;
    for (const Dag& d : graphs) ++per_n[d.size()];
    report.graphs_per_n.assign(per_n.begin(), per_n.end());

    const auto& props = properties();
    for (std::size_t p = 0; p < props.size(); ++p) {
        PropertyResult r;
        r.id = props[p].id;
        r.description = props[p].description;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            ++r.checks;
            if (!outcomes[i].failures[p]) continue;
            if (r.failures++ == 0) {
                r.counterexample = io::graph_to_json(graphs[i]).dump();
                r.detail = *outcomes[i].failures[p];
            }
        }
        report.properties.push_back(std::move(r));
    }
    for (const Outcome& o : outcomes) report.theta_images_differ += o.theta_images_differ ? 1 : 0;
    return report;
}

SweepReport run_sweep(const SweepConfig& cfg) {
    std::vector<Dag> graphs;
    if (cfg.sample) {
        graphs = random_dags(*cfg.sample, std::max(0, cfg.max_n - 1), cfg.max_n, cfg.seed);
    } else {
        for (int n = 0; n <= cfg.max_n; ++n) {
            auto more = all_dags(n);
            graphs.insert(graphs.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
        }
    }
    return run_sweep(graphs, cfg.threads);
}

}  // namespace indep
