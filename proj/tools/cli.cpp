#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "indep/extremal.hpp"
#include "indep/io.hpp"
#include "indep/poset.hpp"
#include "indep/sweep.hpp"
#include "indep/tops.hpp"

namespace indep::cli {
namespace {

using io::json;

constexpr int kMaxEnumerationVertices = 25;
constexpr int kMaxCheckVertices = 12;
constexpr int kMaxExhaustiveVertices = 5;

enum class Format { text, json, dot };

struct Config {
    std::string input;
    Format format = Format::text;
    bool mops = false;
    bool tree = false;
    bool trace = false;
    std::string from;
    int max_n = 4;
    std::optional<int> sample;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

// Carries an exit code out of a command.
struct Exit {
    int code;
    std::string message;
};

void guard(const Dag& d, int limit, const std::string& what) {
    if (d.size() > limit) {
        throw Exit{kSizeGuard, what + " is limited to " + std::to_string(limit) + " vertices, graph has " +
                                   std::to_string(d.size())};
    }
}

Dag load(const Config& cfg) {
    try {
        return io::load_graph(cfg.input);
    } catch (const Error& e) {
        throw Exit{kParseError, e.what()};
    }
}

std::string plural(std::size_t n, const std::string& word) {
    return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_tops(const Config& cfg, std::ostream& out) {
    const Dag d = load(cfg);
    guard(d, kMaxEnumerationVertices, "top enumeration");
    const FlipTree tree = flip_tree(d);
    if (cfg.format == Format::json) {
        json j{{"count", tree.tops.size()}, {"tops", json::array()}};
        for (const Top& t : tree.tops) j["tops"].push_back(io::top_to_json(d, t));
        if (cfg.tree) {
            j["tree"] = json::array();
            for (const FlipTreeEdge& e : tree.edges)
                j["tree"].push_back({{"parent", e.parent}, {"child", e.child}, {"vertex", d.label(e.vertex)}});
        }
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << plural(tree.tops.size(), "top") << "\n";
    for (std::size_t i = 0; i < tree.tops.size(); ++i) out << i << ": " << io::format_top(d, tree.tops[i]) << "\n";
    if (cfg.tree) {
        out << "flip tree:\n";
        for (const FlipTreeEdge& e : tree.edges)
            out << e.parent << " -> " << e.child << " flip " << d.label(e.vertex) << "\n";
    }
    return kOk;
}

int cmd_mops(const Config& cfg, std::ostream& out) {
    const Dag d = load(cfg);
    guard(d, kMaxEnumerationVertices, "mop enumeration");
    const std::vector<Mop> mops = enumerate_mops(d);
    if (cfg.format == Format::json) {
        json j{{"count", mops.size()}, {"mops", json::array()}};
        for (const Mop& m : mops) j["mops"].push_back(io::mop_to_json(d, m));
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << plural(mops.size(), "mop") << "\n";
    for (std::size_t i = 0; i < mops.size(); ++i) out << i << ": " << io::format_mop(d, mops[i]) << "\n";
    return kOk;
}

int cmd_hasse(const Config& cfg, std::ostream& out) {
    const Dag d = load(cfg);
    guard(d, kMaxEnumerationVertices, "poset construction");
    const Poset p = cfg.mops ? mop_lattice(d) : independence_poset(d);
    switch (cfg.format) {
        case Format::json:
            out << io::poset_to_json(d, p).dump(2) << "\n";
            break;
        case Format::dot:
            out << io::poset_to_dot(d, p, cfg.mops ? "mops" : "tops");
            break;
        case Format::text:
            out << plural(static_cast<std::size_t>(p.size()), "element") << ", "
                << plural(p.covers().size(), "cover") << "\n";
            for (int x = 0; x < p.size(); ++x) {
                const Payload& pl = p.payload(x);
                out << x << ": "
                    << (cfg.mops ? io::format_mop(d, std::get<Mop>(pl)) : io::format_top(d, std::get<Top>(pl)))
                    << "\n";
            }
            for (auto [x, y] : p.covers()) out << x << " < " << y << "\n";
            break;
    }
    return kOk;
}

int cmd_check(const Config& cfg, std::ostream& out) {
    const Dag d = load(cfg);
    guard(d, kMaxCheckVertices, "check");
    const Poset p = independence_poset(d);
    const LatticeTables tables = lattice_tables(p);
    const std::vector<Mop> mops = enumerate_mops(d);
    const Poset lg = mop_lattice(d);
    const bool trim_lg = is_trim(lg);
    const auto witness = five_set_witness(d);

    std::optional<bool> trim_top;
    std::optional<bool> round_trip;
    if (tables.is_lattice) {
        trim_top = is_trim(p);
        round_trip = digraph_isomorphic(galois_graph(p), d);
    }
    std::optional<bool> self_dual_poset;
    if (p.size() <= kMaxPosetIsomorphismSize) self_dual_poset = poset_isomorphic(p, dual(p));
    const bool self_dual_graph = digraph_isomorphic(d, reverse_all(d));

    const std::vector<Top> tops = enumerate_tops(d);
    std::set<Mop> img1, img2;
    for (const Top& t : tops) {
        img1.insert(theta(d, t, ThetaOrder::theta1_first));
        img2.insert(theta(d, t, ThetaOrder::theta2_first));
    }

    // Lattice status and witness must agree; anything else is a bug.
    const bool consistent = witness.has_value() != tables.is_lattice && trim_lg == tables.is_lattice &&
                            (!round_trip || *round_trip) && (!trim_top || *trim_top);

    if (cfg.format == Format::json) {
        json j{{"vertices", d.size()},
               {"tops", tops.size()},
               {"mops", mops.size()},
               {"lattice", tables.is_lattice},
               {"trim_top", trim_top ? json(*trim_top) : json(nullptr)},
               {"trim_mops", trim_lg},
               {"witness", witness ? io::witness_to_json(d, *witness) : json(nullptr)},
               {"galois_round_trip", round_trip ? json(*round_trip) : json(nullptr)},
               {"theta_images_equal", img1 == img2},
               {"self_dual_poset", self_dual_poset ? json(*self_dual_poset) : json(nullptr)},
               {"self_dual_graph", self_dual_graph},
               {"consistent", consistent}};
        if (tables.witness) {
            const LatticeWitness& w = *tables.witness;
            json bounds = json::array();
            for (int b : w.bounds) bounds.push_back(io::top_to_json(d, std::get<Top>(p.payload(b))));
            j["lattice_failure"] = {{"x", io::top_to_json(d, std::get<Top>(p.payload(w.x)))},
                                    {"y", io::top_to_json(d, std::get<Top>(p.payload(w.y)))},
                                    {"operation", w.join_failed ? "join" : "meet"},
                                    {"bounds", bounds}};
        }
        out << j.dump(2) << "\n";
        return consistent ? kOk : kPropertyFailure;
    }

    auto opt = [](const std::optional<bool>& b) { return b ? std::string(yes_no(*b)) : std::string("n/a"); };
    out << "tops: " << tops.size() << "\n";
    out << "mops: " << mops.size() << "\n";
    out << "lattice: " << yes_no(tables.is_lattice) << "\n";
    if (tables.witness) {
        const LatticeWitness& w = *tables.witness;
        out << "  " << (w.join_failed ? "join" : "meet") << " of "
            << io::format_top(d, std::get<Top>(p.payload(w.x))) << " and "
            << io::format_top(d, std::get<Top>(p.payload(w.y))) << " fails; "
            << (w.join_failed ? "minimal upper" : "maximal lower") << " bounds:";
        for (int b : w.bounds) out << " " << io::format_top(d, std::get<Top>(p.payload(b)));
        out << "\n";
    }
    out << "trim(top(G)): " << opt(trim_top) << "\n";
    out << "trim(L(G)): " << yes_no(trim_lg) << "\n";
    out << "five-set witness: ";
    if (witness) {
        out << "X1=" << d.label_set(witness->x1) << " X2=" << d.label_set(witness->x2)
            << " X3=" << d.label_set(witness->x3) << " X4=" << d.label_set(witness->x4)
            << " Z=" << d.label_set(witness->z) << "\n";
    } else {
        out << "none\n";
    }
    out << "galois round-trip: " << opt(round_trip) << "\n";
    out << "theta images: " << (img1 == img2 ? "equal" : "differ") << "\n";
    out << "self-dual poset: " << opt(self_dual_poset) << "\n";
    out << "self-dual graph: " << yes_no(self_dual_graph) << "\n";
    if (!consistent) out << "inconsistent diagnostics\n";
    return consistent ? kOk : kPropertyFailure;
}

Top read_top(const Dag& d, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Exit{kParseError, "cannot open " + path};
    Top t;
    try {
        t = io::top_from_json(d, json::parse(f));
    } catch (const json::exception& e) {
        throw Exit{kParseError, path + ": " + e.what()};
    } catch (const Error& e) {
        throw Exit{kParseError, path + ": " + e.what()};
    }
    const std::string pair = io::format_top(d, t);
    if (!d.is_independent(t.down)) throw Exit{kInvalidTop, pair + ": D is not independent"};
    if (!d.is_independent(t.up)) throw Exit{kInvalidTop, pair + ": U is not independent"};
    if (!is_orthogonal(d, t.down, t.up)) throw Exit{kInvalidTop, pair + ": not an orthogonal pair"};
    if (auto v = tightness_violation(d, t.down, t.up)) throw Exit{kInvalidTop, pair + ": not tight, " + v->describe(d)};
    return t;
}

int cmd_row(const Config& cfg, std::ostream& out) {
    const Dag d = load(cfg);
    guard(d, kMaxEnumerationVertices, "rowmotion");
    const bool has_start = !cfg.from.empty();
    const Top t = has_start ? read_top(d, cfg.from) : bottom_top(d);

    if (!cfg.trace && !has_start) {
        const std::vector<RowOrbit> orbits = row_orbits(d);
        if (cfg.format == Format::json) {
            json j{{"orbits", io::orbits_to_json(d, orbits)}, {"lengths", json::array()}};
            for (const RowOrbit& o : orbits) j["lengths"].push_back(o.length());
            out << j.dump(2) << "\n";
            return kOk;
        }
        out << plural(orbits.size(), "orbit") << "\n";
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            out << "orbit " << i + 1 << " (length " << orbits[i].length() << "):";
            for (const Top& t : orbits[i].tops) out << " " << io::format_top(d, t);
            out << "\n";
        }
        return kOk;
    }

    const Top global = row(d, t, RowMethod::global);
    std::vector<std::pair<Vertex, Top>> slow_log, deform_log;
    Top cur = t;
    for (Vertex g : d.linear_extension()) {
        cur = flip(d, cur, g);
        slow_log.emplace_back(g, cur);
    }
    const Top slow = cur;
    Dag graph = d;
    cur = t;
    for (Vertex g : d.reverse_linear_extension()) {
        cur = toggle_top(graph, cur, g);
        graph = toggle_graph(graph, g);
        deform_log.emplace_back(g, cur);
    }
    const Top deform = cur;
    const bool graph_restored = graph == d;
    const bool agree = global == slow && global == deform && graph_restored;

    RowOrbit orbit;
    cur = t;
    do {
        orbit.tops.push_back(cur);
        cur = row(d, cur);
    } while (!(cur == t));

    if (cfg.format == Format::json) {
        json j{{"from", io::top_to_json(d, t)}, {"row", io::top_to_json(d, global)},
               {"orbit", io::orbits_to_json(d, {orbit})[0]}, {"agree", agree}};
        if (cfg.trace) {
            j["slow"] = json::array();
            for (auto& [g, s] : slow_log) j["slow"].push_back({{"flip", d.label(g)}, {"top", io::top_to_json(d, s)}});
            j["deform"] = json::array();
            for (auto& [g, s] : deform_log)
                j["deform"].push_back({{"toggle", d.label(g)}, {"top", io::top_to_json(d, s)}});
            j["graph_restored"] = graph_restored;
        }
        out << j.dump(2) << "\n";
        return agree ? kOk : kPropertyFailure;
    }
    out << "row " << io::format_top(d, t) << " = " << io::format_top(d, global) << "\n";
    out << "orbit length " << orbit.length() << ":";
    for (const Top& s : orbit.tops) out << " " << io::format_top(d, s);
    out << "\n";
    if (cfg.trace) {
        out << "slow motion:\n";
        for (auto& [g, s] : slow_log) out << "  flip " << d.label(g) << " -> " << io::format_top(d, s) << "\n";
        out << "deformotion:\n";
        for (auto& [g, s] : deform_log) out << "  tog " << d.label(g) << " -> " << io::format_top(d, s) << "\n";
        out << "graph restored: " << yes_no(graph_restored) << "\n";
    }
    out << "methods agree: " << yes_no(agree) << "\n";
    return agree ? kOk : kPropertyFailure;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
    if (cfg.max_n < 0) throw Exit{kParseError, "--max-n must be non-negative"};
    if (!cfg.sample && cfg.max_n > kMaxExhaustiveVertices) {
        throw Exit{kSizeGuard, "exhaustive sweep is limited to --max-n " + std::to_string(kMaxExhaustiveVertices) +
                                   "; use --sample K"};
    }
    if (cfg.sample && (cfg.max_n > kMaxCheckVertices || *cfg.sample < 0)) {
        throw Exit{kSizeGuard, "sampled sweep is limited to --max-n " + std::to_string(kMaxCheckVertices)};
    }
    SweepConfig sc;
    sc.max_n = cfg.max_n;
    sc.sample = cfg.sample;
    sc.seed = cfg.seed;
    sc.threads = cfg.threads;
    const SweepReport r = run_sweep(sc);

    if (cfg.format == Format::json) {
        json j{{"mode", cfg.sample ? "sample" : "exhaustive"}, {"max_n", cfg.max_n}, {"graphs", r.graphs},
               {"graphs_per_n", json::object()}, {"properties", json::array()},
               {"theta_images_differ", r.theta_images_differ}, {"ok", r.ok()}};
        if (cfg.sample) j["seed"] = cfg.seed;
        for (auto [n, count] : r.graphs_per_n) j["graphs_per_n"][std::to_string(n)] = count;
        for (const PropertyResult& p : r.properties) {
            json pj{{"id", p.id}, {"description", p.description}, {"checks", p.checks}, {"failures", p.failures}};
            if (!p.ok()) {
                pj["counterexample"] = json::parse(p.counterexample);
                pj["detail"] = p.detail;
            }
            j["properties"].push_back(pj);
        }
        out << j.dump(2) << "\n";
        return r.ok() ? kOk : kPropertyFailure;
    }
    if (cfg.sample) {
        out << "verify: " << *cfg.sample << " random graphs on " << std::max(0, cfg.max_n - 1) << "-" << cfg.max_n
            << " vertices, seed " << cfg.seed << "\n";
    } else {
        out << "verify: all graphs on 0-" << cfg.max_n << " vertices\n";
    }
    for (auto [n, count] : r.graphs_per_n) out << "  n=" << n << ": " << plural(count, "DAG") << "\n";
    out << "  total: " << plural(r.graphs, "DAG") << "\n";
    for (const PropertyResult& p : r.properties) {
        out << (p.ok() ? "PASS " : "FAIL ") << "(" << p.id << ") " << p.description;
        if (!p.ok()) out << " [" << p.failures << " of " << p.checks << " graphs]";
        out << "\n";
        if (!p.ok()) {
            out << "  counterexample: " << p.counterexample << "\n";
            out << "  " << p.detail << "\n";
        }
    }
    out << "theta images differ on " << plural(r.theta_images_differ, "graph") << "\n";
    out << (r.ok() ? "all properties hold" : "property failures") << "\n";
    return r.ok() ? kOk : kPropertyFailure;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::CycleDetected:
        case ErrorKind::DuplicateEdge:
        case ErrorKind::DuplicateLabel:
        case ErrorKind::UnknownLabel: return kParseError;
        case ErrorKind::TooLarge: return kSizeGuard;
        case ErrorKind::NotIndependent:
        case ErrorKind::NotOrthogonal: return kInvalidTop;
        default: return kPropertyFailure;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Independence posets of acyclic directed graphs", "indep"};
    app.require_subcommand(1);
    Config cfg;

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"dot", Format::dot}};
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("graph", cfg.input, "graph file (.json, or an edge list)")->required();
        sub->add_option("--format", cfg.format, "text, json or dot")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    CLI::App* tops = app.add_subcommand("tops", "list all tight orthogonal pairs");
    add_input(tops);
    tops->add_flag("--tree", cfg.tree, "also print the flip tree");

    CLI::App* hasse = app.add_subcommand("hasse", "Hasse diagram of top(G), or of L(G) with --mops");
    add_input(hasse);
    hasse->add_flag("--mops", cfg.mops, "use the lattice of maximal orthogonal pairs");

    CLI::App* check = app.add_subcommand("check", "lattice, trim and duality diagnostics");
    add_input(check);

    CLI::App* rowc = app.add_subcommand("row", "rowmotion orbits");
    add_input(rowc);
    rowc->add_option("--from", cfg.from, "start from the top in this JSON file");
    rowc->add_flag("--trace", cfg.trace, "log slow motion and deformotion steps");

    CLI::App* mops = app.add_subcommand("mops", "list all maximal orthogonal pairs");
    add_input(mops);

    CLI::App* verify = app.add_subcommand("verify", "check every property on many graphs");
    verify->add_option("--max-n", cfg.max_n, "largest vertex count");
    verify->add_option("--sample", cfg.sample, "number of random graphs instead of all graphs");
    verify->add_option("--seed", cfg.seed, "random seed for --sample");
    verify->add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
    verify->add_option("--format", cfg.format, "text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    try {
        if (cfg.format == Format::dot && !hasse->parsed()) throw Exit{kParseError, "--format dot needs hasse"};
        if (tops->parsed()) return cmd_tops(cfg, out);
        if (hasse->parsed()) {
            Config c = cfg;
            if (!hasse->count("--format")) c.format = Format::dot;
            return cmd_hasse(c, out);
        }
        if (check->parsed()) return cmd_check(cfg, out);
        if (rowc->parsed()) return cmd_row(cfg, out);
        if (mops->parsed()) return cmd_mops(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
    } catch (const Exit& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kPropertyFailure;
    }
    return kParseError;
}

}  // namespace indep::cli
