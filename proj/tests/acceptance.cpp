// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <queue>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "indep/extremal.hpp"
#include "indep/fixtures.hpp"
#include "indep/io.hpp"
#include "indep/poset.hpp"
#include "indep/tops.hpp"

using namespace indep;
using io::json;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

void expect(Outcome& o, bool cond, const std::string& what) {
    if (!cond && o.ok) {
        o.ok = false;
        o.note = what;
    }
}

VertexSet set_of(const Dag& d, std::initializer_list<const char*> labels) {
    VertexSet s;
    for (const char* l : labels) s.insert(d.id_of(l));
    return s;
}

// Length of the shortest maximal chain, by breadth-first search over covers.
int shortest_maximal_chain(const Poset& p) {
    std::vector<std::vector<int>> up(p.size());
    for (const auto& [lo, hi] : p.covers()) up[lo].push_back(hi);
    std::vector<int> dist(p.size(), -1);
    std::queue<int> q;
    dist[*p.minimum()] = 0;
    q.push(*p.minimum());
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int y : up[x]) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
    }
    return dist[*p.maximum()];
}

json cli_json(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = indep::cli::run(args, out, err);
    return json::parse(out.str());
}

void verify_sweep(Outcome& o, const std::vector<std::string>& args, int n, long expected_at_n) {
    int code = -1;
    const json r = cli_json(args, code);
    expect(o, code == 0, "verify exited with " + std::to_string(code));
    long at_n = 0;
    long total = 0;
    for (auto& [key, count] : r["graphs_per_n"].items()) {
        total += count.get<long>();
        if (key == std::to_string(n)) at_n = count.get<long>();
    }
    if (expected_at_n >= 0) expect(o, at_n == expected_at_n, "graphs at n=" + std::to_string(n) + ": " + std::to_string(at_n));
    std::map<std::string, bool> seen;
    for (const json& p : r["properties"]) {
        seen[p["id"]] = true;
        expect(o, p["failures"] == 0, "property (" + p["id"].get<std::string>() + ") failed");
        expect(o, p["checks"].get<long>() > 0, "property (" + p["id"].get<std::string>() + ") never exercised");
    }
    for (const char* id : {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"})
        expect(o, seen.count(id) == 1, std::string("property (") + id + ") missing");
    o.note += (o.note.empty() ? "" : "; ") + std::to_string(total) + " graphs";
}

Outcome quartet() {
    Outcome o;
    const std::map<std::string, bool> lattice{{"p4lin", false}, {"p4tr", true}, {"p4bl", true}, {"p4br", true}};
    for (const auto& [name, want] : lattice) {
        const Dag d = *fixtures::by_name(name);
        const Poset p = independence_poset(d);
        expect(o, p.size() == 8, name + " has " + std::to_string(p.size()) + " tops");
        expect(o, is_lattice(p) == want, name + " lattice status");
        if (want) expect(o, is_trim(p), name + " not trim");
    }
    const Poset bl = independence_poset(fixtures::p4bl());
    expect(o, longest_chain(bl) == 4 && shortest_maximal_chain(bl) == 4, "p4bl not graded of rank 4");
    const LatticeTables t = lattice_tables(bl);
    bool distributive = t.is_lattice;
    for (int x = 0; distributive && x < bl.size(); ++x)
        for (int y = 0; y < bl.size(); ++y)
            for (int z = 0; z < bl.size(); ++z)
                if (t.meet_of(x, t.join_of(y, z)) != t.join_of(t.meet_of(x, y), t.meet_of(x, z))) distributive = false;
    expect(o, distributive, "p4bl not distributive");
    return o;
}

Outcome p5_chain() {
    Outcome o;
    const int len = longest_chain(independence_poset(fixtures::p5lin()));
    expect(o, len == 6, "longest chain " + std::to_string(len));
    o.note = "longest chain " + std::to_string(len);
    return o;
}

Outcome p6_mobius() {
    Outcome o;
    long long best = 0;
    for (const auto& row : mobius(independence_poset(fixtures::p6lin())))
        for (long long v : row) best = std::max(best, v);
    expect(o, best == 4, "max mobius " + std::to_string(best));
    o.note = "max mobius " + std::to_string(best);
    return o;
}

Outcome tamari() {
    Outcome o;
    const Dag d = fixtures::tam6();
    const Poset p = independence_poset(d);
    expect(o, p.size() == 14, std::to_string(p.size()) + " tops");
    expect(o, is_lattice(p) && is_trim(p), "not a trim lattice");
    expect(o, digraph_isomorphic(galois_graph(p), d), "galois graph differs");
    return o;
}

Outcome grid_rowmotion() {
    Outcome o;
    const Dag d = fixtures::grid3();
    const Top from{set_of(d, {"(0,0)", "(0,2)"}), set_of(d, {"(2,0)", "(1,1)", "(2,2)"})};
    const Top want{set_of(d, {"(1,0)", "(1,2)", "(2,1)"}), set_of(d, {"(0,0)", "(0,2)"})};
    expect(o, row(d, from, RowMethod::global) == want, "global");
    expect(o, row(d, from, RowMethod::slow) == want, "slow motion");
    expect(o, row(d, from, RowMethod::deform) == want, "deformotion");
    return o;
}

Outcome p3_deformotion() {
    Outcome o;
    const Dag p3 = fixtures::p3lin();
    const std::map<char, Top> letter{
        {'a', Top{{}, set_of(p3, {"1", "3"})}},
        {'b', Top{set_of(p3, {"1"}), set_of(p3, {"2"})}},
        {'c', Top{set_of(p3, {"2"}), set_of(p3, {"3"})}},
        {'d', Top{set_of(p3, {"3"}), set_of(p3, {"1"})}},
        {'e', Top{set_of(p3, {"1", "3"}), {}}},
    };
    const std::map<char, char> image{{'a', 'e'}, {'b', 'd'}, {'c', 'b'}, {'d', 'c'}, {'e', 'a'}};

    // Every letter is carried through the three intermediate graphs; each
    // image must be a top of the graph it lives on.
    Dag g = p3;
    std::map<char, Top> tracked = letter;
    for (const char* v : {"3", "2", "1"}) {
        const Vertex x = g.id_of(v);
        expect(o, g.is_extremal(x), std::string("vertex ") + v + " not extremal");
        const Dag next = toggle_graph(g, x);
        for (auto& [c, t] : tracked) {
            t = toggle_top(g, t, x);
            expect(o, is_top(next, t), std::string("image of ") + c + " not a top after toggling " + v);
        }
        g = next;
    }
    expect(o, g == p3, "graph not restored");
    for (auto [from, to] : image) expect(o, tracked.at(from) == letter.at(to), std::string("letter ") + from);
    return o;
}

Outcome nu5() {
    Outcome o;
    const Dag d = fixtures::nu5();
    const Poset p = independence_poset(d);
    expect(o, poset_isomorphic(p, dual(p)), "poset not self-dual");
    expect(o, !digraph_isomorphic(d, reverse_all(d)), "graph isomorphic to its reverse");
    return o;
}

Outcome exhaustive() {
    Outcome o;
    verify_sweep(o, {"verify", "--max-n", "4", "--format", "json"}, 4, 543);
    return o;
}

Outcome sampled() {
    Outcome o;
    verify_sweep(o, {"verify", "--max-n", "6", "--sample", "500", "--seed", "0", "--format", "json"}, 6, -1);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_s;  // 0: no time target
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"P4 quartet: 8 tops, lattice status, trim, P4bl distributive of rank 4", 1, quartet},
        {"P5lin longest chain is 6", 1, p5_chain},
        {"P6lin maximum Mobius value is 4", 5, p6_mobius},
        {"Tam6: 14 tops, trim lattice, Galois graph isomorphic", 1, tamari},
        {"Grid3 rowmotion by all three methods", 0, grid_rowmotion},
        {"P3lin deformotion restores the graph and permutes tops (a e)(b d c)", 0, p3_deformotion},
        {"NU5 self-dual poset on a non-self-dual graph", 0, nu5},
        {"verify --max-n 4: 543 DAGs on four vertices, zero failures", 60, exhaustive},
        {"verify --max-n 6 --sample 500 --seed 0: zero failures", 120, sampled},
    };

    int failed = 0;
    int index = 1;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs > c.budget_s) {
            o.ok = false;
            o.note += (o.note.empty() ? "" : "; ") + std::string("over time budget");
        }
        if (!o.ok) ++failed;
        std::ostringstream line;
        line.precision(3);
        line << (o.ok ? "PASS" : "FAIL") << " " << index++ << ". " << c.name << " (" << std::fixed << secs << " s";
        if (!o.note.empty()) line << "; " << o.note;
        line << ")";
        std::cout << line.str() << "\n";
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
