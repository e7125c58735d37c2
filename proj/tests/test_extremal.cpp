#include "doctest.h"

#include <map>

#include "indep/extremal.hpp"
#include "indep/fixtures.hpp"
#include "indep/sweep.hpp"
#include "indep/tops.hpp"
#include "oracles.hpp"

using namespace indep;

namespace {

VertexSet set_of(const Dag& d, std::initializer_list<const char*> labels) {
    VertexSet s;
    for (const char* l : labels) s.insert(d.id_of(l));
    return s;
}

Poset diamond_m3() { return Poset(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }

// Pentagon N5: 0 < 1 < 2 < 4, 0 < 3 < 4. Extremal and trim.
Poset pentagon() { return Poset(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("closure") {
    const Dag p4 = fixtures::p4lin();
    CHECK(closure(p4, set_of(p4, {"4"}), Side::right) == set_of(p4, {"1", "2"}));
    CHECK(closure(p4, {}, Side::right) == p4.vertices());
    CHECK(closure(p4, {}, Side::left) == p4.vertices());
    CHECK(closure(p4, set_of(p4, {"1"}), Side::left) == set_of(p4, {"3", "4"}));
    for (VertexSet s : independent_sets_bruteforce(p4)) {
        for (Side side : {Side::left, Side::right}) {
            const Side other = side == Side::left ? Side::right : Side::left;
            const VertexSet once = closure(p4, s, side);
            CHECK(closure(p4, closure(p4, once, other), side) == once);
        }
    }
}

TEST_CASE("enumerate_mops") {
    CHECK(enumerate_mops(fixtures::p4lin()).size() == 9);
    CHECK(enumerate_mops(fixtures::p4bl()).size() == 8);
    const Dag empty({}, {});
    CHECK(enumerate_mops(empty) == std::vector<Mop>{Mop{}});

    std::vector<std::string> many;
    for (int i = 0; i < 26; ++i) many.push_back(std::to_string(i));
    CHECK(kind_of([&] { enumerate_mops(Dag(many, {})); }) == ErrorKind::TooLarge);
}

TEST_CASE("enumerate_mops agrees with the brute-force oracle") {
    for (int n = 0; n <= 5; ++n) {
        for (const Dag& d : all_dags(n)) {
            const auto mops = enumerate_mops(d);
            REQUIRE(std::is_sorted(mops.begin(), mops.end()));
            const std::set<Mop> got(mops.begin(), mops.end());
            REQUIRE(got.size() == mops.size());
            REQUIRE(got == oracle::mops(d));
            for (const Mop& m : mops) {
                REQUIRE(closure(d, m.x, Side::right) == m.y);
                REQUIRE(closure(d, m.y, Side::left) == m.x);
            }
        }
    }
    for (const auto& name : fixtures::names()) {
        const Dag d = *fixtures::by_name(name);
        const auto mops = enumerate_mops(d);
        CHECK(std::set<Mop>(mops.begin(), mops.end()) == oracle::mops(d));
    }
}

TEST_CASE("mop_lattice") {
    const Poset l4 = mop_lattice(fixtures::p4lin());
    CHECK(l4.size() == 9);
    CHECK(is_lattice(l4));
    CHECK(poset_isomorphic(mop_lattice(fixtures::p4bl()), independence_poset(fixtures::p4bl())));
    const Dag empty({}, {});
    CHECK(mop_lattice(empty).size() == 1);
}

TEST_CASE("is_extremal") {
    CHECK(is_extremal(mop_lattice(fixtures::p4lin())));
    CHECK(is_extremal(independence_poset(fixtures::p4tr())));
    CHECK_FALSE(is_extremal(diamond_m3()));
    CHECK(is_extremal(boolean_lattice(3)));
    CHECK(is_extremal(pentagon()));
    CHECK(kind_of([] { is_extremal(Poset(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}})); }) ==
          ErrorKind::NotLattice);

    const Irreducibles l = irreducibles(mop_lattice(fixtures::p4lin()));
    CHECK(l.join.size() == 4);
    CHECK(l.meet.size() == 4);
    CHECK(longest_chain(mop_lattice(fixtures::p4lin())) == 4);
}

TEST_CASE("irreducible_pairing") {
    const Poset bl = mop_lattice(fixtures::p4bl());
    const IrreduciblePairing pr = irreducible_pairing(bl);
    CHECK(pr.size() == 4);
    for (int i = 0; i < pr.size(); ++i) CHECK_FALSE(bl.leq(pr.join[i], pr.meet[i]));

    // the pairing does not depend on the maximum-length chain
    std::set<std::pair<int, int>> canonical;
    for (int i = 0; i < pr.size(); ++i) canonical.emplace(pr.join[i], pr.meet[i]);
    for (const auto& chain : maximum_length_chains(bl)) {
        const IrreduciblePairing other = pairing_from_chain(bl, chain);
        std::set<std::pair<int, int>> pairs;
        for (int i = 0; i < other.size(); ++i) pairs.emplace(other.join[i], other.meet[i]);
        CHECK(pairs == canonical);
    }

    const IrreduciblePairing two = irreducible_pairing(chain_poset(1));
    CHECK(two.size() == 1);
    CHECK(two.join == std::vector<int>{1});
    CHECK(two.meet == std::vector<int>{0});

    CHECK(irreducible_pairing(mop_lattice(fixtures::tam6())).size() == 6);
    CHECK(kind_of([] { irreducible_pairing(diamond_m3()); }) == ErrorKind::NotExtremalLattice);
}

TEST_CASE("pairing is chain-independent on every extremal lattice of small graphs") {
    for (int n = 0; n <= 4; ++n) {
        for (const Dag& d : all_dags(n)) {
            for (const Poset& p : {mop_lattice(d), independence_poset(d)}) {
                if (!is_lattice(p) || !is_extremal(p)) continue;
                const IrreduciblePairing pr = irreducible_pairing(p);
                std::set<std::pair<int, int>> canonical;
                for (int i = 0; i < pr.size(); ++i) canonical.emplace(pr.join[i], pr.meet[i]);
                for (const auto& chain : maximum_length_chains(p)) {
                    const IrreduciblePairing other = pairing_from_chain(p, chain);
                    std::set<std::pair<int, int>> pairs;
                    for (int i = 0; i < other.size(); ++i) pairs.emplace(other.join[i], other.meet[i]);
                    REQUIRE(pairs == canonical);
                }
            }
        }
    }
}

TEST_CASE("is_trim") {
    CHECK_FALSE(is_trim(mop_lattice(fixtures::p4lin())));
    CHECK(is_trim(independence_poset(fixtures::p4tr())));
    CHECK(is_trim(mop_lattice(fixtures::tam6())));
    CHECK(is_trim(pentagon()));
    CHECK(is_trim(boolean_lattice(3)));
    CHECK_FALSE(is_trim(diamond_m3()));

    const TrimCheck c = trim_check(mop_lattice(fixtures::p4lin()));
    CHECK(c.extremal);
    CHECK_FALSE(c.overlapping);
    CHECK_FALSE(c.left_modular_chain);
    CHECK(kind_of([] { is_trim(Poset(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}})); }) ==
          ErrorKind::NotLattice);
}

TEST_CASE("cover_labels") {
    const Dag bl = fixtures::p4bl();
    const Poset l = mop_lattice(bl);
    const CoverLabels labels = cover_labels(l);
    const Poset top = independence_poset(bl);
    const Dag galois = galois_graph(l);
    for (int x = 0; x < l.size(); ++x) {
        CHECK(labels.labels[x].down.size() == static_cast<int>(l.lower_covers(x).size()));
        CHECK(labels.labels[x].up.size() == static_cast<int>(l.upper_covers(x).size()));
        CHECK(galois.is_independent(labels.labels[x].down));
        CHECK(galois.is_independent(labels.labels[x].up));
    }
    CHECK(labels.labels[*l.minimum()].down.empty());
    CHECK(labels.labels[*l.maximum()].up.empty());
    // the minimum's labels match those of the minimum of top(G) up to the
    // Galois isomorphism: same number of upward labels
    CHECK(labels.labels[*l.minimum()].up.size() == std::get<Top>(top.payload(*top.minimum())).up.size());
    CHECK(kind_of([] { cover_labels(mop_lattice(fixtures::p4lin())); }) == ErrorKind::NotTrim);
}

TEST_CASE("cover labels reproduce top(G) through the Galois graph") {
    // On a trim L(G) the labelled lattice is top of its Galois graph.
    for (const char* name : {"p4bl", "p4tr", "p4br", "tam6", "p3lin"}) {
        const Dag d = *fixtures::by_name(name);
        const Poset l = mop_lattice(d);
        REQUIRE(is_trim(l));
        const CoverLabels labels = cover_labels(l);
        const Dag g = galois_graph(l);
        const auto tops = enumerate_tops(g);
        const std::set<Top> expected(tops.begin(), tops.end());
        const std::set<Top> got(labels.labels.begin(), labels.labels.end());
        CAPTURE(name);
        CHECK(got == expected);
    }
}

TEST_CASE("galois_graph") {
    CHECK(digraph_isomorphic(galois_graph(mop_lattice(fixtures::p4bl())), fixtures::p4bl()));
    CHECK(digraph_isomorphic(galois_graph(mop_lattice(fixtures::tam6())), fixtures::tam6()));
    CHECK(digraph_isomorphic(galois_graph(independence_poset(fixtures::p4tr())), fixtures::p4tr()));
    CHECK(digraph_isomorphic(galois_graph(mop_lattice(fixtures::p4lin())), fixtures::p4lin()));
    CHECK(kind_of([] { galois_graph(diamond_m3()); }) == ErrorKind::NotExtremalLattice);
}

TEST_CASE("phi") {
    const Dag bl = fixtures::p4bl();
    const auto mops = enumerate_mops(bl);
    const Poset top = independence_poset(bl);
    const Poset l = mop_lattice(bl);
    CHECK(phi(bl, mops[static_cast<std::size_t>(*l.minimum())]) == bottom_top(bl));
    CHECK(phi(bl, mops[static_cast<std::size_t>(*l.maximum())]) == top_top(bl));

    const Dag tam = fixtures::tam6();
    std::set<Top> images;
    for (const Mop& m : enumerate_mops(tam)) images.insert(phi(tam, m));
    const auto tops = enumerate_tops(tam);
    CHECK(images == std::set<Top>(tops.begin(), tops.end()));

    CHECK(kind_of([] { phi(fixtures::p4lin(), Mop{}); }) == ErrorKind::NotTrim);
}

TEST_CASE("theta") {
    const Dag p4 = fixtures::p4lin();
    std::set<Mop> image;
    for (const Top& t : enumerate_tops(p4)) image.insert(theta(p4, t, ThetaOrder::theta1_first));
    CHECK(image.size() == 8);
    const auto all = enumerate_mops(p4);
    for (const Mop& m : image) CHECK(std::find(all.begin(), all.end(), m) != all.end());

    const Dag tr = fixtures::p4tr();
    for (const Mop& m : enumerate_mops(tr)) {
        CHECK(theta(tr, phi(tr, m), ThetaOrder::theta1_first) == m);
        CHECK(theta(tr, phi(tr, m), ThetaOrder::theta2_first) == m);
    }

    const Top one = top_top(p4);
    const Mop m = theta(p4, one, ThetaOrder::theta1_first);
    CHECK(one.down.subset_of(m.x));
    CHECK(m.y == closure(p4, m.x, Side::right));
}

TEST_CASE("five_set_witness") {
    const Dag p4 = fixtures::p4lin();
    const auto w = five_set_witness(p4);
    REQUIRE(w);
    CHECK(*w == FiveSetWitness{set_of(p4, {"1"}), set_of(p4, {"2"}), set_of(p4, {"3"}), set_of(p4, {"4"}), {}});
    CHECK(satisfies_five_set(p4, *w));
    CHECK_FALSE(five_set_witness(fixtures::p4tr()));
    CHECK_FALSE(five_set_witness(Dag::from_labels({"v"}, {})));

    // corrupting the witness breaks it
    FiveSetWitness bad = *w;
    std::swap(bad.x1, bad.x2);
    CHECK_FALSE(satisfies_five_set(p4, bad));

    std::vector<std::string> many;
    for (int i = 0; i < 13; ++i) many.push_back(std::to_string(i));
    CHECK(kind_of([&] { five_set_witness(Dag(many, {})); }) == ErrorKind::TooLarge);
}

TEST_CASE("five-set witness and lattice property agree") {
    for (int n = 0; n <= 4; ++n) {
        for (const Dag& d : all_dags(n)) {
            const bool lattice = is_lattice(independence_poset(d));
            const auto w = five_set_witness(d);
            REQUIRE(w.has_value() != lattice);
            if (w) REQUIRE(satisfies_five_set(d, *w));
        }
    }
    for (const Dag& d : random_dags(150, 5, 6, 3)) {
        const auto w = five_set_witness(d);
        REQUIRE(w.has_value() != is_lattice(independence_poset(d)));
    }
}

TEST_CASE("trim, lattice and cardinality relations") {
    for (int n = 0; n <= 4; ++n) {
        for (const Dag& d : all_dags(n)) {
            const Poset p = independence_poset(d);
            const Poset l = mop_lattice(d);
            const bool lattice = is_lattice(p);
            if (lattice) {
                REQUIRE(is_trim(p));
                REQUIRE(is_extremal(p));
                REQUIRE(digraph_isomorphic(galois_graph(p), d));
                REQUIRE(poset_isomorphic(l, p));
            }
            REQUIRE(is_trim(l) == lattice);
            REQUIRE(p.size() <= l.size());
            REQUIRE((p.size() == l.size()) == lattice);
        }
    }
}
