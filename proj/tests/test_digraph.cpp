#include "doctest.h"

#include "indep/dag.hpp"
#include "indep/fixtures.hpp"
#include "oracles.hpp"

using namespace indep;

namespace {

std::vector<std::string> labels_of(const Dag& d, const VertexSeq& seq) {
    std::vector<std::string> out;
    for (Vertex v : seq) out.push_back(d.label(v));
    return out;
}

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

TEST_CASE("construction") {
    const Dag p4 = fixtures::p4lin();
    CHECK(p4.size() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.has_edge(p4.id_of("4"), p4.id_of("3")));
    CHECK_FALSE(p4.has_edge(p4.id_of("3"), p4.id_of("4")));

    const Dag one = Dag::from_labels({"1"}, {});
    CHECK(one.size() == 1);
    CHECK(one.edge_count() == 0);

    const Dag empty({}, {});
    CHECK(empty.size() == 0);
    CHECK(empty.linear_extension().empty());
}

TEST_CASE("construction errors") {
    CHECK(kind_of([] { Dag::from_labels({"1", "2"}, {{"1", "2"}, {"2", "1"}}); }) == ErrorKind::CycleDetected);
    CHECK(kind_of([] { Dag::from_labels({"1"}, {{"1", "1"}}); }) == ErrorKind::CycleDetected);
    CHECK(kind_of([] { Dag::from_labels({"1", "2"}, {{"1", "2"}, {"1", "2"}}); }) == ErrorKind::DuplicateEdge);
    CHECK(kind_of([] { Dag::from_labels({"1", "2"}, {{"1", "3"}}); }) == ErrorKind::UnknownLabel);
    CHECK(kind_of([] { Dag::from_labels({"1", "1"}, {}); }) == ErrorKind::DuplicateLabel);
    CHECK(kind_of([] { Dag({"1"}, {{0, 1}}); }) == ErrorKind::UnknownLabel);
    CHECK(kind_of([] { fixtures::p4lin().id_of("9"); }) == ErrorKind::UnknownLabel);

    try {
        Dag::from_labels({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    } catch (const Error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("a") != std::string::npos);
        CHECK(msg.find("->") != std::string::npos);
    }
}

TEST_CASE("greater_equal") {
    const Dag p4 = fixtures::p4lin();
    CHECK(p4.greater_equal(p4.id_of("4"), p4.id_of("1")));
    CHECK_FALSE(p4.greater_equal(p4.id_of("1"), p4.id_of("4")));
    for (Vertex v = 0; v < p4.size(); ++v) CHECK(p4.greater_equal(v, v));

    const Dag br = fixtures::p4br();
    CHECK_FALSE(br.greater_equal(br.id_of("1"), br.id_of("3")));
    CHECK_FALSE(br.greater_equal(br.id_of("3"), br.id_of("1")));
    CHECK(br.greater_equal(br.id_of("4"), br.id_of("2")));
}

TEST_CASE("linear extensions") {
    const Dag p4 = fixtures::p4lin();
    CHECK(labels_of(p4, p4.linear_extension()) == std::vector<std::string>{"1", "2", "3", "4"});
    CHECK(labels_of(p4, p4.reverse_linear_extension()) == std::vector<std::string>{"4", "3", "2", "1"});
    CHECK(linear_extension(p4, false) == p4.linear_extension());

    const Dag one = Dag::from_labels({"1"}, {});
    CHECK(one.linear_extension() == VertexSeq{0});
    CHECK(one.reverse_linear_extension() == VertexSeq{0});

    for (const auto& name : fixtures::names()) {
        const Dag d = *fixtures::by_name(name);
        CAPTURE(name);
        CHECK(is_linear_extension(d, d.linear_extension(), false));
        CHECK(is_linear_extension(d, d.reverse_linear_extension(), true));
        CHECK(is_linear_extension(d, linear_extension(d, false, TieBreak::largest_id), false));
        CHECK(is_linear_extension(d, linear_extension(d, true, TieBreak::largest_id), true));
    }
    CHECK_FALSE(is_linear_extension(p4, p4.reverse_linear_extension(), false));
    CHECK_FALSE(is_linear_extension(p4, VertexSeq{0, 1, 2}, false));
}

TEST_CASE("subgraph_delete") {
    const Dag p4 = fixtures::p4lin();
    const Subgraph open = subgraph_delete(p4, p4.id_of("1"), false);
    CHECK(open.graph.labels() == std::vector<std::string>{"2", "3", "4"});
    CHECK(open.graph.edge_count() == 2);
    CHECK(open.graph.has_edge(open.graph.id_of("4"), open.graph.id_of("3")));
    CHECK(open.graph.has_edge(open.graph.id_of("3"), open.graph.id_of("2")));
    CHECK(open.parent_id == std::vector<Vertex>{1, 2, 3});

    const Subgraph closed = subgraph_delete(p4, p4.id_of("1"), true);
    CHECK(closed.graph.labels() == std::vector<std::string>{"3", "4"});
    CHECK(closed.graph.edge_count() == 1);
    CHECK(closed.graph.has_edge(closed.graph.id_of("4"), closed.graph.id_of("3")));

    const Dag one = Dag::from_labels({"1"}, {});
    CHECK(subgraph_delete(one, 0, true).graph.size() == 0);
    CHECK(induced_subgraph(p4, VertexSet{0, 2}).graph.edge_count() == 0);
}

TEST_CASE("toggle_graph") {
    const Dag p3 = fixtures::p3lin();
    const Dag t3 = toggle_graph(p3, p3.id_of("3"));
    CHECK(t3 == Dag::from_labels({"1", "2", "3"}, {{"2", "3"}, {"2", "1"}}));
    CHECK(toggle_graph(t3, t3.id_of("3")) == p3);
    CHECK(kind_of([&] { toggle_graph(p3, p3.id_of("2")); }) == ErrorKind::NotExtremal);

    for (int n = 0; n <= 5; ++n) {
        for (const Dag& d : all_dags(n)) {
            for (Vertex g = 0; g < n; ++g) {
                if (d.is_extremal(g)) REQUIRE(toggle_graph(toggle_graph(d, g), g) == d);
            }
        }
    }
}

TEST_CASE("reverse_all") {
    const Dag p4 = fixtures::p4lin();
    CHECK(reverse_all(p4) == Dag::from_labels({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}}));
    CHECK(reverse_all(reverse_all(p4)) == p4);
    const Dag nu = fixtures::nu5();
    CHECK_FALSE(digraph_isomorphic(nu, reverse_all(nu)));
}

TEST_CASE("independent_sets_bruteforce") {
    CHECK(independent_sets_bruteforce(fixtures::p4lin()).size() == 8);
    CHECK(independent_sets_bruteforce(fixtures::p3lin()).size() == 5);
    const Dag empty({}, {});
    CHECK(independent_sets_bruteforce(empty) == std::vector<VertexSet>{VertexSet{}});

    // Fibonacci on paths
    const int fib[] = {1, 2, 3, 5, 8, 13, 21, 34};
    for (int n = 1; n <= 6; ++n) CHECK(independent_sets_bruteforce(fixtures::path(n)).size() == fib[n]);

    std::vector<std::string> many;
    for (int i = 0; i < 26; ++i) many.push_back("v" + std::to_string(i));
    const Dag big(many, {});
    CHECK(kind_of([&] { independent_sets_bruteforce(big); }) == ErrorKind::TooLarge);
}

TEST_CASE("digraph_isomorphic") {
    const Dag p4 = fixtures::p4lin();
    const Dag relabeled = Dag::from_labels({"a", "b", "c", "d"}, {{"b", "d"}, {"d", "a"}, {"a", "c"}});
    CHECK(digraph_isomorphic(p4, relabeled));
    CHECK_FALSE(digraph_isomorphic(p4, fixtures::p4br()));
    CHECK_FALSE(digraph_isomorphic(fixtures::nu5(), reverse_all(fixtures::nu5())));
    CHECK(digraph_isomorphic(fixtures::tam6(), fixtures::tam6()));

    std::vector<std::string> many;
    for (int i = 0; i < 13; ++i) many.push_back(std::to_string(i));
    const Dag big(many, {});
    CHECK(kind_of([&] { digraph_isomorphic(big, big); }) == ErrorKind::TooLarge);
}

TEST_CASE("all_dags counts") {
    for (int n = 0; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(static_cast<long long>(all_dags(n).size()) == oracle::labelled_dags(n));
    }
    CHECK(all_dags(3).size() == 25);
    CHECK(all_dags(4).size() == 543);
}

TEST_CASE("G-order is a partial order") {
    for (int n = 0; n <= 5; ++n) {
        for (const Dag& d : all_dags(n)) {
            const oracle::Graph g(d);
            for (Vertex a = 0; a < n; ++a) {
                for (Vertex b = 0; b < n; ++b) {
                    REQUIRE(d.greater_equal(a, b) == g.geq[a][b]);
                    if (a != b) REQUIRE_FALSE((d.greater_equal(a, b) && d.greater_equal(b, a)));
                }
            }
        }
    }
}
