#include "indep/fixtures.hpp"

namespace indep::fixtures {
namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

std::vector<std::string> numbered(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

}  // namespace

Dag path(int n) {
    Pairs edges;
    for (int i = n; i > 1; --i) edges.emplace_back(std::to_string(i), std::to_string(i - 1));
    return Dag::from_labels(numbered(n), edges);
}

Dag p4lin() { return path(4); }
Dag p4tr() { return Dag::from_labels(numbered(4), Pairs{{"2", "1"}, {"3", "2"}, {"3", "4"}}); }
Dag p4bl() { return Dag::from_labels(numbered(4), Pairs{{"2", "1"}, {"2", "3"}, {"4", "3"}}); }
Dag p4br() { return Dag::from_labels(numbered(4), Pairs{{"1", "2"}, {"3", "2"}, {"4", "3"}}); }
Dag p3lin() { return path(3); }
Dag p5lin() { return path(5); }
Dag p6lin() { return path(6); }

Dag grid3() {
    auto name = [](int c, int r) { return "(" + std::to_string(c) + "," + std::to_string(r) + ")"; };
    std::vector<std::string> labels;
    Pairs edges;
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r) labels.push_back(name(c, r));
    for (int c = 0; c < 3; ++c) {
        for (int r = 0; r < 3; ++r) {
            if (c + 1 < 3) edges.emplace_back(name(c, r), name(c + 1, r));
            if (r > 0) edges.emplace_back(name(c, r), name(c, r - 1));
        }
    }
    return Dag::from_labels(std::move(labels), edges);
}

Dag tam6() {
    return Dag::from_labels(numbered(6), Pairs{{"5", "4"}, {"5", "2"}, {"6", "4"}, {"4", "1"}, {"2", "1"},
                                               {"3", "2"}, {"4", "2"}, {"5", "3"}, {"6", "5"}});
}

Dag nu5() {
    return Dag::from_labels(numbered(5),
                            Pairs{{"3", "1"}, {"3", "2"}, {"4", "2"}, {"2", "1"}, {"4", "3"}, {"5", "4"}});
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> all{"p4lin", "p4tr", "p4bl", "p4br", "p3lin",
                                              "p5lin", "p6lin", "grid3", "tam6", "nu5"};
    return all;
}

std::optional<Dag> by_name(const std::string& name) {
    if (name == "p4lin") return p4lin();
    if (name == "p4tr") return p4tr();
    if (name == "p4bl") return p4bl();
    if (name == "p4br") return p4br();
    if (name == "p3lin") return p3lin();
    if (name == "p5lin") return p5lin();
    if (name == "p6lin") return p6lin();
    if (name == "grid3") return grid3();
    if (name == "tam6") return tam6();
    if (name == "nu5") return nu5();
    return std::nullopt;
}

}  // namespace indep::fixtures
