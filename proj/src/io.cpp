#include "indep/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace indep::io {
namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::string as_label(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    parse_error("vertex label must be a string or an integer, got " + j.dump());
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string html_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

Dag graph_from_json(const json& j) {
    const json& vs = field(j, "vertices");
    if (!vs.is_array()) parse_error("\"vertices\" must be an array");
    std::vector<std::string> labels;
    for (const json& v : vs) labels.push_back(as_label(v));

    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges")) {
        const json& es = j.at("edges");
        if (!es.is_array()) parse_error("\"edges\" must be an array");
        for (const json& e : es) {
            if (!e.is_array() || e.size() != 2) parse_error("edge must be a pair, got " + e.dump());
            edges.emplace_back(as_label(e[0]), as_label(e[1]));
        }
    }
    return Dag::from_labels(std::move(labels), edges);
}

json graph_to_json(const Dag& d) {
    json edges = json::array();
    for (auto [u, v] : d.edges()) edges.push_back({d.label(u), d.label(v)});
    return json{{"vertices", d.labels()}, {"edges", edges}};
}

Dag graph_from_edge_list(const std::string& text) {
    std::vector<std::string> labels;
    std::set<std::string> seen;
    std::vector<std::pair<std::string, std::string>> edges;
    auto reg = [&](const std::string& s) {
        if (seen.insert(s).second) labels.push_back(s);
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tok(line);
        std::vector<std::string> words;
        for (std::string w; tok >> w;) words.push_back(w);
        if (words.empty() || words[0][0] == '#') continue;
        if (words.size() == 1) {
            reg(words[0]);
        } else if (words.size() == 2) {
            reg(words[0]);
            reg(words[1]);
            edges.emplace_back(words[0], words[1]);
        } else {
            parse_error("line " + std::to_string(lineno) + ": expected \"u v\"");
        }
    }
    return Dag::from_labels(std::move(labels), edges);
}

std::string graph_to_edge_list(const Dag& d) {
    std::string out;
    for (const auto& l : d.labels()) out += l + "\n";
    for (auto [u, v] : d.edges()) out += d.label(u) + " " + d.label(v) + "\n";
    return out;
}

Dag load_graph(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) parse_error("cannot open " + path.string());
    std::stringstream buf;
    buf << f.rdbuf();
    if (path.extension() == ".json") {
        json j;
        try {
            j = json::parse(buf.str());
        } catch (const json::parse_error& e) {
            parse_error(path.string() + ": " + e.what());
        }
        return graph_from_json(j);
    }
    return graph_from_edge_list(buf.str());
}

json labels_json(const Dag& d, VertexSet s) {
    json out = json::array();
    s.for_each([&](Vertex v) { out.push_back(d.label(v)); });
    return out;
}

VertexSet labels_from_json(const Dag& d, const json& j) {
    if (!j.is_array()) parse_error("vertex set must be an array, got " + j.dump());
    VertexSet s;
    for (const json& v : j) {
        try {
            s.insert(d.id_of(as_label(v)));
        } catch (const Error& e) {
            parse_error(e.what());
        }
    }
    return s;
}

json top_to_json(const Dag& d, const Top& t) {
    return json{{"D", labels_json(d, t.down)}, {"U", labels_json(d, t.up)}};
}

Top top_from_json(const Dag& d, const json& j) {
    return Top{labels_from_json(d, field(j, "D")), labels_from_json(d, field(j, "U"))};
}

json mop_to_json(const Dag& d, const Mop& m) {
    return json{{"X", labels_json(d, m.x)}, {"Y", labels_json(d, m.y)}};
}

Mop mop_from_json(const Dag& d, const json& j) {
    return Mop{labels_from_json(d, field(j, "X")), labels_from_json(d, field(j, "Y"))};
}

json witness_to_json(const Dag& d, const FiveSetWitness& w) {
    return json{{"X1", labels_json(d, w.x1)}, {"X2", labels_json(d, w.x2)}, {"X3", labels_json(d, w.x3)},
                {"X4", labels_json(d, w.x4)}, {"Z", labels_json(d, w.z)}};
}

FiveSetWitness witness_from_json(const Dag& d, const json& j) {
    return FiveSetWitness{labels_from_json(d, field(j, "X1")), labels_from_json(d, field(j, "X2")),
                          labels_from_json(d, field(j, "X3")), labels_from_json(d, field(j, "X4")),
                          labels_from_json(d, field(j, "Z"))};
}

json orbits_to_json(const Dag& d, const std::vector<RowOrbit>& orbits) {
    json out = json::array();
    for (const RowOrbit& o : orbits) {
        json tops = json::array();
        for (const Top& t : o.tops) tops.push_back(top_to_json(d, t));
        out.push_back(tops);
    }
    return out;
}

json poset_to_json(const Dag& d, const Poset& p) {
    json elements = json::array();
    for (const Payload& pl : p.payloads()) {
        if (const auto* t = std::get_if<Top>(&pl)) elements.push_back(top_to_json(d, *t));
        else if (const auto* m = std::get_if<Mop>(&pl)) elements.push_back(mop_to_json(d, *m));
        else if (const auto* s = std::get_if<std::string>(&pl)) elements.push_back(*s);
        else elements.push_back(nullptr);
    }
    json covers = json::array();
    for (auto [x, y] : p.covers()) covers.push_back({x, y});
    return json{{"elements", elements}, {"covers", covers}};
}

Poset poset_from_json(const Dag& d, const json& j) {
    const json& es = field(j, "elements");
    const json& cs = field(j, "covers");
    if (!es.is_array() || !cs.is_array()) parse_error("\"elements\" and \"covers\" must be arrays");
    std::vector<Payload> payloads;
    for (const json& e : es) {
        if (e.is_null()) payloads.emplace_back(std::monostate{});
        else if (e.is_string()) payloads.emplace_back(e.get<std::string>());
        else if (e.is_object() && e.contains("D")) payloads.emplace_back(top_from_json(d, e));
        else if (e.is_object() && e.contains("X")) payloads.emplace_back(mop_from_json(d, e));
        else parse_error("unrecognised poset element " + e.dump());
    }
    std::vector<Cover> covers;
    for (const json& c : cs) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
            parse_error("cover must be a pair of indices, got " + c.dump());
        }
        covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    const int size = static_cast<int>(payloads.size());
    return Poset(size, std::move(covers), std::move(payloads));
}

std::string format_top(const Dag& d, const Top& t) {
    return "(" + d.label_set(t.down) + ", " + d.label_set(t.up) + ")";
}

std::string format_mop(const Dag& d, const Mop& m) {
    return "(" + d.label_set(m.x) + ", " + d.label_set(m.y) + ")";
}

std::string poset_to_dot(const Dag& d, const Poset& p, const std::string& name) {
    auto sides = [&](VertexSet lo, VertexSet hi) {
        return "<<font color=\"blue\">" + html_escape(d.label_set(lo)) + "</font> | <font color=\"orange\">" +
               html_escape(d.label_set(hi)) + "</font>>";
    };
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"Helvetica\"];\n";
    for (int x = 0; x < p.size(); ++x) {
        const Payload& pl = p.payload(x);
        std::string label;
        if (const auto* t = std::get_if<Top>(&pl)) label = sides(t->down, t->up);
        else if (const auto* m = std::get_if<Mop>(&pl)) label = sides(m->x, m->y);
        else if (const auto* s = std::get_if<std::string>(&pl)) label = "\"" + html_escape(*s) + "\"";
        else label = "\"" + std::to_string(x) + "\"";
        out << "  n" << x << " [label=" << label << "];\n";
    }
    for (auto [x, y] : p.covers()) out << "  n" << x << " -> n" << y << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace indep::io
