#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "indep/dag.hpp"
#include "indep/extremal.hpp"
#include "indep/pairs.hpp"
#include "indep/poset.hpp"
#include "indep/tops.hpp"

namespace indep::io {

using json = nlohmann::json;

// Graphs. Both readers throw Error(Parse) on malformed input and pass through
// the Dag constructor's errors.
Dag graph_from_json(const json& j);
json graph_to_json(const Dag& d);
Dag graph_from_edge_list(const std::string& text);
std::string graph_to_edge_list(const Dag& d);

/// Reads a graph file; ".json" is parsed as graph JSON, anything else as an
/// edge list.
Dag load_graph(const std::filesystem::path& path);

json labels_json(const Dag& d, VertexSet s);
VertexSet labels_from_json(const Dag& d, const json& j);

json top_to_json(const Dag& d, const Top& t);
Top top_from_json(const Dag& d, const json& j);
json mop_to_json(const Dag& d, const Mop& m);
Mop mop_from_json(const Dag& d, const json& j);
json witness_to_json(const Dag& d, const FiveSetWitness& w);
FiveSetWitness witness_from_json(const Dag& d, const json& j);
json orbits_to_json(const Dag& d, const std::vector<RowOrbit>& orbits);

json poset_to_json(const Dag& d, const Poset& p);
Poset poset_from_json(const Dag& d, const json& j);

/// "({1}, {2,4})" style rendering.
std::string format_top(const Dag& d, const Top& t);
std::string format_mop(const Dag& d, const Mop& m);

/// Hasse diagram in DOT. Nodes are emitted in element order, covers in sorted
/// order; the lower set is blue, the upper set orange.
std::string poset_to_dot(const Dag& d, const Poset& p, const std::string& name = "P");

}  // namespace indep::io
