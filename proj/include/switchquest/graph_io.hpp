#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "switchquest/graph.hpp"

namespace switchquest {

using Json = nlohmann::ordered_json;

/// Malformed graph document; the message names the offending field.
class GraphFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical graph document: vertices and edges in graph order, tag maps
/// sorted by key. Field order is fixed so dumps are byte-stable.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& doc);
Graph parse_graph(const std::string& text);
std::string dump_json(const Json& doc);

/// Graphviz rendering. `ordering=out` keeps the out-list order of the edges.
std::string graph_to_dot(const Graph& g);

/// {vertex id: edge id} over the non-sink vertices.
Json assignment_to_json(const Graph& g, const SwitchAssignment& a);
SwitchAssignment assignment_from_json(const Graph& g, const Json& doc);

}  // namespace switchquest
