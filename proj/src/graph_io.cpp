#include "switchquest/graph_io.hpp"

#include <sstream>

namespace switchquest {

Json graph_to_json(const Graph& g) {
  Json doc;
  doc["name"] = g.name();
  doc["multigraph"] = g.multigraph();
  doc["allow_cycles"] = g.allow_cycles();
  doc["source"] = g.vertex_count() ? g.id(g.source()) : std::string();
  Json vs = Json::array();
  for (const auto& v : g.vertices()) {
    Json jv;
    jv["id"] = v.id;
    if (v.level) jv["level"] = *v.level;
    if (!v.tags.empty()) {
      Json tags = Json::object();
      for (const auto& [k, val] : v.tags) tags[k] = val;
      jv["tags"] = std::move(tags);
    }
    vs.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(vs);
  Json es = Json::array();
  for (const auto& e : g.edges()) {
    Json je;
    je["id"] = e.id;
    je["from"] = g.id(e.from);
    je["to"] = g.id(e.to);
    es.push_back(std::move(je));
  }
  doc["edges"] = std::move(es);
  return doc;
}

namespace {

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw GraphFormatError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw GraphFormatError(where + "." + key + ": missing field");
  return *it;
}

std::string string_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_string()) throw GraphFormatError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

bool bool_field(const Json& obj, const char* key, bool fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) throw GraphFormatError(std::string(key) + ": expected a boolean");
  return it->get<bool>();
}

}  // namespace

Graph graph_from_json(const Json& doc) {
  if (!doc.is_object()) throw GraphFormatError("graph document: expected an object");
  std::string name;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw GraphFormatError("name: expected a string");
    name = it->get<std::string>();
  }
  const bool multigraph = bool_field(doc, "multigraph", false);
  const bool allow_cycles = bool_field(doc, "allow_cycles", false);

  const Json& vs = field(doc, "vertices", "graph");
  if (!vs.is_array()) throw GraphFormatError("vertices: expected an array");
  GraphBuilder b;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    std::string id = string_field(vs[i], "id", where);
    std::optional<int> level;
    if (auto it = vs[i].find("level"); it != vs[i].end() && !it->is_null()) {
      if (!it->is_number_integer()) throw GraphFormatError(where + ".level: expected an integer");
      level = it->get<int>();
    }
    std::map<std::string, std::string> tags;
    if (auto it = vs[i].find("tags"); it != vs[i].end() && !it->is_null()) {
      if (!it->is_object()) throw GraphFormatError(where + ".tags: expected an object");
      for (const auto& [k, val] : it->items()) {
        if (!val.is_string()) {
          throw GraphFormatError(where + ".tags." + k + ": expected a string");
        }
        tags.emplace(k, val.get<std::string>());
      }
    }
    b.add_vertex(std::move(id), level, std::move(tags));
  }

  const Json& es = field(doc, "edges", "graph");
  if (!es.is_array()) throw GraphFormatError("edges: expected an array");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const std::string from = string_field(es[i], "from", where);
    const std::string to = string_field(es[i], "to", where);
    std::string id;
    if (auto it = es[i].find("id"); it != es[i].end()) {
      if (!it->is_string()) throw GraphFormatError(where + ".id: expected a string");
      id = it->get<std::string>();
    }
    VertexIndex a, c;
    try {
      a = b.index(from);
    } catch (const std::out_of_range&) {
      throw GraphFormatError(where + ".from: unknown vertex '" + from + "'");
    }
    try {
      c = b.index(to);
    } catch (const std::out_of_range&) {
      throw GraphFormatError(where + ".to: unknown vertex '" + to + "'");
    }
    b.add_edge(a, c, std::move(id));
  }

  VertexIndex source = 0;
  if (auto it = doc.find("source"); it != doc.end()) {
    if (!it->is_string()) throw GraphFormatError("source: expected a string");
    try {
      source = b.index(it->get<std::string>());
    } catch (const std::out_of_range&) {
      throw GraphFormatError("source: unknown vertex '" + it->get<std::string>() + "'");
    }
  } else if (vs.empty()) {
    throw GraphFormatError("vertices: graph has no vertices");
  }
  if (vs.empty()) throw GraphFormatError("vertices: graph has no vertices");
  return b.build(std::move(name), source, multigraph, allow_cycles);
}

Graph parse_graph(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw GraphFormatError(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string graph_to_dot(const Graph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph " << quote(g.name()) << " {\n";
  os << "  ordering=out;\n";
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    os << "  " << quote(g.id(v));
    std::vector<std::string> attrs;
    if (v == g.source()) attrs.push_back("shape=doublecircle");
    else if (g.is_sink(v)) attrs.push_back("shape=box");
    if (g.vertex(v).level) attrs.push_back("rank=" + std::to_string(*g.vertex(v).level));
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(g.edge_count()); ++e) {
    const Edge& ed = g.edge(e);
    os << "  " << quote(g.id(ed.from)) << " -> " << quote(g.id(ed.to)) << " [id=" << quote(ed.id)
       << ", label=\"" << g.slot_of(e) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json assignment_to_json(const Graph& g, const SwitchAssignment& a) {
  std::map<std::string, std::string> sorted;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    if (!g.is_sink(v)) sorted.emplace(g.id(v), g.edge(a.edge(g, v)).id);
  }
  Json doc = Json::object();
  for (const auto& [k, val] : sorted) doc[k] = val;
  return doc;
}

SwitchAssignment assignment_from_json(const Graph& g, const Json& doc) {
  if (!doc.is_object()) throw GraphFormatError("assignment: expected an object");
  SwitchAssignment a = SwitchAssignment::all_left(g);
  for (const auto& [vid, eid] : doc.items()) {
    auto v = g.find_vertex(vid);
    if (!v) throw GraphFormatError("assignment." + vid + ": unknown vertex");
    if (!eid.is_string()) throw GraphFormatError("assignment." + vid + ": expected an edge id");
    auto e = g.find_edge(eid.get<std::string>());
    if (!e || g.edge(*e).from != *v) {
      throw GraphFormatError("assignment." + vid + ": edge '" + eid.get<std::string>() +
                             "' does not leave this vertex");
    }
    a.slot[*v] = g.slot_of(*e);
  }
  return a;
}

}  // namespace switchquest
