#include "ana/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ana {

using nlohmann::json;

AnaNetwork parseNetworkJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  for (const char* key : {"nodes", "edges", "sessions"})
    if (!doc.contains(key) || !doc[key].is_array())
      throw ParseError(std::string("missing array field: ") + key);

  DagBuilder b;
  try {
    for (const auto& n : doc["nodes"]) {
      if (!n.is_string()) throw ParseError("node ids must be strings");
      b.node(n.get<std::string>());
    }
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("id") || !e.contains("tail") ||
          !e.contains("head"))
        throw ParseError("edges need id, tail, head");
      b.edge(e["id"].get<std::string>(), e["tail"].get<std::string>(),
             e["head"].get<std::string>());
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }

  if (doc["sessions"].size() != 3)
    throw ParseError("exactly three sessions required");
  SessionTerminals t;
  for (size_t i = 0; i < 3; ++i) {
    const auto& s = doc["sessions"][i];
    if (!s.is_object() || !s.contains("source") || !s.contains("destination"))
      throw ParseError("sessions need source and destination");
    t.sources[i] = s["source"].get<std::string>();
    t.destinations[i] = s["destination"].get<std::string>();
  }
  return AnaNetwork::validate(b.build(), t);
}

std::string serializeNetworkJson(const AnaNetwork& net) {
  const Dag& dag = net.dag();
  json doc;
  doc["nodes"] = json::array();
  for (NodeId v = 0; v < dag.nodeCount(); ++v)
    doc["nodes"].push_back(dag.nodeLabel(v));
  doc["edges"] = json::array();
  for (EdgeId e = 0; e < dag.edgeCount(); ++e)
    doc["edges"].push_back({{"id", dag.edgeLabel(e)},
                            {"tail", dag.nodeLabel(dag.tail(e))},
                            {"head", dag.nodeLabel(dag.head(e))}});
  doc["sessions"] = json::array();
  SessionTerminals t = net.terminals();
  for (int i = 0; i < 3; ++i)
    doc["sessions"].push_back(
        {{"source", t.sources[i]}, {"destination", t.destinations[i]}});
  return doc.dump(2) + "\n";
}

AnaNetwork loadNetworkFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseNetworkJson(buf.str());
}

void writeNetworkFile(const AnaNetwork& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << serializeNetworkJson(net);
}

std::string toDot(const AnaNetwork& net) {
  const Dag& dag = net.dag();
  std::ostringstream os;
  os << "digraph ana {\n  rankdir=LR;\n";
  SessionTerminals t = net.terminals();
  for (int i = 0; i < 3; ++i)
    os << "  \"" << t.sources[i] << "\" [shape=box];\n"
       << "  \"" << t.destinations[i] << "\" [shape=box];\n";
  for (EdgeId e = 0; e < dag.edgeCount(); ++e)
    os << "  \"" << dag.nodeLabel(dag.tail(e)) << "\" -> \""
       << dag.nodeLabel(dag.head(e)) << "\" [label=\"" << dag.edgeLabel(e)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace ana
