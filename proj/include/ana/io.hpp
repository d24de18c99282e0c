#ifndef ANA_IO_HPP
#define ANA_IO_HPP

#include <stdexcept>
#include <string>

#include "ana/network.hpp"

namespace ana {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& why)
      : std::runtime_error("network file: " + why) {}
};

/// Schema: {"nodes": [...], "edges": [{"id","tail","head"}, ...],
///          "sessions": [{"source","destination"} x3]}.
AnaNetwork parseNetworkJson(const std::string& text);
/// Deterministic: nodes and edges in index order, two-space indent.
std::string serializeNetworkJson(const AnaNetwork& net);

AnaNetwork loadNetworkFile(const std::string& path);
void writeNetworkFile(const AnaNetwork& net, const std::string& path);

/// Graphviz text; terminals drawn as boxes.
std::string toDot(const AnaNetwork& net);

}  // namespace ana

#endif
