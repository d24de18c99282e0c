#ifndef ANA_DAG_HPP
#define ANA_DAG_HPP

#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ana {

using NodeId = int;
using EdgeId = int;

/// Edge-cut value standing for "infinity" (U and W intersect).
inline constexpr int kInfiniteCut = std::numeric_limits<int>::max();

enum class EdgeRelation { Upstream, Downstream, Equal, Unreachable };

struct CycleDetected : std::runtime_error {
  CycleDetected() : std::runtime_error("graph contains a directed cycle") {}
};
struct UnknownNode : std::runtime_error {
  explicit UnknownNode(const std::string& label)
      : std::runtime_error("unknown node: " + label) {}
};
struct UnknownEdge : std::runtime_error {
  explicit UnknownEdge(const std::string& label)
      : std::runtime_error("unknown edge: " + label) {}
};
struct DuplicateLabel : std::runtime_error {
  explicit DuplicateLabel(const std::string& label)
      : std::runtime_error("duplicate label: " + label) {}
};

class Dag;

/// Accumulates nodes and labeled edges, then freezes them into a Dag.
/// Parallel edges are allowed; edge labels must be unique.
class DagBuilder {
 public:
  NodeId node(const std::string& label);
  EdgeId edge(const std::string& label, const std::string& tail,
              const std::string& head);
  Dag build() const;  // throws CycleDetected

 private:
  friend class Dag;
  std::vector<std::string> node_labels_;
  std::unordered_map<std::string, NodeId> node_index_;
  struct RawEdge {
    std::string label;
    NodeId tail, head;
  };
  std::vector<RawEdge> edges_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

/// Immutable directed acyclic multigraph. All queries are read-only and
/// safe to call concurrently.
class Dag {
 public:
  Dag() = default;

  int nodeCount() const { return static_cast<int>(node_labels_.size()); }
  int edgeCount() const { return static_cast<int>(edges_.size()); }

  const std::string& nodeLabel(NodeId v) const { return node_labels_[v]; }
  const std::string& edgeLabel(EdgeId e) const { return edges_[e].label; }
  NodeId nodeIndex(const std::string& label) const;
  EdgeId edgeIndex(const std::string& label) const;
  bool hasNode(const std::string& label) const {
    return node_index_.count(label) != 0;
  }
  bool hasEdge(const std::string& label) const {
    return edge_index_.count(label) != 0;
  }

  NodeId tail(EdgeId e) const { return edges_[e].tail; }
  NodeId head(EdgeId e) const { return edges_[e].head; }
  const std::vector<EdgeId>& inEdges(NodeId v) const { return in_[v]; }
  const std::vector<EdgeId>& outEdges(NodeId v) const { return out_[v]; }

  /// Edges in topological order: every edge precedes all of its downstream
  /// edges; ties broken by edge id.
  const std::vector<EdgeId>& topoEdges() const { return topo_edges_; }
  /// Position of e in topoEdges().
  int topoRank(EdgeId e) const { return topo_rank_[e]; }

  /// u == v or a directed path u -> v exists.
  bool nodeReachesEq(NodeId u, NodeId v) const {
    return reach_[static_cast<size_t>(u) * node_labels_.size() + v] != 0;
  }

  EdgeRelation edgeRelation(EdgeId e1, EdgeId e2) const;
  /// e1 strictly upstream of e2: head(e1) reaches-or-equals tail(e2).
  bool edgeUpstream(EdgeId e1, EdgeId e2) const {
    return e1 != e2 && nodeReachesEq(head(e1), tail(e2));
  }
  bool edgeUpstreamEq(EdgeId e1, EdgeId e2) const {
    return e1 == e2 || nodeReachesEq(head(e1), tail(e2));
  }

  /// True iff some u in U equals or reaches some w in W.
  bool setReaches(const std::set<NodeId>& U, const std::set<NodeId>& W) const;

  /// Minimum number of edges whose removal disconnects U from W.
  /// 0 when already disconnected, kInfiniteCut when U and W intersect.
  int edgeCutValue(const std::set<NodeId>& U, const std::set<NodeId>& W) const;
  int edgeCutValue(NodeId u, NodeId v) const {
    return edgeCutValue(std::set<NodeId>{u}, std::set<NodeId>{v});
  }

  /// All single edges whose removal alone disconnects U from W, in
  /// topological order. Empty when the cut value is not exactly 1.
  std::vector<EdgeId> oneEdgeCuts(const std::set<NodeId>& U,
                                  const std::set<NodeId>& W) const;
  std::vector<EdgeId> oneEdgeCuts(NodeId u, NodeId v) const {
    return oneEdgeCuts(std::set<NodeId>{u}, std::set<NodeId>{v});
  }

  /// Members of edge_set not reachable from any other member.
  std::set<EdgeId> mostUpstream(const std::set<EdgeId>& edge_set) const;

  /// Nodes = edges of this graph; an edge (e', e'') for every adjacent pair.
  Dag lineGraph() const;

  /// Same node set, listed edges removed. Surviving edges keep their labels
  /// but are re-indexed; map back through edgeIndex(label).
  Dag deleteEdges(const std::set<EdgeId>& edge_set) const;

  /// All adjacent edge pairs (e', e'') with head(e') == tail(e''), in a
  /// fixed deterministic order. These index the local-kernel variables.
  const std::vector<std::pair<EdgeId, EdgeId>>& adjacentPairs() const {
    return adjacent_pairs_;
  }
  /// Index of (e1, e2) in adjacentPairs(); -1 if not adjacent.
  int pairIndex(EdgeId e1, EdgeId e2) const;

 private:
  friend class DagBuilder;

  std::vector<std::string> node_labels_;
  std::unordered_map<std::string, NodeId> node_index_;
  struct Edge {
    std::string label;
    NodeId tail, head;
  };
  std::vector<Edge> edges_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<std::vector<EdgeId>> in_, out_;
  std::vector<EdgeId> topo_edges_;
  std::vector<int> topo_rank_;
  std::vector<char> reach_;  // node x node closure, reflexive
  std::vector<std::pair<EdgeId, EdgeId>> adjacent_pairs_;
  std::unordered_map<std::int64_t, int> pair_index_;

  void finalize();  // throws CycleDetected
  bool reachesAvoiding(const std::set<NodeId>& U, const std::set<NodeId>& W,
                       EdgeId skip) const;
};

}  // namespace ana

#endif
