#include "ana/dag.hpp"

#include <algorithm>
#include <queue>

namespace ana {

NodeId DagBuilder::node(const std::string& label) {
  auto it = node_index_.find(label);
  if (it != node_index_.end()) return it->second;
  NodeId id = static_cast<NodeId>(node_labels_.size());
  node_labels_.push_back(label);
  node_index_.emplace(label, id);
  return id;
}

EdgeId DagBuilder::edge(const std::string& label, const std::string& tail,
                        const std::string& head) {
  if (edge_index_.count(label)) throw DuplicateLabel(label);
  NodeId t = node(tail);
  NodeId h = node(head);
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({label, t, h});
  edge_index_.emplace(label, id);
  return id;
}

Dag DagBuilder::build() const {
  Dag d;
  d.node_labels_ = node_labels_;
  d.node_index_ = node_index_;
  d.edges_.reserve(edges_.size());
  for (const auto& e : edges_) d.edges_.push_back({e.label, e.tail, e.head});
  d.edge_index_ = edge_index_;
  d.finalize();
  return d;
}

void Dag::finalize() {
  const int nv = nodeCount();
  const int ne = edgeCount();
  in_.assign(nv, {});
  out_.assign(nv, {});
  for (EdgeId e = 0; e < ne; ++e) {
    out_[edges_[e].tail].push_back(e);
    in_[edges_[e].head].push_back(e);
  }

  // Kahn with smallest-id tie-break gives a deterministic node ranking.
  std::vector<int> indeg(nv, 0);
  for (const auto& e : edges_) ++indeg[e.head];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId v = 0; v < nv; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> node_rank(nv, -1);
  int next = 0;
  while (!ready.empty()) {
    NodeId v = ready.top();
    ready.pop();
    node_rank[v] = next++;
    for (EdgeId e : out_[v])
      if (--indeg[edges_[e].head] == 0) ready.push(edges_[e].head);
  }
  if (next != nv) throw CycleDetected();

  topo_edges_.resize(ne);
  for (EdgeId e = 0; e < ne; ++e) topo_edges_[e] = e;
  std::sort(topo_edges_.begin(), topo_edges_.end(), [&](EdgeId a, EdgeId b) {
    int ra = node_rank[edges_[a].tail], rb = node_rank[edges_[b].tail];
    return ra != rb ? ra < rb : a < b;
  });
  topo_rank_.assign(ne, 0);
  for (int i = 0; i < ne; ++i) topo_rank_[topo_edges_[i]] = i;

  // Reflexive reachability closure, filled in reverse node-rank order.
  std::vector<NodeId> by_rank(nv);
  for (NodeId v = 0; v < nv; ++v) by_rank[node_rank[v]] = v;
  reach_.assign(static_cast<size_t>(nv) * nv, 0);
  for (int r = nv - 1; r >= 0; --r) {
    NodeId v = by_rank[r];
    char* row = reach_.data() + static_cast<size_t>(v) * nv;
    row[v] = 1;
    for (EdgeId e : out_[v]) {
      const char* succ = reach_.data() + static_cast<size_t>(edges_[e].head) * nv;
      for (NodeId w = 0; w < nv; ++w) row[w] |= succ[w];
    }
  }

  adjacent_pairs_.clear();
  pair_index_.clear();
  for (EdgeId e1 : topo_edges_) {
    for (EdgeId e2 : out_[edges_[e1].head]) {
      int idx = static_cast<int>(adjacent_pairs_.size());
      adjacent_pairs_.emplace_back(e1, e2);
      pair_index_.emplace((static_cast<std::int64_t>(e1) << 32) | e2, idx);
    }
  }
}

NodeId Dag::nodeIndex(const std::string& label) const {
  auto it = node_index_.find(label);
  if (it == node_index_.end()) throw UnknownNode(label);
  return it->second;
}

EdgeId Dag::edgeIndex(const std::string& label) const {
  auto it = edge_index_.find(label);
  if (it == edge_index_.end()) throw UnknownEdge(label);
  return it->second;
}

int Dag::pairIndex(EdgeId e1, EdgeId e2) const {
  auto it = pair_index_.find((static_cast<std::int64_t>(e1) << 32) | e2);
  return it == pair_index_.end() ? -1 : it->second;
}

EdgeRelation Dag::edgeRelation(EdgeId e1, EdgeId e2) const {
  if (e1 < 0 || e1 >= edgeCount()) throw UnknownEdge(std::to_string(e1));
  if (e2 < 0 || e2 >= edgeCount()) throw UnknownEdge(std::to_string(e2));
  if (e1 == e2) return EdgeRelation::Equal;
  if (nodeReachesEq(head(e1), tail(e2))) return EdgeRelation::Upstream;
  if (nodeReachesEq(head(e2), tail(e1))) return EdgeRelation::Downstream;
  return EdgeRelation::Unreachable;
}

bool Dag::setReaches(const std::set<NodeId>& U,
                     const std::set<NodeId>& W) const {
  for (NodeId u : U)
    for (NodeId w : W)
      if (nodeReachesEq(u, w)) return true;
  return false;
}

bool Dag::reachesAvoiding(const std::set<NodeId>& U, const std::set<NodeId>& W,
                          EdgeId skip) const {
  std::vector<char> seen(nodeCount(), 0);
  std::queue<NodeId> q;
  for (NodeId u : U) {
    if (W.count(u)) return true;
    if (!seen[u]) {
      seen[u] = 1;
      q.push(u);
    }
  }
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop();
    for (EdgeId e : out_[v]) {
      if (e == skip) continue;
      NodeId h = head(e);
      if (seen[h]) continue;
      if (W.count(h)) return true;
      seen[h] = 1;
      q.push(h);
    }
  }
  return false;
}

int Dag::edgeCutValue(const std::set<NodeId>& U,
                      const std::set<NodeId>& W) const {
  for (NodeId u : U)
    if (W.count(u)) return kInfiniteCut;
  for (NodeId v : U)
    if (v < 0 || v >= nodeCount()) throw UnknownNode(std::to_string(v));
  for (NodeId v : W)
    if (v < 0 || v >= nodeCount()) throw UnknownNode(std::to_string(v));

  // Unit-capacity max flow (Edmonds-Karp) from a super source fanning into
  // U to a super sink collecting W. Super edges have effectively infinite
  // capacity; real edges carry one unit each.
  const int nv = nodeCount();
  const int S = nv, T = nv + 1;
  struct FlowEdge {
    int to, cap;
    size_t rev;
  };
  std::vector<std::vector<FlowEdge>> g(nv + 2);
  auto addEdge = [&](int a, int b, int cap) {
    g[a].push_back({b, cap, g[b].size()});
    g[b].push_back({a, 0, g[a].size() - 1});
  };
  const int big = edgeCount() + 1;
  for (NodeId u : U) addEdge(S, u, big);
  for (NodeId w : W) addEdge(w, T, big);
  for (const auto& e : edges_) addEdge(e.tail, e.head, 1);

  int flow = 0;
  while (true) {
    std::vector<std::pair<int, size_t>> prev(nv + 2, {-1, 0});
    std::queue<int> q;
    q.push(S);
    std::vector<char> seen(nv + 2, 0);
    seen[S] = 1;
    while (!q.empty() && !seen[T]) {
      int v = q.front();
      q.pop();
      for (size_t i = 0; i < g[v].size(); ++i) {
        const auto& fe = g[v][i];
        if (fe.cap <= 0 || seen[fe.to]) continue;
        seen[fe.to] = 1;
        prev[fe.to] = {v, i};
        q.push(fe.to);
      }
    }
    if (!seen[T]) break;
    for (int v = T; v != S;) {
      auto [pv, pi] = prev[v];
      g[pv][pi].cap -= 1;
      g[g[pv][pi].to][g[pv][pi].rev].cap += 1;
      v = pv;
    }
    ++flow;
  }
  return flow;
}

std::vector<EdgeId> Dag::oneEdgeCuts(const std::set<NodeId>& U,
                                     const std::set<NodeId>& W) const {
  std::vector<EdgeId> cuts;
  for (NodeId u : U)
    if (W.count(u)) return cuts;  // never disconnectable
  if (!setReaches(U, W)) return cuts;
  for (EdgeId e = 0; e < edgeCount(); ++e)
    if (!reachesAvoiding(U, W, e)) cuts.push_back(e);
  std::sort(cuts.begin(), cuts.end(),
            [&](EdgeId a, EdgeId b) { return topo_rank_[a] < topo_rank_[b]; });
  return cuts;
}

std::set<EdgeId> Dag::mostUpstream(const std::set<EdgeId>& edge_set) const {
  std::set<EdgeId> result;
  for (EdgeId e : edge_set) {
    bool dominated = false;
    for (EdgeId other : edge_set) {
      if (other != e && edgeUpstream(other, e)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) result.insert(e);
  }
  return result;
}

Dag Dag::lineGraph() const {
  DagBuilder b;
  for (const auto& e : edges_) b.node(e.label);
  for (const auto& [e1, e2] : adjacent_pairs_)
    b.edge(edges_[e1].label + "|" + edges_[e2].label, edges_[e1].label,
           edges_[e2].label);
  return b.build();
}

Dag Dag::deleteEdges(const std::set<EdgeId>& edge_set) const {
  DagBuilder b;
  for (const auto& label : node_labels_) b.node(label);
  for (EdgeId e = 0; e < edgeCount(); ++e)
    if (!edge_set.count(e))
      b.edge(edges_[e].label, node_labels_[edges_[e].tail],
             node_labels_[edges_[e].head]);
  return b.build();
}

}  // namespace ana
