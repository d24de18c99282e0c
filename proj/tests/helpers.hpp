#ifndef ANA_TEST_HELPERS_HPP
#define ANA_TEST_HELPERS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ana/channel.hpp"
#include "ana/dag.hpp"
#include "ana/generators.hpp"
#include "ana/network.hpp"
#include "ana/rng.hpp"

namespace ana::testing {

/// Random DAG on up to max_nodes nodes with edges only from lower to higher
/// index, capped at max_edges. Always has at least one edge.
inline Dag randomDag(std::uint64_t seed, int max_nodes = 6,
                     int max_edges = 8) {
  Rng rng(deriveSeed(seed, 101));
  while (true) {
    int n = 2 + static_cast<int>(rng.below(max_nodes - 1));
    DagBuilder b;
    for (int i = 0; i < n; ++i) b.node("n" + std::to_string(i));
    int edges = 0;
    for (int i = 0; i < n && edges < max_edges; ++i)
      for (int j = i + 1; j < n && edges < max_edges; ++j)
        if (rng.below(100) < 45) {
          b.edge("e" + std::to_string(edges), "n" + std::to_string(i),
                 "n" + std::to_string(j));
          ++edges;
        }
    if (edges == 0) continue;
    return b.build();
  }
}

inline bool reachesWithMask(const Dag& dag, const std::set<NodeId>& U,
                            const std::set<NodeId>& W,
                            const std::set<EdgeId>& removed) {
  std::vector<char> seen(dag.nodeCount(), 0);
  std::vector<NodeId> stack(U.begin(), U.end());
  for (NodeId u : U) seen[u] = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (W.count(v)) return true;
    for (EdgeId e : dag.outEdges(v)) {
      if (removed.count(e)) continue;
      if (!seen[dag.head(e)]) {
        seen[dag.head(e)] = 1;
        stack.push_back(dag.head(e));
      }
    }
  }
  return false;
}

/// Brute-force minimum edge cut by enumerating all edge subsets.
inline int bruteMinCut(const Dag& dag, const std::set<NodeId>& U,
                       const std::set<NodeId>& W) {
  for (NodeId u : U)
    if (W.count(u)) return kInfiniteCut;
  if (!reachesWithMask(dag, U, W, {})) return 0;
  const int m = dag.edgeCount();
  int best = m;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::set<EdgeId> removed;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) removed.insert(e);
    if (!reachesWithMask(dag, U, W, removed)) best = size;
  }
  return best;
}

/// Brute-force 1-edge cuts by single deletion, in topological order.
inline std::vector<EdgeId> bruteOneCuts(const Dag& dag,
                                        const std::set<NodeId>& U,
                                        const std::set<NodeId>& W) {
  std::vector<EdgeId> cuts;
  for (NodeId u : U)
    if (W.count(u)) return cuts;
  if (!reachesWithMask(dag, U, W, {})) return cuts;
  for (EdgeId e : dag.topoEdges())
    if (!reachesWithMask(dag, U, W, {e})) cuts.push_back(e);
  return cuts;
}

/// Channel gain by explicit path enumeration.
inline std::uint64_t brutePathGain(const Dag& dag, const Gf& gf,
                                   const KernelAssignment& asg, int slot,
                                   EdgeId e1, EdgeId e2) {
  if (e1 == e2) return 1;
  std::uint64_t total = 0;
  std::vector<std::pair<EdgeId, std::uint64_t>> stack{{e1, 1}};
  while (!stack.empty()) {
    auto [e, prod] = stack.back();
    stack.pop_back();
    for (EdgeId f : dag.outEdges(dag.head(e))) {
      std::uint64_t p = gf.mul(prod, asg.kernel(slot, e, f));
      if (f == e2)
        total = gf.add(total, p);
      else
        stack.push_back({f, p});
    }
  }
  return total;
}

/// Random valid ANA network corpus member; widths cycle through 1..3 so the
/// corpus spans both degenerate and nondegenerate instances.
inline AnaNetwork corpusNetwork(std::uint64_t seed) {
  GenSpec spec;
  spec.layers = 2 + static_cast<int>(seed % 3);
  spec.width = 1 + static_cast<int>((seed / 3) % 3);
  spec.seed = seed;
  return genRandomLayered(spec);
}

}  // namespace ana::testing

#endif
