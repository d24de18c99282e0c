#include "ana/channel.hpp"

#include "ana/rng.hpp"

namespace ana {

KernelAssignment KernelAssignment::random(const Dag& dag, int slots,
                                          const Gf& gf, std::uint64_t seed) {
  KernelAssignment asg(dag, slots);
  for (int t = 0; t < slots; ++t) {
    Rng rng(deriveSeed(seed, static_cast<std::uint64_t>(t)));
    for (size_t i = 0; i < dag.adjacentPairs().size(); ++i)
      asg.values_[t][i] = rng.below(gf.modulus());
  }
  return asg;
}

std::vector<std::uint64_t> channelGainsFrom(const Dag& dag, const Gf& gf,
                                            const KernelAssignment& asg,
                                            int slot, EdgeId e1) {
  if (e1 < 0 || e1 >= dag.edgeCount()) throw UnknownEdge(std::to_string(e1));
  if (slot < 0 || slot >= asg.slots()) throw SlotOutOfRange();
  std::vector<std::uint64_t> g(dag.edgeCount(), 0);
  g[e1] = 1;
  const int start = dag.topoRank(e1);
  const auto& topo = dag.topoEdges();
  for (size_t i = start + 1; i < topo.size(); ++i) {
    EdgeId f = topo[i];
    std::uint64_t acc = 0;
    for (EdgeId e : dag.inEdges(dag.tail(f))) {
      if (!g[e]) continue;
      acc = gf.add(acc, gf.mul(g[e], asg.kernel(slot, dag.pairIndex(e, f))));
    }
    g[f] = acc;
  }
  return g;
}

std::uint64_t channelGain(const Dag& dag, const Gf& gf,
                          const KernelAssignment& asg, int slot, EdgeId e1,
                          EdgeId e2) {
  if (e2 < 0 || e2 >= dag.edgeCount()) throw UnknownEdge(std::to_string(e2));
  if (e1 == e2) {
    if (e1 < 0 || e1 >= dag.edgeCount()) throw UnknownEdge(std::to_string(e1));
    if (slot < 0 || slot >= asg.slots()) throw SlotOutOfRange();
    return 1;
  }
  return channelGainsFrom(dag, gf, asg, slot, e1)[e2];
}

Matrix nodeChannelMatrix(const Dag& dag, const Gf& gf,
                         const KernelAssignment& asg, int slot, NodeId u,
                         NodeId v) {
  const auto& outs = dag.outEdges(u);
  const auto& ins = dag.inEdges(v);
  Matrix m(static_cast<int>(ins.size()), static_cast<int>(outs.size()));
  for (size_t j = 0; j < outs.size(); ++j) {
    auto gains = channelGainsFrom(dag, gf, asg, slot, outs[j]);
    for (size_t i = 0; i < ins.size(); ++i)
      m.at(static_cast<int>(i), static_cast<int>(j)) = gains[ins[i]];
  }
  return m;
}

Matrix blockDiagGain(const Dag& dag, const Gf& gf, const KernelAssignment& asg,
                     EdgeId src_edge, EdgeId dst_edge) {
  const int tau = asg.slots();
  Matrix m(tau, tau);
  for (int t = 0; t < tau; ++t)
    m.at(t, t) = channelGain(dag, gf, asg, t, src_edge, dst_edge);
  return m;
}

}  // namespace ana
