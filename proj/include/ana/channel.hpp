#ifndef ANA_CHANNEL_HPP
#define ANA_CHANNEL_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ana/dag.hpp"
#include "ana/gf.hpp"

namespace ana {

struct SlotOutOfRange : std::runtime_error {
  SlotOutOfRange() : std::runtime_error("time slot out of range") {}
};

/// One field value per local kernel x_{e'e''} and per time slot. Slots are
/// independent draws; one root seed derives them all.
class KernelAssignment {
 public:
  KernelAssignment(const Dag& dag, int slots)
      : dag_(&dag),
        values_(slots, std::vector<std::uint64_t>(dag.adjacentPairs().size(), 0)) {}

  static KernelAssignment random(const Dag& dag, int slots, const Gf& gf,
                                 std::uint64_t seed);

  const Dag& dag() const { return *dag_; }
  int slots() const { return static_cast<int>(values_.size()); }

  std::uint64_t kernel(int slot, int pair_index) const {
    checkSlot(slot);
    return values_[slot][pair_index];
  }
  std::uint64_t kernel(int slot, EdgeId e1, EdgeId e2) const {
    checkSlot(slot);
    int idx = dag_->pairIndex(e1, e2);
    if (idx < 0) throw UnknownEdge("non-adjacent pair");
    return values_[slot][idx];
  }
  void set(int slot, int pair_index, std::uint64_t v) {
    checkSlot(slot);
    values_[slot][pair_index] = v;
  }
  const std::vector<std::uint64_t>& slotValues(int slot) const {
    checkSlot(slot);
    return values_[slot];
  }

 private:
  void checkSlot(int slot) const {
    if (slot < 0 || slot >= slots()) throw SlotOutOfRange();
  }
  const Dag* dag_;
  std::vector<std::vector<std::uint64_t>> values_;
};

/// Channel gain m_{e2;e1} at one slot: sum over all e1->e2 paths of the
/// kernel products, computed by forward DP in topological order.
/// 1 when e1 == e2, 0 when e2 is not downstream of e1.
std::uint64_t channelGain(const Dag& dag, const Gf& gf,
                          const KernelAssignment& asg, int slot, EdgeId e1,
                          EdgeId e2);

/// Gains from e1 to every edge at once (same DP, one pass).
std::vector<std::uint64_t> channelGainsFrom(const Dag& dag, const Gf& gf,
                                            const KernelAssignment& asg,
                                            int slot, EdgeId e1);

/// |In(v)| x |Out(u)| matrix; entry (i,j) is the gain from the j-th outgoing
/// edge of u to the i-th incoming edge of v.
Matrix nodeChannelMatrix(const Dag& dag, const Gf& gf,
                         const KernelAssignment& asg, int slot, NodeId u,
                         NodeId v);

/// tau x tau diagonal matrix with the per-slot scalar gain from src_edge to
/// dst_edge on the diagonal.
Matrix blockDiagGain(const Dag& dag, const Gf& gf, const KernelAssignment& asg,
                     EdgeId src_edge, EdgeId dst_edge);

}  // namespace ana

#endif
