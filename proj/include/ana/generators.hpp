#ifndef ANA_GENERATORS_HPP
#define ANA_GENERATORS_HPP

#include <cstdint>
#include <stdexcept>

#include "ana/network.hpp"

namespace ana {

struct GenerationFailed : std::runtime_error {
  explicit GenerationFailed(const std::string& why)
      : std::runtime_error("generation failed: " + why) {}
};

struct GenSpec {
  int layers = 3;
  int width = 3;
  std::uint64_t seed = 0;
};

/// Chain network where sessions 1 and 2 share a source-side bottleneck and
/// a destination-side bottleneck, with session 3 entering between them.
/// alpha and beta coincide exactly on every such instance.
AnaNetwork genDegenerate(std::uint64_t seed);

/// Layered network with three parallel session corridors and full crossbar
/// layers in between; all feasibility conditions hold (checked before
/// returning).
AnaNetwork genFeasible(std::uint64_t seed);

/// Random layered DAG with ANA terminals attached, rejection-sampled until
/// validation passes.
AnaNetwork genRandomLayered(const GenSpec& spec);

/// Fixed network that satisfies the bottleneck-disjointness and cut-value
/// conditions but fails the session-1 connectivity-after-deletion
/// condition: the alignment set is independent while its swapped variant
/// is not.
AnaNetwork genAlignmentGap();

}  // namespace ana

#endif
