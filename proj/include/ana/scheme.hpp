#ifndef ANA_SCHEME_HPP
#define ANA_SCHEME_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ana/channel.hpp"
#include "ana/gf.hpp"
#include "ana/mc.hpp"
#include "ana/network.hpp"

namespace ana {

struct SlotMismatch : std::runtime_error {
  SlotMismatch() : std::runtime_error("assignment must have 2n+1 slots") {}
};
struct RankDeficient : std::runtime_error {
  explicit RankDeficient(int session)
      : std::runtime_error("combined receive matrix of session " +
                           std::to_string(session + 1) + " is rank deficient"),
        session(session) {}
  int session;
};

/// One constructed instance of the alignment scheme: tau = 2n+1 slots,
/// message lengths (n+1, n, n), per-slot precoding rows stacked into V_i,
/// and the diagonal per-pair channel matrices M[j][i].
struct SchemeInstance {
  const AnaNetwork* net = nullptr;
  Gf gf;
  int n = 0;
  int tau = 0;
  KernelAssignment asg;
  std::array<Matrix, 3> V;                  // tau x l_i
  std::array<std::array<Matrix, 3>, 3> M;   // M[j][i], tau x tau diagonal

  int messageLength(int i) const { return i == 0 ? n + 1 : n; }
};

SchemeInstance buildPrecoding(const AnaNetwork& net, const Gf& gf, int n,
                              const KernelAssignment& asg);

struct AlignmentReport {
  bool c1 = false;  // span(M13 V3) == span(M12 V2)
  bool c3 = false;  // span(M23 V3) in span(M21 V1)
  bool c5 = false;  // span(M32 V2) in span(M31 V1)
  std::array<int, 3> rank_s{};  // rank of [M_ii V_i  M_i? V_?]
  bool fullRank(int n) const {
    for (int r : rank_s)
      if (r != 2 * n + 1) return false;
    return true;
  }
};

AlignmentReport checkAlignment(const SchemeInstance& inst);

enum class HSetVariant { H1, H2, H3, H1Tilde };

/// The alignment polynomial sets as gain-product descriptors (2n+1 each).
std::vector<GainExpr> buildHSets(const AnaNetwork& net, int n,
                                 HSetVariant variant);

struct DecodeReport {
  std::array<Matrix, 3> U;  // l_j x tau decoders
  bool desired_identity = false;   // U_j M_jj V_j == I for all j
  bool interference_zero = false;  // U_j M_ji V_i == 0 for all i != j
  bool success = false;
  int retries_used = 0;
  std::array<std::vector<std::uint64_t>, 3> sent, recovered;
};

/// U_j = top l_j rows of the inverse of [M_jj V_j  M_j? V_?]; verifies the
/// zero-forcing identities exactly. Throws RankDeficient if some S_j is
/// singular.
DecodeReport buildDecoders(const SchemeInstance& inst);

/// Full pipeline at a random point: precode, mix through the channel,
/// decode, compare symbol-exact. Unlucky draws (a generically nonzero
/// determinant hitting zero) are retried up to `retries` times.
DecodeReport simulateEndToEnd(
    const AnaNetwork& net, const Gf& gf, int n, std::uint64_t seed,
    const std::array<std::vector<std::uint64_t>, 3>& messages,
    int retries = 3);

/// Random messages of lengths (n+1, n, n).
std::array<std::vector<std::uint64_t>, 3> randomMessages(const Gf& gf, int n,
                                                         std::uint64_t seed);

}  // namespace ana

#endif
