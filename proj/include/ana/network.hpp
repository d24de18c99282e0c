#ifndef ANA_NETWORK_HPP
#define ANA_NETWORK_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ana/dag.hpp"

namespace ana {

struct AnaValidationError : std::runtime_error {
  enum class Kind { DuplicateTerminal, TerminalDegree, Reachability };
  Kind kind;
  AnaValidationError(Kind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
};

struct SessionTerminals {
  std::array<std::string, 3> sources;
  std::array<std::string, 3> destinations;
};

/// A validated 3-unicast ANA network: three distinct source/destination
/// terminals, single source/destination edges, full cross reachability.
class AnaNetwork {
 public:
  static AnaNetwork validate(Dag dag, const SessionTerminals& terminals);

  const Dag& dag() const { return dag_; }
  NodeId source(int i) const { return src_[i]; }
  NodeId destination(int j) const { return dst_[j]; }
  EdgeId sourceEdge(int i) const { return src_edge_[i]; }
  EdgeId destinationEdge(int j) const { return dst_edge_[j]; }
  SessionTerminals terminals() const;

 private:
  Dag dag_;
  std::array<NodeId, 3> src_{}, dst_{};
  std::array<EdgeId, 3> src_edge_{}, dst_edge_{};
};

/// The shared-bottleneck sets S[i;{j,k}] and D[i;{j,k}] for every index
/// combination with j != k (i may coincide with j or k).
class CutSets {
 public:
  explicit CutSets(const AnaNetwork& net);

  /// S[i;{j,k}]: 1-edge cuts separating s_i from both d_j and d_k, minus
  /// the s_i source edge. Indices are 0-based.
  const std::set<EdgeId>& S(int i, int j, int k) const;
  /// D[i;{j,k}]: 1-edge cuts separating both s_j and s_k from d_i, minus
  /// the d_i destination edge.
  const std::set<EdgeId>& D(int i, int j, int k) const;
  /// Shorthands with all-distinct indices.
  const std::set<EdgeId>& S(int i) const;
  const std::set<EdgeId>& D(int i) const;

 private:
  // indexed [i][pair] where pair = index of the unordered {j,k}
  std::array<std::array<std::set<EdgeId>, 3>, 3> s_, d_;
  static int pairSlot(int j, int k);
};

std::set<EdgeId> setIntersect(const std::set<EdgeId>& a,
                              const std::set<EdgeId>& b);

struct DegeneracyVerdict {
  bool degenerate = false;
  // present when degenerate: indices and one witness edge from each side
  int i = -1, j = -1;
  EdgeId shared_s = -1, shared_d = -1;
};

/// Graph-theoretic test for alpha being equivalent to beta: some pair of
/// distinct sessions shares both a source-side and a destination-side
/// bottleneck.
DegeneracyVerdict degeneracyCheck(const AnaNetwork& net, const CutSets& cuts);
inline DegeneracyVerdict degeneracyCheck(const AnaNetwork& net) {
  return degeneracyCheck(net, CutSets(net));
}

enum class CrossCut { CutIsOne, CutGeqTwo };

/// Whether EC({s_i1, s_i2}, {d_j1, d_j2}) equals 1, which decides the
/// product equivalence m_{j1,i1} m_{j2,i2} vs m_{j1,i2} m_{j2,i1}.
CrossCut crossCutCheck(const AnaNetwork& net, int i1, int i2, int j1, int j2);

struct ConditionVerdict {
  bool holds = true;
  std::string witness;  // empty when the condition holds
};

/// Per-condition verdicts for the feasibility characterization. gtc1 is
/// the pairwise bottleneck-disjointness condition; per session k,
/// ec_pair[k] holds the two cross cut-value conditions and cut_removal[k]
/// the connectivity-after-deletion condition.
struct FeasibilityReport {
  ConditionVerdict gtc1;
  std::array<ConditionVerdict, 3> ec_pair;
  std::array<ConditionVerdict, 3> cut_removal;
  DegeneracyVerdict degeneracy;
  bool h1 = false;  // session-1 alignment set independent at n = 1
  bool k1 = false;  // swapped session-1 set at n = 1
  bool h2 = false;  // n >= 2
  bool k2 = false;
  /// Full scheme feasibility for a given extension parameter.
  bool schemeFeasible(int n) const;
};

FeasibilityReport feasibilityCheck(const AnaNetwork& net);

struct SegmentList {
  enum class Kind { Zero, Irreducible, Factored } kind = Kind::Zero;
  /// When factored: the N sorted interior 1-edge cuts; the N+1 segments are
  /// (e_s..c_1), (c_1..c_2), ..., (c_N..e_d).
  std::vector<EdgeId> boundaries;
};

/// Factor structure of the channel gain from e_s to e_d, driven entirely by
/// the edge-cut value between head(e_s) and tail(e_d).
SegmentList factorChannelGain(const AnaNetwork& net, EdgeId e_s, EdgeId e_d);
SegmentList factorChannelGain(const Dag& dag, EdgeId e_s, EdgeId e_d);

struct LemmaReport {
  struct Entry {
    std::string name;
    bool pass = true;
    std::string counterexample;
  };
  std::vector<Entry> entries;
  bool allPass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

/// Checks the structural facts relating the S and D cut sets (they are
/// theorems, so a failure flags an implementation bug). The optional
/// alpha_beta_equivalent verdict, when supplied, additionally checks that
/// degenerate networks have all cut sets nonempty.
LemmaReport verifyStructuralLemmas(
    const AnaNetwork& net,
    std::optional<bool> alpha_beta_equivalent = std::nullopt);

}  // namespace ana

#endif
