#include "ana/network.hpp"

#include <algorithm>

namespace ana {

namespace {
std::string edgeName(const Dag& d, EdgeId e) { return d.edgeLabel(e); }
}  // namespace

AnaNetwork AnaNetwork::validate(Dag dag, const SessionTerminals& terminals) {
  AnaNetwork net;
  std::set<std::string> seen;
  for (int i = 0; i < 3; ++i) {
    for (const std::string& label :
         {terminals.sources[i], terminals.destinations[i]}) {
      if (!seen.insert(label).second)
        throw AnaValidationError(AnaValidationError::Kind::DuplicateTerminal,
                                 "terminal appears twice: " + label);
    }
  }
  for (int i = 0; i < 3; ++i) {
    net.src_[i] = dag.nodeIndex(terminals.sources[i]);
    net.dst_[i] = dag.nodeIndex(terminals.destinations[i]);
  }
  for (int i = 0; i < 3; ++i) {
    NodeId s = net.src_[i];
    if (!dag.inEdges(s).empty() || dag.outEdges(s).size() != 1)
      throw AnaValidationError(
          AnaValidationError::Kind::TerminalDegree,
          "source " + terminals.sources[i] +
              " must have in-degree 0 and out-degree 1");
    net.src_edge_[i] = dag.outEdges(s)[0];
    NodeId d = net.dst_[i];
    if (dag.inEdges(d).size() != 1 || !dag.outEdges(d).empty())
      throw AnaValidationError(
          AnaValidationError::Kind::TerminalDegree,
          "destination " + terminals.destinations[i] +
              " must have in-degree 1 and out-degree 0");
    net.dst_edge_[i] = dag.inEdges(d)[0];
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!dag.nodeReachesEq(net.src_[i], net.dst_[j]))
        throw AnaValidationError(AnaValidationError::Kind::Reachability,
                                 terminals.destinations[j] +
                                     " is not reachable from " +
                                     terminals.sources[i]);
  net.dag_ = std::move(dag);
  return net;
}

SessionTerminals AnaNetwork::terminals() const {
  SessionTerminals t;
  for (int i = 0; i < 3; ++i) {
    t.sources[i] = dag_.nodeLabel(src_[i]);
    t.destinations[i] = dag_.nodeLabel(dst_[i]);
  }
  return t;
}

std::set<EdgeId> setIntersect(const std::set<EdgeId>& a,
                              const std::set<EdgeId>& b) {
  std::set<EdgeId> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(r, r.begin()));
  return r;
}

int CutSets::pairSlot(int j, int k) { return 3 - j - k; }

CutSets::CutSets(const AnaNetwork& net) {
  const Dag& dag = net.dag();
  // cut[i][j] = 1-edge cuts separating s_i and d_j
  std::array<std::array<std::set<EdgeId>, 3>, 3> cut;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto v = dag.oneEdgeCuts(net.source(i), net.destination(j));
      cut[i][j] = std::set<EdgeId>(v.begin(), v.end());
    }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k) {
        auto s = setIntersect(cut[i][j], cut[i][k]);
        s.erase(net.sourceEdge(i));
        s_[i][pairSlot(j, k)] = std::move(s);
        auto d = setIntersect(cut[j][i], cut[k][i]);
        d.erase(net.destinationEdge(i));
        d_[i][pairSlot(j, k)] = std::move(d);
      }
  }
}

const std::set<EdgeId>& CutSets::S(int i, int j, int k) const {
  return s_[i][pairSlot(j, k)];
}
const std::set<EdgeId>& CutSets::D(int i, int j, int k) const {
  return d_[i][pairSlot(j, k)];
}
const std::set<EdgeId>& CutSets::S(int i) const { return s_[i][i]; }
const std::set<EdgeId>& CutSets::D(int i) const { return d_[i][i]; }

DegeneracyVerdict degeneracyCheck(const AnaNetwork& net, const CutSets& cuts) {
  (void)net;
  DegeneracyVerdict v;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      auto ss = setIntersect(cuts.S(i), cuts.S(j));
      if (ss.empty()) continue;
      auto dd = setIntersect(cuts.D(i), cuts.D(j));
      if (dd.empty()) continue;
      v.degenerate = true;
      v.i = i;
      v.j = j;
      v.shared_s = *ss.begin();
      v.shared_d = *dd.begin();
      return v;
    }
  return v;
}

CrossCut crossCutCheck(const AnaNetwork& net, int i1, int i2, int j1, int j2) {
  std::set<NodeId> U{net.source(i1), net.source(i2)};
  std::set<NodeId> W{net.destination(j1), net.destination(j2)};
  return net.dag().edgeCutValue(U, W) == 1 ? CrossCut::CutIsOne
                                           : CrossCut::CutGeqTwo;
}

bool FeasibilityReport::schemeFeasible(int n) const {
  bool base = gtc1.holds;
  for (const auto& c : ec_pair) base = base && c.holds;
  if (n <= 1) return base;
  for (const auto& c : cut_removal) base = base && c.holds;
  return base;
}

FeasibilityReport feasibilityCheck(const AnaNetwork& net) {
  const Dag& dag = net.dag();
  CutSets cuts(net);
  FeasibilityReport rep;

  rep.degeneracy = degeneracyCheck(net, cuts);
  if (rep.degeneracy.degenerate) {
    rep.gtc1.holds = false;
    rep.gtc1.witness =
        "sessions " + std::to_string(rep.degeneracy.i + 1) + "," +
        std::to_string(rep.degeneracy.j + 1) + " share source bottleneck " +
        edgeName(dag, rep.degeneracy.shared_s) +
        " and destination bottleneck " +
        edgeName(dag, rep.degeneracy.shared_d);
  }

  for (int k = 0; k < 3; ++k) {
    int o1 = (k + 1) % 3, o2 = (k + 2) % 3;
    auto& pair = rep.ec_pair[k];
    for (auto [a, b] : {std::pair{o1, o2}, std::pair{o2, o1}}) {
      if (crossCutCheck(net, k, a, k, b) == CrossCut::CutIsOne) {
        pair.holds = false;
        pair.witness = "EC({s" + std::to_string(k + 1) + ",s" +
                       std::to_string(a + 1) + "},{d" + std::to_string(k + 1) +
                       ",d" + std::to_string(b + 1) + "}) = 1";
        break;
      }
    }

    auto& removal = rep.cut_removal[k];
    auto inter1 = setIntersect(cuts.S(o1), cuts.D(o2));
    auto inter2 = setIntersect(cuts.S(o2), cuts.D(o1));
    std::set<EdgeId> uni = inter1;
    uni.insert(inter2.begin(), inter2.end());
    if (!uni.empty()) {
      auto removed = dag.mostUpstream(uni);
      Dag sub = dag.deleteEdges(removed);
      NodeId s = sub.nodeIndex(dag.nodeLabel(net.source(k)));
      NodeId d = sub.nodeIndex(dag.nodeLabel(net.destination(k)));
      if (!sub.nodeReachesEq(s, d)) {
        removal.holds = false;
        std::string names;
        for (EdgeId e : removed) {
          if (!names.empty()) names += ",";
          names += edgeName(dag, e);
        }
        removal.witness = "removing {" + names + "} disconnects s" +
                          std::to_string(k + 1) + " from d" +
                          std::to_string(k + 1);
      }
    }
  }

  rep.h1 = rep.gtc1.holds && rep.ec_pair[0].holds;
  rep.k1 = rep.h1 && rep.cut_removal[0].holds;
  rep.h2 = rep.k1;
  rep.k2 = rep.k1;
  return rep;
}

SegmentList factorChannelGain(const Dag& dag, EdgeId e_s, EdgeId e_d) {
  SegmentList out;
  NodeId s = dag.head(e_s);
  NodeId d = dag.tail(e_d);
  int ec = dag.edgeCutValue(s, d);
  if (ec == 0) {
    out.kind = SegmentList::Kind::Zero;
  } else if (ec == 1) {
    out.kind = SegmentList::Kind::Factored;
    out.boundaries = dag.oneEdgeCuts(s, d);
  } else {
    out.kind = SegmentList::Kind::Irreducible;
  }
  return out;
}

SegmentList factorChannelGain(const AnaNetwork& net, EdgeId e_s, EdgeId e_d) {
  return factorChannelGain(net.dag(), e_s, e_d);
}

namespace {

void check(LemmaReport& rep, const std::string& name, bool ok,
           const std::string& counterexample) {
  for (auto& e : rep.entries) {
    if (e.name != name) continue;
    if (!ok && e.pass) {
      e.pass = false;
      e.counterexample = counterexample;
    }
    return;
  }
  rep.entries.push_back({name, ok, ok ? "" : counterexample});
}

}  // namespace

LemmaReport verifyStructuralLemmas(const AnaNetwork& net,
                                   std::optional<bool> alpha_beta_equivalent) {
  const Dag& dag = net.dag();
  CutSets cuts(net);
  LemmaReport rep;
  auto name2 = [&](EdgeId a, EdgeId b) {
    return edgeName(dag, a) + "," + edgeName(dag, b);
  };

  // L1: every S_i edge is comparable with every D_j edge (i != j).
  check(rep, "L1", true, "");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (EdgeId a : cuts.S(i))
        for (EdgeId b : cuts.D(j))
          check(rep, "L1",
                dag.edgeRelation(a, b) != EdgeRelation::Unreachable,
                name2(a, b));
    }

  // L2: (D_i ^ D_j) in S_k and the source/destination-swapped version.
  check(rep, "L2", true, "");
  for (int k = 0; k < 3; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    for (EdgeId e : setIntersect(cuts.D(i), cuts.D(j)))
      check(rep, "L2", cuts.S(k).count(e) != 0, edgeName(dag, e));
    for (EdgeId e : setIntersect(cuts.S(i), cuts.S(j)))
      check(rep, "L2", cuts.D(k).count(e) != 0, edgeName(dag, e));
  }

  // L3: edges of S_i \ D_j strictly precede edges of D_j.
  check(rep, "L3", true, "");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (EdgeId a : cuts.S(i)) {
        if (cuts.D(j).count(a)) continue;
        for (EdgeId b : cuts.D(j))
          check(rep, "L3", dag.edgeRelation(a, b) == EdgeRelation::Upstream,
                name2(a, b));
      }
    }

  // L4: D_j ^ D_k nonempty iff S_i meets both D_j and D_k; plus swap.
  check(rep, "L4", true, "");
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    bool lhs = !setIntersect(cuts.D(j), cuts.D(k)).empty();
    bool rhs = !setIntersect(cuts.S(i), cuts.D(j)).empty() &&
               !setIntersect(cuts.S(i), cuts.D(k)).empty();
    check(rep, "L4", lhs == rhs, "D-version at i=" + std::to_string(i + 1));
    bool lhs2 = !setIntersect(cuts.S(j), cuts.S(k)).empty();
    bool rhs2 = !setIntersect(cuts.D(i), cuts.S(j)).empty() &&
                !setIntersect(cuts.D(i), cuts.S(k)).empty();
    check(rep, "L4", lhs2 == rhs2, "S-version at i=" + std::to_string(i + 1));
  }

  // L5: shared destination bottlenecks have a shared source bottleneck
  // weakly upstream of them (and the swapped statement).
  check(rep, "L5", true, "");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      auto ss = setIntersect(cuts.S(i), cuts.S(j));
      auto dd = setIntersect(cuts.D(i), cuts.D(j));
      if (!ss.empty())
        for (EdgeId b : dd) {
          bool found = false;
          for (EdgeId a : ss)
            if (dag.edgeUpstreamEq(a, b)) {
              found = true;
              break;
            }
          check(rep, "L5", found, edgeName(dag, b));
        }
      if (!dd.empty())
        for (EdgeId a : ss) {
          bool found = false;
          for (EdgeId b : dd)
            if (dag.edgeUpstreamEq(a, b)) {
              found = true;
              break;
            }
          check(rep, "L5", found, edgeName(dag, a));
        }
    }

  // L6: pairwise-nonempty generalized S sets force a common edge and the
  // remaining sets nonempty; plus the swapped version for D.
  check(rep, "L6", true, "");
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (const auto& p : perms) {
      int j1 = p[0], j2 = p[1], j3 = p[2];
      {
        const auto& a = cuts.S(i, j1, j2);
        const auto& b = cuts.S(i, j1, j3);
        if (!a.empty() && !b.empty()) {
          bool ok = !setIntersect(a, b).empty() &&
                    !cuts.S(i, j2, j3).empty() && !cuts.S(i).empty();
          check(rep, "L6", ok,
                "S i=" + std::to_string(i + 1) + " j1=" + std::to_string(j1 + 1) +
                    " j2=" + std::to_string(j2 + 1) +
                    " j3=" + std::to_string(j3 + 1));
        }
      }
      {
        const auto& a = cuts.D(i, j1, j2);
        const auto& b = cuts.D(i, j1, j3);
        if (!a.empty() && !b.empty()) {
          bool ok = !setIntersect(a, b).empty() &&
                    !cuts.D(i, j2, j3).empty() && !cuts.D(i).empty();
          check(rep, "L6", ok,
                "D i=" + std::to_string(i + 1) + " j1=" + std::to_string(j1 + 1) +
                    " j2=" + std::to_string(j2 + 1) +
                    " j3=" + std::to_string(j3 + 1));
        }
      }
    }

  // L8 (contrapositive harness): a degenerate network must have every cut
  // set nonempty.
  if (alpha_beta_equivalent.has_value()) {
    check(rep, "L8", true, "");
    if (*alpha_beta_equivalent)
      for (int i = 0; i < 3; ++i) {
        check(rep, "L8", !cuts.S(i).empty(),
              "S" + std::to_string(i + 1) + " empty despite alpha ~ beta");
        check(rep, "L8", !cuts.D(i).empty(),
              "D" + std::to_string(i + 1) + " empty despite alpha ~ beta");
      }
  }

  return rep;
}

}  // namespace ana
