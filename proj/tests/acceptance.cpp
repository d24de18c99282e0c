// Acceptance gate: ten pinned criteria, one verdict line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "ana/generators.hpp"
#include "ana/io.hpp"
#include "ana/mc.hpp"
#include "ana/poly.hpp"
#include "ana/scheme.hpp"
#include "helpers.hpp"

using namespace ana;
using namespace ana::testing;

namespace {

constexpr double kMcBudget = 1e-12;

struct Criterion {
  std::string name;
  double time_budget_s;  // 0 = unbounded
  std::function<bool(std::string&)> body;
};

const int kCrossPairs[6][4] = {{0, 1, 0, 2}, {0, 2, 0, 1}, {1, 0, 1, 2},
                               {1, 2, 1, 0}, {2, 0, 2, 1}, {2, 1, 2, 0}};

bool cutOracle(std::string& why) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Dag d = randomDag(seed, 6, 8);
    Rng rng(deriveSeed(seed, 9001));
    for (int q = 0; q < 4; ++q) {
      std::set<NodeId> U{static_cast<NodeId>(rng.below(d.nodeCount()))};
      std::set<NodeId> W{static_cast<NodeId>(rng.below(d.nodeCount()))};
      if (rng.below(2)) U.insert(static_cast<NodeId>(rng.below(d.nodeCount())));
      if (rng.below(2)) W.insert(static_cast<NodeId>(rng.below(d.nodeCount())));
      if (d.edgeCutValue(U, W) != bruteMinCut(d, U, W) ||
          d.oneEdgeCuts(U, W) != bruteOneCuts(d, U, W)) {
        why = "mismatch at dag seed " + std::to_string(seed);
        return false;
      }
    }
  }
  return true;
}

bool gainOracle(std::string& why) {
  Gf gf;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Dag d = randomDag(seed + 1000, 6, 10);
    const auto& topo = d.topoEdges();
    EdgeId pairs[3][2] = {{topo.front(), topo.back()},
                          {topo.front(), topo[topo.size() / 2]},
                          {topo[topo.size() / 2], topo.back()}};
    SparsePoly polys[3];
    for (int k = 0; k < 3; ++k)
      polys[k] = symbolicChannelGain(d, pairs[k][0], pairs[k][1]);
    for (int pt = 0; pt < 50; ++pt) {
      auto asg = KernelAssignment::random(d, 1, gf, deriveSeed(seed, pt));
      for (int k = 0; k < 3; ++k)
        if (polys[k].evaluate(gf, asg.slotValues(0)) !=
            channelGain(d, gf, asg, 0, pairs[k][0], pairs[k][1])) {
          why = "divergence at dag seed " + std::to_string(seed);
          return false;
        }
    }
  }
  return true;
}

bool factorStructure(std::string& why) {
  int factored = 0, irreducible = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    AnaNetwork net = corpusNetwork(seed + 300);
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        FactorCheckResult r =
            factorCheck(net, net.sourceEdge(i), net.destinationEdge(j));
        if (!r.pass) {
          why = "seed " + std::to_string(seed + 300) + " m" +
                std::to_string(j + 1) + std::to_string(i + 1) + ": " +
                r.detail;
          return false;
        }
        if (r.segments.kind == SegmentList::Kind::Factored) ++factored;
        if (r.segments.kind == SegmentList::Kind::Irreducible) ++irreducible;
      }
  }
  if (factored == 0 || irreducible == 0) {
    why = "corpus missed a structure class";
    return false;
  }
  return true;
}

bool crossProductBiconditional(std::string& why) {
  Gf gf;
  double bound = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    AnaNetwork net = corpusNetwork(seed);
    for (int k = 0; k < 6; ++k) {
      int i1 = kCrossPairs[k][0], i2 = kCrossPairs[k][1],
          j1 = kCrossPairs[k][2], j2 = kCrossPairs[k][3];
      bool cut_one =
          crossCutCheck(net, i1, i2, j1, j2) == CrossCut::CutIsOne;
      bool equal;
      try {
        auto m = [&](int j, int i) {
          return symbolicSessionGain(net, j, i, 20000);
        };
        equal = equivalent(m(j1, i1).mulBudgeted(m(j2, i2), 20000),
                           m(j1, i2).mulBudgeted(m(j2, i1), 20000))
                    .equivalent;
      } catch (const BudgetExceeded&) {
        GainExpr g, h;
        g.gain(j1, i1).gain(j2, i2);
        h.gain(j1, i2).gain(j2, i1);
        McVerdict v = mcEquivalent(net, gf, g, h, kDefaultMcTrials,
                                   deriveSeed(seed, 40 + k));
        equal = v.kind == McVerdict::Kind::IdenticallyRelated;
        if (equal) bound += v.failureBound();
      }
      if (cut_one != equal) {
        why = "seed " + std::to_string(seed) + " pair " + std::to_string(k);
        return false;
      }
    }
  }
  if (bound >= kMcBudget) {
    why = "aggregate MC bound too large";
    return false;
  }
  return true;
}

bool degeneracyBiconditional(std::string& why) {
  Gf gf;
  double bound = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    AnaNetwork net = corpusNetwork(seed);
    bool graph_verdict = degeneracyCheck(net).degenerate;
    bool equal;
    try {
      auto [alpha, beta] = alphaBetaSymbolic(net, 20000);
      equal = equivalent(alpha, beta).equivalent;
    } catch (const BudgetExceeded&) {
      GainExpr a, b;
      a.alpha();
      b.beta();
      McVerdict v =
          mcEquivalent(net, gf, a, b, kDefaultMcTrials, deriveSeed(seed, 50));
      equal = v.kind == McVerdict::Kind::IdenticallyRelated;
      if (equal) bound += v.failureBound();
    }
    if (graph_verdict != equal) {
      why = "seed " + std::to_string(seed);
      return false;
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    AnaNetwork net = genDegenerate(seed);
    auto [alpha, beta] = alphaBetaSymbolic(net);
    if (!degeneracyCheck(net).degenerate || !(alpha == beta)) {
      why = "constructed instance " + std::to_string(seed) +
            " not exactly degenerate";
      return false;
    }
  }
  if (bound >= kMcBudget) {
    why = "aggregate MC bound too large";
    return false;
  }
  return true;
}

bool lemmaSuite(std::string& why) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    AnaNetwork net = corpusNetwork(seed);
    LemmaReport rep = verifyStructuralLemmas(net);
    for (const auto& e : rep.entries)
      if (!e.pass) {
        why = "seed " + std::to_string(seed) + " " + e.name + ": " +
              e.counterexample;
        return false;
      }
  }
  return true;
}

bool dualityDeterminants(std::string& why) {
  Gf gf;
  double bound = 0;
  int indep_checked = 0, dep_checked = 0;
  for (std::uint64_t s = 0; s < 25; ++s) {
    AnaNetwork feas = genFeasible(s % 8);
    for (HSetVariant variant : {HSetVariant::H1, HSetVariant::H1Tilde}) {
      auto exprs = buildHSets(feas, 1, variant);
      McVerdict v =
          mcLinearIndependence(feas, gf, exprs, 8, deriveSeed(s, 60));
      if (v.kind != McVerdict::Kind::Distinct) {
        why = "independent set read as dependent, seed " + std::to_string(s);
        return false;
      }
      ++indep_checked;
    }

    // duplicated column: determinant vanishes identically
    auto dup = buildHSets(feas, 1, HSetVariant::H1);
    dup.back() = dup.front();
    McVerdict vd = mcLinearIndependence(feas, gf, dup, 8, deriveSeed(s, 61));
    if (vd.kind != McVerdict::Kind::IdenticallyRelated) {
      why = "duplicate set read as independent, seed " + std::to_string(s);
      return false;
    }
    bound += vd.failureBound();
    ++dep_checked;

    // alpha and beta coincide on a degenerate network
    AnaNetwork deg = genDegenerate(s % 8);
    GainExpr a, b;
    a.alpha();
    b.beta();
    McVerdict va =
        mcLinearIndependence(deg, gf, {a, b}, 8, deriveSeed(s, 62));
    if (va.kind != McVerdict::Kind::IdenticallyRelated) {
      why = "degenerate pair read as independent, seed " + std::to_string(s);
      return false;
    }
    bound += va.failureBound();
    ++dep_checked;
  }
  if (indep_checked < 50 || dep_checked < 50) {
    why = "set counts below target";
    return false;
  }
  if (bound >= kMcBudget) {
    why = "aggregate MC bound too large";
    return false;
  }
  return true;
}

bool schemeEndToEnd(std::string& why) {
  Gf gf;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    AnaNetwork net = genFeasible(seed);
    for (int n = 1; n <= 3; ++n) {
      int successes = 0;
      for (int trial = 0; trial < 100; ++trial) {
        std::uint64_t s = deriveSeed(deriveSeed(seed, n), trial);
        auto asg =
            KernelAssignment::random(net.dag(), 2 * n + 1, gf, s);
        AlignmentReport rep = checkAlignment(buildPrecoding(net, gf, n, asg));
        if (!rep.c1 || !rep.c3 || !rep.c5) {
          why = "alignment identity failed, seed " + std::to_string(seed) +
                " n " + std::to_string(n);
          return false;
        }
        auto msgs = randomMessages(gf, n, s);
        try {
          DecodeReport dec = simulateEndToEnd(net, gf, n, s, msgs);
          if (dec.success && dec.recovered == msgs) ++successes;
        } catch (const RankDeficient&) {
        }
      }
      if (successes < 100) {
        why = "decode " + std::to_string(successes) + "/100, seed " +
              std::to_string(seed) + " n " + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

bool degenerateConverse(std::string& why) {
  Gf gf;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    AnaNetwork net = genDegenerate(seed);
    for (int n = 1; n <= 2; ++n)
      for (int trial = 0; trial < 100; ++trial) {
        auto asg = KernelAssignment::random(
            net.dag(), 2 * n + 1, gf, deriveSeed(deriveSeed(seed, n), trial));
        SchemeInstance inst = buildPrecoding(net, gf, n, asg);
        Matrix s1 = hcat(matMul(gf, inst.M[0][0], inst.V[0]),
                         matMul(gf, inst.M[0][1], inst.V[1]));
        if (det(gf, s1) != 0) {
          why = "nonzero determinant, seed " + std::to_string(seed);
          return false;
        }
      }
  }
  std::string path = "/tmp/acceptance_deg.json";
  writeNetworkFile(genDegenerate(0), path);
  std::string cmd = std::string(ANACLI_PATH) + " simulate " + path +
                    " --n 1 --trials 10 > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (WEXITSTATUS(status) != 1) {
    why = "simulate exit code " + std::to_string(WEXITSTATUS(status));
    return false;
  }
  return true;
}

bool criterionGap(std::string& why) {
  AnaNetwork gap = genAlignmentGap();
  FeasibilityReport rep = feasibilityCheck(gap);
  bool shape = rep.gtc1.holds && rep.ec_pair[0].holds &&
               rep.ec_pair[1].holds && rep.ec_pair[2].holds &&
               !rep.cut_removal[0].holds;
  if (!shape) {
    why = "condition pattern wrong";
    return false;
  }
  Gf gf;
  auto h1 = buildHSets(gap, 1, HSetVariant::H1);
  auto h1t = buildHSets(gap, 1, HSetVariant::H1Tilde);
  if (mcLinearIndependence(gap, gf, h1, 8, 71).kind !=
      McVerdict::Kind::Distinct) {
    why = "aligned set not independent";
    return false;
  }
  McVerdict v = mcLinearIndependence(gap, gf, h1t, 8, 71);
  if (v.kind != McVerdict::Kind::IdenticallyRelated ||
      v.failureBound() >= kMcBudget) {
    why = "swapped set not dependent";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"cut oracle equivalence", 10, cutOracle},
      {"channel gain oracle equivalence", 30, gainOracle},
      {"gain factor structure", 60, factorStructure},
      {"cross product biconditional", 0, crossProductBiconditional},
      {"degeneracy biconditional", 0, degeneracyBiconditional},
      {"structural lemma suite", 60, lemmaSuite},
      {"duality determinants", 0, dualityDeterminants},
      {"scheme end to end", 300, schemeEndToEnd},
      {"degenerate converse", 30, degenerateConverse},
      {"deletion condition separation", 0, criterionGap},
  };

  int failures = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = criteria[k].body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (ok && criteria[k].time_budget_s > 0 &&
        secs > criteria[k].time_budget_s) {
      ok = false;
      why = "over time budget";
    }
    std::printf("criterion %2zu (%s): %s (%.1fs)%s%s\n", k + 1,
                criteria[k].name.c_str(), ok ? "PASS" : "FAIL", secs,
                why.empty() ? "" : " -- ", why.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
