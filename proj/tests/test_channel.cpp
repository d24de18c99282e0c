#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ana/channel.hpp"
#include "helpers.hpp"

using namespace ana;
using namespace ana::testing;

TEST_CASE("gain conventions") {
  Dag d = randomDag(3);
  Gf gf;
  auto asg = KernelAssignment::random(d, 1, gf, 5);
  for (EdgeId e = 0; e < d.edgeCount(); ++e)
    CHECK(channelGain(d, gf, asg, 0, e, e) == 1);
  for (EdgeId e1 = 0; e1 < d.edgeCount(); ++e1)
    for (EdgeId e2 = 0; e2 < d.edgeCount(); ++e2)
      if (e1 != e2 && !d.edgeUpstream(e1, e2))
        CHECK(channelGain(d, gf, asg, 0, e1, e2) == 0);
}

TEST_CASE("gain equals path enumeration") {
  Gf gf;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Dag d = randomDag(seed, 6, 10);
    for (int pt = 0; pt < 5; ++pt) {
      auto asg = KernelAssignment::random(d, 1, gf, deriveSeed(seed, pt));
      for (EdgeId e1 = 0; e1 < d.edgeCount(); ++e1) {
        auto gains = channelGainsFrom(d, gf, asg, 0, e1);
        for (EdgeId e2 = 0; e2 < d.edgeCount(); ++e2) {
          std::uint64_t expect = brutePathGain(d, gf, asg, 0, e1, e2);
          CAPTURE(seed);
          CHECK(channelGain(d, gf, asg, 0, e1, e2) == expect);
          CHECK(gains[e2] == expect);
        }
      }
    }
  }
}

TEST_CASE("gain multiplies across a single-edge cut") {
  Gf gf;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Dag d = randomDag(seed, 6, 10);
    auto asg = KernelAssignment::random(d, 1, gf, deriveSeed(seed, 77));
    for (EdgeId e1 = 0; e1 < d.edgeCount(); ++e1)
      for (EdgeId e2 = 0; e2 < d.edgeCount(); ++e2) {
        if (!d.edgeUpstream(e1, e2)) continue;
        for (EdgeId c : d.oneEdgeCuts(d.head(e1), d.tail(e2))) {
          std::uint64_t whole = channelGain(d, gf, asg, 0, e1, e2);
          std::uint64_t left = channelGain(d, gf, asg, 0, e1, c);
          std::uint64_t right = channelGain(d, gf, asg, 0, c, e2);
          CHECK(whole == gf.mul(left, right));
        }
      }
  }
}

TEST_CASE("node channel matrix entries") {
  DagBuilder b;
  for (const char* n : {"a", "b", "c", "d"}) b.node(n);
  b.edge("ab", "a", "b");
  b.edge("ac", "a", "c");
  b.edge("bd", "b", "d");
  b.edge("cd", "c", "d");
  b.edge("ad", "a", "d");
  Dag d = b.build();
  Gf gf;
  auto asg = KernelAssignment::random(d, 1, gf, 9);
  Matrix m = nodeChannelMatrix(d, gf, asg, 0, d.nodeIndex("a"),
                               d.nodeIndex("d"));
  REQUIRE(m.rows() == 3);  // in-edges of d
  REQUIRE(m.cols() == 3);  // out-edges of a
  const auto& ins = d.inEdges(d.nodeIndex("d"));
  const auto& outs = d.outEdges(d.nodeIndex("a"));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(m.at(r, c) == channelGain(d, gf, asg, 0, outs[c], ins[r]));
}

TEST_CASE("block diagonal gain uses one slot per row") {
  Dag d = randomDag(11, 6, 10);
  Gf gf;
  const int tau = 4;
  auto asg = KernelAssignment::random(d, tau, gf, 21);
  EdgeId e1 = d.topoEdges().front(), e2 = d.topoEdges().back();
  Matrix m = blockDiagGain(d, gf, asg, e1, e2);
  REQUIRE(m.rows() == tau);
  REQUIRE(m.cols() == tau);
  for (int r = 0; r < tau; ++r)
    for (int c = 0; c < tau; ++c) {
      if (r == c)
        CHECK(m.at(r, c) == channelGain(d, gf, asg, r, e1, e2));
      else
        CHECK(m.at(r, c) == 0);
    }
}

TEST_CASE("assignments are deterministic and slot-checked") {
  Dag d = randomDag(2);
  Gf gf;
  auto a = KernelAssignment::random(d, 3, gf, 42);
  auto b = KernelAssignment::random(d, 3, gf, 42);
  auto c = KernelAssignment::random(d, 3, gf, 43);
  bool same = true, differ = false;
  for (int s = 0; s < 3; ++s) {
    same = same && a.slotValues(s) == b.slotValues(s);
    differ = differ || a.slotValues(s) != c.slotValues(s);
  }
  CHECK(same);
  if (!d.adjacentPairs().empty()) CHECK(differ);
  bool slots_differ =
      a.slotValues(0) != a.slotValues(1) || d.adjacentPairs().empty();
  CHECK(slots_differ);
  CHECK_THROWS_AS(a.kernel(3, 0), SlotOutOfRange);
  CHECK_THROWS_AS(a.slotValues(-1), SlotOutOfRange);
}
