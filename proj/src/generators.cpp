#include "ana/generators.hpp"

#include <string>
#include <vector>

#include "ana/rng.hpp"

namespace ana {

namespace {

SessionTerminals standardTerminals() {
  return {{"s1", "s2", "s3"}, {"d1", "d2", "d3"}};
}

/// Adds a path tail -> ... -> head with `len` edges labeled prefix1..N,
/// creating len-1 interior nodes named prefix + "n" + index.
void addChain(DagBuilder& b, const std::string& tail, const std::string& head,
              int len, const std::string& prefix) {
  std::string prev = tail;
  for (int k = 1; k < len; ++k) {
    std::string mid = prefix + "n" + std::to_string(k);
    b.node(mid);
    b.edge(prefix + std::to_string(k), prev, mid);
    prev = mid;
  }
  b.edge(prefix + std::to_string(len), prev, head);
}

}  // namespace

AnaNetwork genDegenerate(std::uint64_t seed) {
  Rng rng(deriveSeed(seed, 11));
  const int len1 = 1 + static_cast<int>(rng.below(3));
  const int len2 = 1 + static_cast<int>(rng.below(3));

  DagBuilder b;
  for (const char* n : {"s1", "s2", "s3", "d1", "d2", "d3", "a", "g", "h"})
    b.node(n);
  b.edge("es1", "s1", "a");
  b.edge("es2", "s2", "a");
  addChain(b, "a", "g", len1, "e");
  b.edge("es3", "s3", "g");
  b.edge("ed3", "g", "d3");
  addChain(b, "g", "h", len2, "f");
  b.edge("ed1", "h", "d1");
  b.edge("ed2", "h", "d2");
  return AnaNetwork::validate(b.build(), standardTerminals());
}

AnaNetwork genFeasible(std::uint64_t seed) {
  Rng rng(deriveSeed(seed, 13));
  const int depth = 1 + static_cast<int>(rng.below(3));

  DagBuilder b;
  for (const char* n : {"s1", "s2", "s3", "d1", "d2", "d3"}) b.node(n);
  std::vector<std::string> prev;
  for (int i = 0; i < 3; ++i) {
    std::string a = "a" + std::to_string(i + 1);
    b.node(a);
    b.edge("es" + std::to_string(i + 1), "s" + std::to_string(i + 1), a);
    prev.push_back(a);
  }
  for (int l = 1; l <= depth; ++l) {
    std::vector<std::string> cur;
    for (int j = 0; j < 3; ++j) {
      std::string c = "c" + std::to_string(l) + std::to_string(j + 1);
      b.node(c);
      cur.push_back(c);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        b.edge("x" + std::to_string(l) + std::to_string(i + 1) +
                   std::to_string(j + 1),
               prev[i], cur[j]);
    prev = cur;
  }
  for (int j = 0; j < 3; ++j)
    b.edge("ed" + std::to_string(j + 1), prev[j], "d" + std::to_string(j + 1));

  AnaNetwork net = AnaNetwork::validate(b.build(), standardTerminals());
  FeasibilityReport rep = feasibilityCheck(net);
  if (!rep.schemeFeasible(2))
    throw GenerationFailed("crossbar instance failed the feasibility check");
  return net;
}

AnaNetwork genRandomLayered(const GenSpec& spec) {
  if (spec.layers < 2 || spec.width < 1)
    throw GenerationFailed("need layers >= 2 and width >= 1");
  const int L = spec.layers, W = spec.width;

  for (int attempt = 0; attempt < 200; ++attempt) {
    Rng rng(deriveSeed(spec.seed, 17 + attempt));
    DagBuilder b;
    for (const char* n : {"s1", "s2", "s3", "d1", "d2", "d3"}) b.node(n);
    auto name = [](int l, int w) {
      return "n" + std::to_string(l) + "_" + std::to_string(w);
    };
    for (int l = 0; l < L; ++l)
      for (int w = 0; w < W; ++w) b.node(name(l, w));

    for (int l = 0; l + 1 < L; ++l) {
      std::vector<std::vector<char>> take(W, std::vector<char>(W, 0));
      for (int i = 0; i < W; ++i)
        for (int j = 0; j < W; ++j) take[i][j] = rng.below(2) == 0;
      for (int i = 0; i < W; ++i) {
        bool any = false;
        for (int j = 0; j < W; ++j) any = any || take[i][j];
        if (!any) take[i][rng.below(W)] = 1;
      }
      for (int j = 0; j < W; ++j) {
        bool any = false;
        for (int i = 0; i < W; ++i) any = any || take[i][j];
        if (!any) take[rng.below(W)][j] = 1;
      }
      for (int i = 0; i < W; ++i)
        for (int j = 0; j < W; ++j)
          if (take[i][j])
            b.edge("x" + std::to_string(l) + "_" + std::to_string(i) + "_" +
                       std::to_string(j),
                   name(l, i), name(l + 1, j));
    }
    for (int i = 0; i < 3; ++i)
      b.edge("es" + std::to_string(i + 1), "s" + std::to_string(i + 1),
             name(0, rng.below(W)));
    for (int j = 0; j < 3; ++j)
      b.edge("ed" + std::to_string(j + 1), name(L - 1, rng.below(W)),
             "d" + std::to_string(j + 1));

    try {
      return AnaNetwork::validate(b.build(), standardTerminals());
    } catch (const AnaValidationError&) {
      continue;
    }
  }
  throw GenerationFailed("no valid instance within the retry cap");
}

AnaNetwork genAlignmentGap() {
  DagBuilder b;
  for (const char* n : {"s1", "s2", "s3", "d1", "d2", "d3", "p", "r2", "r3",
                        "u1", "v1", "u2", "v2", "q2", "q3", "w"})
    b.node(n);
  b.edge("es1", "s1", "p");
  b.edge("es2", "s2", "r2");
  b.edge("es3", "s3", "r3");
  b.edge("a1", "p", "u1");
  b.edge("a2", "p", "u2");
  b.edge("b1", "r2", "u1");
  b.edge("b2", "r2", "q2");
  b.edge("b3", "r3", "u2");
  b.edge("b4", "r3", "q3");
  b.edge("c1", "u1", "v1");
  b.edge("c2", "u2", "v2");
  b.edge("f1", "v1", "q3");
  b.edge("f2", "v1", "w");
  b.edge("f3", "v2", "w");
  b.edge("f4", "v2", "q2");
  b.edge("ed1", "w", "d1");
  b.edge("ed2", "q2", "d2");
  b.edge("ed3", "q3", "d3");
  return AnaNetwork::validate(b.build(), standardTerminals());
}

}  // namespace ana
