#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ana/generators.hpp"
#include "ana/io.hpp"

using namespace ana;

TEST_CASE("json round trip is stable") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    AnaNetwork net = genFeasible(seed);
    std::string text = serializeNetworkJson(net);
    AnaNetwork back = parseNetworkJson(text);
    CHECK(serializeNetworkJson(back) == text);
    CHECK(back.dag().edgeCount() == net.dag().edgeCount());
    CHECK(back.terminals().sources == net.terminals().sources);
    CHECK(back.terminals().destinations == net.terminals().destinations);
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parseNetworkJson("not json"), ParseError);
  CHECK_THROWS_AS(parseNetworkJson("[]"), ParseError);
  CHECK_THROWS_AS(parseNetworkJson(R"({"nodes":[],"edges":[]})"), ParseError);
  CHECK_THROWS_AS(
      parseNetworkJson(R"({"nodes":[1],"edges":[],"sessions":[]})"),
      ParseError);
  CHECK_THROWS_AS(
      parseNetworkJson(
          R"({"nodes":["a"],"edges":[{"id":"e"}],"sessions":[]})"),
      ParseError);
  // wrong session count
  CHECK_THROWS_AS(
      parseNetworkJson(R"({"nodes":["a"],"edges":[],"sessions":[]})"),
      ParseError);
  // edge endpoint missing from the node list
  CHECK_THROWS(parseNetworkJson(
      R"({"nodes":["a"],"edges":[{"id":"e","tail":"a","head":"zz"}],
          "sessions":[{"source":"a","destination":"a"},
                      {"source":"a","destination":"a"},
                      {"source":"a","destination":"a"}]})"));
}

TEST_CASE("validation failures surface through parsing") {
  // structurally fine JSON, but s1 cannot reach d3
  std::string text = R"({
    "nodes": ["s1","s2","s3","d1","d2","d3","m","m2"],
    "edges": [
      {"id":"es1","tail":"s1","head":"m"},
      {"id":"es2","tail":"s2","head":"m"},
      {"id":"es3","tail":"s3","head":"m2"},
      {"id":"ed1","tail":"m","head":"d1"},
      {"id":"ed2","tail":"m","head":"d2"},
      {"id":"ed3","tail":"m2","head":"d3"},
      {"id":"c","tail":"m2","head":"m"}
    ],
    "sessions": [
      {"source":"s1","destination":"d1"},
      {"source":"s2","destination":"d2"},
      {"source":"s3","destination":"d3"}
    ]})";
  CHECK_THROWS_AS(parseNetworkJson(text), AnaValidationError);
}

TEST_CASE("dot export lists every edge") {
  AnaNetwork net = genDegenerate(0);
  std::string dot = toDot(net);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"s1\" [shape=box]") != std::string::npos);
  for (EdgeId e = 0; e < net.dag().edgeCount(); ++e)
    CHECK(dot.find("label=\"" + net.dag().edgeLabel(e) + "\"") !=
          std::string::npos);
}
