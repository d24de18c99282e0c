#include <atomic>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ana/generators.hpp"
#include "ana/io.hpp"
#include "ana/mc.hpp"
#include "ana/poly.hpp"
#include "ana/rng.hpp"
#include "ana/scheme.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

// (i1, i2, j1, j2) for the six cross cut-value conditions, matching the
// order of mcCofConditions.
constexpr int kCrossPairs[6][4] = {{0, 1, 0, 2}, {0, 2, 0, 1}, {1, 0, 1, 2},
                                   {1, 2, 1, 0}, {2, 0, 2, 1}, {2, 1, 2, 0}};

std::string edgeSetLabels(const ana::Dag& dag,
                          const std::set<ana::EdgeId>& s) {
  if (s.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (ana::EdgeId e : s) {
    if (!first) out += ", ";
    out += dag.edgeLabel(e);
    first = false;
  }
  return out + "}";
}

json edgeSetJson(const ana::Dag& dag, const std::set<ana::EdgeId>& s) {
  json arr = json::array();
  for (ana::EdgeId e : s) arr.push_back(dag.edgeLabel(e));
  return arr;
}

ana::Gf makeField(int bits) {
  return ana::Gf(bits == 31 ? ana::kPrime31 : ana::kPrime61);
}

int cmdAnalyze(const std::string& file, bool as_json, bool mc, bool dot,
               std::uint64_t seed, int bits) {
  ana::AnaNetwork net = ana::loadNetworkFile(file);
  ana::CutSets cuts(net);
  ana::FeasibilityReport rep = ana::feasibilityCheck(net);
  ana::Gf gf = makeField(bits);

  json doc;
  doc["file"] = file;
  for (int i = 0; i < 3; ++i) {
    doc["cut_sets"]["S" + std::to_string(i + 1)] =
        edgeSetJson(net.dag(), cuts.S(i));
    doc["cut_sets"]["D" + std::to_string(i + 1)] =
        edgeSetJson(net.dag(), cuts.D(i));
  }
  doc["degenerate"] = rep.degeneracy.degenerate;
  if (rep.degeneracy.degenerate) {
    doc["degeneracy_witness"] = {
        {"sessions", {rep.degeneracy.i + 1, rep.degeneracy.j + 1}},
        {"source_side", net.dag().edgeLabel(rep.degeneracy.shared_s)},
        {"dest_side", net.dag().edgeLabel(rep.degeneracy.shared_d)}};
  }
  doc["gtc"]["disjointness"] = {{"holds", rep.gtc1.holds},
                                {"witness", rep.gtc1.witness}};
  for (int k = 0; k < 3; ++k) {
    std::string key = "session" + std::to_string(k + 1);
    doc["gtc"]["cut_values"][key] = {{"holds", rep.ec_pair[k].holds},
                                     {"witness", rep.ec_pair[k].witness}};
    doc["gtc"]["cut_removal"][key] = {{"holds", rep.cut_removal[k].holds},
                                      {"witness", rep.cut_removal[k].witness}};
  }
  doc["h1"] = rep.h1;
  doc["k1"] = rep.k1;
  doc["h2"] = rep.h2;
  doc["k2"] = rep.k2;
  doc["scheme_feasible_n1"] = rep.schemeFeasible(1);
  doc["scheme_feasible_n2"] = rep.schemeFeasible(2);

  if (mc) {
    auto verdicts = ana::mcCofConditions(net, gf, ana::kDefaultMcTrials, seed);
    json arr = json::array();
    for (int k = 0; k < 6; ++k) {
      const auto& v = verdicts[k];
      bool identical = v.kind == ana::McVerdict::Kind::IdenticallyRelated;
      arr.push_back(
          {{"pair", k},
           {"cut_is_one",
            ana::crossCutCheck(net, kCrossPairs[k][0], kCrossPairs[k][1],
                               kCrossPairs[k][2], kCrossPairs[k][3]) ==
                ana::CrossCut::CutIsOne},
           {"mc_identical", identical},
           {"failure_bound", identical ? v.failureBound() : 0.0}});
    }
    doc["mc_cross_products"] = arr;
    for (auto [variant, name] :
         {std::pair{ana::HSetVariant::H1, "h1"},
          std::pair{ana::HSetVariant::H1Tilde, "h1_tilde"}}) {
      auto exprs = ana::buildHSets(net, 1, variant);
      auto v = ana::mcLinearIndependence(net, gf, exprs,
                                         ana::kDefaultMcTrials, seed);
      bool indep = v.kind == ana::McVerdict::Kind::Distinct;
      doc["mc_alignment_sets"][name] = {
          {"independent", indep},
          {"failure_bound", indep ? 0.0 : v.failureBound()}};
    }
  }

  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "network: " << file << "\n";
    for (int i = 0; i < 3; ++i)
      std::cout << "  S" << i + 1 << " = "
                << edgeSetLabels(net.dag(), cuts.S(i)) << "   D" << i + 1
                << " = " << edgeSetLabels(net.dag(), cuts.D(i)) << "\n";
    std::cout << "degenerate (alpha ~ beta): "
              << (rep.degeneracy.degenerate ? "yes" : "no");
    if (rep.degeneracy.degenerate)
      std::cout << "  [sessions " << rep.degeneracy.i + 1 << ","
                << rep.degeneracy.j + 1 << "; "
                << net.dag().edgeLabel(rep.degeneracy.shared_s) << " / "
                << net.dag().edgeLabel(rep.degeneracy.shared_d) << "]";
    std::cout << "\n";
    auto line = [](const std::string& name, const ana::ConditionVerdict& v) {
      std::cout << "  " << name << ": " << (v.holds ? "holds" : "FAILS");
      if (!v.holds && !v.witness.empty()) std::cout << "  (" << v.witness << ")";
      std::cout << "\n";
    };
    line("bottleneck disjointness", rep.gtc1);
    for (int k = 0; k < 3; ++k)
      line("cut values, session " + std::to_string(k + 1), rep.ec_pair[k]);
    for (int k = 0; k < 3; ++k)
      line("cut removal, session " + std::to_string(k + 1),
           rep.cut_removal[k]);
    std::cout << "  H1=" << rep.h1 << " K1=" << rep.k1 << " H2=" << rep.h2
              << " K2=" << rep.k2 << "\n";
    std::cout << "scheme feasible: n=1 "
              << (rep.schemeFeasible(1) ? "yes" : "no") << ", n>=2 "
              << (rep.schemeFeasible(2) ? "yes" : "no") << "\n";
    if (mc) {
      for (const auto& e : doc["mc_cross_products"])
        std::cout << "  cross product pair " << e["pair"] << ": cut=1 "
                  << (e["cut_is_one"].get<bool>() ? "yes" : "no")
                  << ", mc identical "
                  << (e["mc_identical"].get<bool>() ? "yes" : "no") << "\n";
      for (const auto& [name, e] : doc["mc_alignment_sets"].items())
        std::cout << "  alignment set " << name << ": "
                  << (e["independent"].get<bool>() ? "independent"
                                                   : "dependent")
                  << " (failure bound "
                  << e["failure_bound"].get<double>() << ")\n";
    }
  }
  if (dot) std::cout << ana::toDot(net);
  return rep.schemeFeasible(1) ? kExitFeasible : kExitInfeasible;
}

int cmdSimulate(const std::string& file, bool as_json, int n, int trials,
                std::uint64_t seed, int bits, int jobs) {
  ana::AnaNetwork net = ana::loadNetworkFile(file);
  ana::Gf gf = makeField(bits);

  std::atomic<int> ok{0}, rank_fail{0}, retry_total{0};
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t; (t = next.fetch_add(1)) < trials;) {
      std::uint64_t s = ana::deriveSeed(seed, t);
      auto msgs = ana::randomMessages(gf, n, s);
      try {
        auto rep = ana::simulateEndToEnd(net, gf, n, s, msgs);
        retry_total += rep.retries_used;
        if (rep.success) ++ok;
      } catch (const ana::RankDeficient&) {
        ++rank_fail;
      }
    }
  };
  const int nthreads = std::max(1, std::min(jobs, trials));
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  const int tau = 2 * n + 1;
  json doc = {{"file", file},
              {"n", n},
              {"tau", tau},
              {"trials", trials},
              {"successes", ok.load()},
              {"rank_deficient", rank_fail.load()},
              {"retries", retry_total.load()},
              {"rate_tuple",
               {double(n + 1) / tau, double(n) / tau, double(n) / tau}}};
  if (ok == trials) {
    auto inst = ana::buildPrecoding(
        net, gf, n,
        ana::KernelAssignment::random(net.dag(), tau, gf,
                                      ana::deriveSeed(seed, 0x5a5a)));
    auto align = ana::checkAlignment(inst);
    doc["alignment"] = {{"c1", align.c1},
                        {"c3", align.c3},
                        {"c5", align.c5},
                        {"ranks", align.rank_s}};
  }
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "simulate n=" << n << " tau=" << tau << ": " << ok << "/"
              << trials << " decoded";
    if (rank_fail) std::cout << ", " << rank_fail << " rank-deficient";
    std::cout << ", " << retry_total << " retries\n";
    if (doc.contains("alignment"))
      std::cout << "  alignment c1/c3/c5 all "
                << (doc["alignment"]["c1"].get<bool>() &&
                            doc["alignment"]["c3"].get<bool>() &&
                            doc["alignment"]["c5"].get<bool>()
                        ? "hold"
                        : "FAIL")
                << ", ranks " << doc["alignment"]["ranks"] << "\n";
    std::cout << "  rate tuple (" << n + 1 << "/" << tau << ", " << n << "/"
              << tau << ", " << n << "/" << tau << ")\n";
  }
  return ok == trials ? kExitFeasible : kExitInfeasible;
}

int cmdOracle(const std::string& file, bool as_json) {
  ana::AnaNetwork net = ana::loadNetworkFile(file);
  json doc;
  bool consistent = true;

  auto [alpha, beta] = ana::alphaBetaSymbolic(net);
  ana::Equivalence ab = ana::equivalent(alpha, beta);
  doc["alpha_beta"] = {{"equivalent", ab.equivalent}};
  if (ab.equivalent)
    doc["alpha_beta"]["constant"] =
        ab.num.str() + (ab.den == 1 ? "" : "/" + ab.den.str());
  ana::DegeneracyVerdict deg = ana::degeneracyCheck(net);
  doc["alpha_beta"]["graph_verdict"] = deg.degenerate;
  consistent = consistent && (ab.equivalent == deg.degenerate);

  json factors = json::array();
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      auto res = ana::factorCheck(net, net.sourceEdge(i),
                                  net.destinationEdge(j));
      const char* kind =
          res.segments.kind == ana::SegmentList::Kind::Zero ? "zero"
          : res.segments.kind == ana::SegmentList::Kind::Factored
              ? "factored"
              : "irreducible";
      factors.push_back({{"gain", "m" + std::to_string(j + 1) +
                                      std::to_string(i + 1)},
                         {"kind", kind},
                         {"pass", res.pass},
                         {"detail", res.detail}});
      consistent = consistent && res.pass;
    }
  doc["factorizations"] = factors;

  json crosses = json::array();
  for (const auto& p : kCrossPairs) {
    int i1 = p[0], i2 = p[1], j1 = p[2], j2 = p[3];
    auto m = [&](int j, int i) { return ana::symbolicSessionGain(net, j, i); };
    ana::Equivalence eq = ana::equivalent(m(j1, i1) * m(j2, i2),
                                          m(j1, i2) * m(j2, i1));
    bool cut_one = ana::crossCutCheck(net, i1, i2, j1, j2) ==
                   ana::CrossCut::CutIsOne;
    crosses.push_back({{"sources", {i1 + 1, i2 + 1}},
                       {"destinations", {j1 + 1, j2 + 1}},
                       {"cut_is_one", cut_one},
                       {"products_equivalent", eq.equivalent}});
    consistent = consistent && (cut_one == eq.equivalent);
  }
  doc["cross_products"] = crosses;
  doc["consistent"] = consistent;

  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "alpha vs beta: "
              << (ab.equivalent ? "equivalent (exact)" : "distinct")
              << ", graph verdict "
              << (deg.degenerate ? "degenerate" : "nondegenerate") << "\n";
    for (const auto& f : doc["factorizations"])
      std::cout << "  " << f["gain"].get<std::string>() << ": "
                << f["kind"].get<std::string>() << " "
                << (f["pass"].get<bool>() ? "ok" : "MISMATCH " +
                                                       f["detail"].get<std::string>())
                << "\n";
    for (const auto& c : doc["cross_products"])
      std::cout << "  cross " << c["sources"] << "x" << c["destinations"]
                << ": cut=1 " << (c["cut_is_one"].get<bool>() ? "yes" : "no")
                << ", products equivalent "
                << (c["products_equivalent"].get<bool>() ? "yes" : "no")
                << "\n";
    std::cout << (consistent ? "all identities verified"
                             : "INCONSISTENCY detected")
              << "\n";
  }
  return consistent ? kExitFeasible : kExitInfeasible;
}

int cmdGen(const std::string& kind, std::uint64_t seed, int layers, int width,
           const std::string& out, bool as_json, bool dot, int bits) {
  ana::AnaNetwork net = [&] {
    if (kind == "degenerate") return ana::genDegenerate(seed);
    if (kind == "feasible") return ana::genFeasible(seed);
    return ana::genRandomLayered({layers, width, seed});
  }();
  std::string text = ana::serializeNetworkJson(net);
  if (out.empty()) {
    std::cout << text;
  } else {
    ana::writeNetworkFile(net, out);
    std::cout << "wrote " << out << "\n";
    std::string tmp = out;
    return cmdAnalyze(tmp, as_json, false, dot, seed, bits);
  }
  return kExitFeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-unicast asymptotic network alignment toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false, mc = false, dot = false;
  std::uint64_t seed = 0;
  int bits = 61, jobs = 1;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--seed", seed, "root RNG seed");
  app.add_option("--field-bits", bits, "prime field size")
      ->check(CLI::IsMember({31, 61}));
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string file, out, kind = "random-layered";
  int n = 1, trials = 100, layers = 3, width = 3;

  auto* analyze = app.add_subcommand("analyze", "feasibility analysis");
  analyze->add_option("file", file)->required();
  analyze->add_flag("--mc", mc, "add Monte Carlo cross-checks");
  analyze->add_flag("--dot", dot, "emit Graphviz text");

  auto* simulate = app.add_subcommand("simulate", "end-to-end decode trials");
  simulate->add_option("file", file)->required();
  simulate->add_option("--n", n, "symbol extension parameter")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--trials", trials)->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "exact symbolic checks");
  oracle->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "construct corpus networks");
  gen->add_option("--kind", kind)
      ->check(CLI::IsMember({"degenerate", "feasible", "random-layered"}));
  gen->add_option("--layers", layers)->check(CLI::Range(2, 1000));
  gen->add_option("--width", width)->check(CLI::PositiveNumber);
  gen->add_option("--out", out, "output path (stdout when omitted)");
  gen->add_flag("--dot", dot, "emit Graphviz text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (analyze->parsed())
      return cmdAnalyze(file, as_json, mc, dot, seed, bits);
    if (simulate->parsed())
      return cmdSimulate(file, as_json, n, trials, seed, bits, jobs);
    if (oracle->parsed()) return cmdOracle(file, as_json);
    return cmdGen(kind, seed, layers, width, out, as_json, dot, bits);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
