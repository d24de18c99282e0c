#include "ana/mc.hpp"

#include <algorithm>

#include "ana/rng.hpp"

namespace ana {

std::string GainExpr::describe() const {
  std::string s;
  for (const auto& f : gains)
    s += "m" + std::to_string(f.dst + 1) + std::to_string(f.src + 1) + " ";
  if (alpha_pow) s += "a^" + std::to_string(alpha_pow) + " ";
  if (beta_pow) s += "b^" + std::to_string(beta_pow) + " ";
  if (s.empty()) s = "1";
  return s;
}

namespace {

std::uint64_t sessionGainAt(const AnaNetwork& net, const Gf& gf,
                            const KernelAssignment& asg, int slot, int j,
                            int i) {
  return channelGain(net.dag(), gf, asg, slot, net.sourceEdge(i),
                     net.destinationEdge(j));
}

}  // namespace

std::uint64_t evalGainExpr(const AnaNetwork& net, const Gf& gf,
                           const KernelAssignment& asg, int slot,
                           const GainExpr& expr) {
  std::uint64_t v = 1;
  for (const auto& f : expr.gains)
    v = gf.mul(v, sessionGainAt(net, gf, asg, slot, f.dst, f.src));
  if (expr.alpha_pow || expr.beta_pow) {
    std::uint64_t a = gf.mul(
        gf.mul(sessionGainAt(net, gf, asg, slot, 2, 0),
               sessionGainAt(net, gf, asg, slot, 1, 2)),
        sessionGainAt(net, gf, asg, slot, 0, 1));
    std::uint64_t b = gf.mul(
        gf.mul(sessionGainAt(net, gf, asg, slot, 1, 0),
               sessionGainAt(net, gf, asg, slot, 2, 1)),
        sessionGainAt(net, gf, asg, slot, 0, 2));
    v = gf.mul(v, gf.pow(a, expr.alpha_pow));
    v = gf.mul(v, gf.pow(b, expr.beta_pow));
  }
  return v;
}

SparsePoly symbolicGainExpr(const AnaNetwork& net, const GainExpr& expr,
                            size_t budget) {
  SparsePoly p = SparsePoly::constant(1);
  for (const auto& f : expr.gains)
    p = p.mulBudgeted(symbolicSessionGain(net, f.dst, f.src, budget), budget);
  if (expr.alpha_pow || expr.beta_pow) {
    auto [alpha, beta] = alphaBetaSymbolic(net, budget);
    for (int k = 0; k < expr.alpha_pow; ++k) p = p.mulBudgeted(alpha, budget);
    for (int k = 0; k < expr.beta_pow; ++k) p = p.mulBudgeted(beta, budget);
  }
  return p;
}

int longestPathEdges(const Dag& dag) {
  std::vector<int> len(dag.edgeCount(), 1);
  int best = 0;
  for (EdgeId e : dag.topoEdges()) {
    for (EdgeId prev : dag.inEdges(dag.tail(e)))
      len[e] = std::max(len[e], len[prev] + 1);
    best = std::max(best, len[e]);
  }
  return best;
}

std::uint64_t totalDegreeBound(const AnaNetwork& net, const GainExpr& expr) {
  std::uint64_t L = static_cast<std::uint64_t>(longestPathEdges(net.dag()));
  std::uint64_t factors = expr.gains.size() +
                          3ULL * expr.alpha_pow + 3ULL * expr.beta_pow;
  return L * factors;
}

McVerdict mcEquivalent(const AnaNetwork& net, const Gf& gf, const GainExpr& g,
                       const GainExpr& h, int trials, std::uint64_t seed) {
  McVerdict v;
  v.trials = trials;
  v.modulus = gf.modulus();
  v.degree_bound =
      std::max(totalDegreeBound(net, g), totalDegreeBound(net, h));

  // Anchor: first trial point with h != 0.
  std::uint64_t c = 0;
  bool anchored = false;
  for (int t = 0; t < trials && !anchored; ++t) {
    std::uint64_t s = deriveSeed(seed, 1000 + t);
    auto asg = KernelAssignment::random(net.dag(), 1, gf, s);
    std::uint64_t hv = evalGainExpr(net, gf, asg, 0, h);
    if (hv == 0) continue;
    anchored = true;
    std::uint64_t gv = evalGainExpr(net, gf, asg, 0, g);
    if (gv == 0) {
      // g vanishes where h does not; g = c h would force g != 0 here.
      v.kind = McVerdict::Kind::Distinct;
      v.witness_seed = s;
      return v;
    }
    c = gf.mul(gv, gf.inv(hv));
  }
  if (!anchored) {
    v.kind = McVerdict::Kind::DegenerateH;
    return v;
  }
  v.constant = c;

  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = deriveSeed(seed, 2000 + t);
    auto asg = KernelAssignment::random(net.dag(), 1, gf, s);
    std::uint64_t gv = evalGainExpr(net, gf, asg, 0, g);
    std::uint64_t hv = evalGainExpr(net, gf, asg, 0, h);
    if (gv != gf.mul(c, hv)) {
      v.kind = McVerdict::Kind::Distinct;
      v.witness_seed = s;
      return v;
    }
  }
  v.kind = McVerdict::Kind::IdenticallyRelated;
  return v;
}

std::array<McVerdict, 6> mcCofConditions(const AnaNetwork& net, const Gf& gf,
                                         int trials, std::uint64_t seed) {
  auto prod = [](int j1, int i1, int j2, int i2) {
    GainExpr e;
    return e.gain(j1, i1).gain(j2, i2);
  };
  const std::array<std::pair<GainExpr, GainExpr>, 6> pairs = {{
      {prod(0, 0, 2, 1), prod(0, 1, 2, 0)},  // m11 m32 vs m12 m31
      {prod(0, 0, 1, 2), prod(0, 2, 1, 0)},  // m11 m23 vs m13 m21
      {prod(1, 1, 2, 0), prod(1, 0, 2, 1)},  // m22 m31 vs m21 m32
      {prod(1, 1, 0, 2), prod(1, 2, 0, 1)},  // m22 m13 vs m23 m12
      {prod(2, 2, 1, 0), prod(2, 0, 1, 2)},  // m33 m21 vs m31 m23
      {prod(2, 2, 0, 1), prod(2, 1, 0, 2)},  // m33 m12 vs m32 m13
  }};
  std::array<McVerdict, 6> out;
  for (size_t k = 0; k < pairs.size(); ++k)
    out[k] = mcEquivalent(net, gf, pairs[k].first, pairs[k].second, trials,
                          deriveSeed(seed, 3000 + k));
  return out;
}

McVerdict mcLinearIndependence(const AnaNetwork& net, const Gf& gf,
                               const std::vector<RowFn>& exprs,
                               std::uint64_t degree_bound, int trials,
                               std::uint64_t seed) {
  const int n = static_cast<int>(exprs.size());
  McVerdict v;
  v.trials = trials;
  v.modulus = gf.modulus();
  v.degree_bound = degree_bound * static_cast<std::uint64_t>(n);
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = deriveSeed(seed, 4000 + t);
    auto asg = KernelAssignment::random(net.dag(), n, gf, s);
    Matrix m(n, n);
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col) m.at(row, col) = exprs[col](asg, row);
    if (det(gf, m) != 0) {
      v.kind = McVerdict::Kind::Distinct;  // independent, certified
      v.witness_seed = s;
      return v;
    }
  }
  v.kind = McVerdict::Kind::IdenticallyRelated;  // dependent w.h.p.
  return v;
}

McVerdict mcLinearIndependence(const AnaNetwork& net, const Gf& gf,
                               const std::vector<GainExpr>& exprs, int trials,
                               std::uint64_t seed) {
  std::vector<RowFn> fns;
  std::uint64_t bound = 0;
  fns.reserve(exprs.size());
  for (const auto& e : exprs) {
    bound = std::max(bound, totalDegreeBound(net, e));
    fns.push_back([&net, &gf, e](const KernelAssignment& asg, int slot) {
      return evalGainExpr(net, gf, asg, slot, e);
    });
  }
  return mcLinearIndependence(net, gf, fns, bound, trials, seed);
}

}  // namespace ana
