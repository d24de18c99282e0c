#include "ana/poly.hpp"

#include <algorithm>
#include <limits>

namespace ana {

Monomial mulMonomial(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors.reserve(a.factors.size() + b.factors.size());
  size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    if (a.factors[i].first == b.factors[j].first) {
      r.factors.emplace_back(a.factors[i].first,
                             a.factors[i].second + b.factors[j].second);
      ++i;
      ++j;
    } else if (a.factors[i].first < b.factors[j].first) {
      r.factors.push_back(a.factors[i++]);
    } else {
      r.factors.push_back(b.factors[j++]);
    }
  }
  for (; i < a.factors.size(); ++i) r.factors.push_back(a.factors[i]);
  for (; j < b.factors.size(); ++j) r.factors.push_back(b.factors[j]);
  return r;
}

SparsePoly SparsePoly::constant(BigInt c) {
  SparsePoly p;
  if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
  return p;
}

SparsePoly SparsePoly::variable(int var) {
  SparsePoly p;
  p.terms_.emplace(Monomial{{{var, 1}}}, BigInt(1));
  return p;
}

int SparsePoly::totalDegree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void SparsePoly::addTerm(Monomial m, BigInt c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.addTerm(m, -c);
  return r;
}

SparsePoly SparsePoly::mulBudgeted(const SparsePoly& o, size_t budget) const {
  SparsePoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      r.addTerm(mulMonomial(ma, mb), ca * cb);
      if (r.terms_.size() > budget) throw BudgetExceeded();
    }
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  return mulBudgeted(o, std::numeric_limits<size_t>::max());
}

SparsePoly SparsePoly::restrictTo(const std::set<int>& kept) const {
  SparsePoly r;
  for (const auto& [m, c] : terms_) {
    bool keep = true;
    for (auto [v, e] : m.factors)
      if (!kept.count(v)) {
        keep = false;
        break;
      }
    if (keep) r.addTerm(m, c);
  }
  return r;
}

std::uint64_t SparsePoly::evaluate(
    const Gf& gf, const std::vector<std::uint64_t>& values) const {
  std::uint64_t acc = 0;
  const BigInt p(gf.modulus());
  for (const auto& [m, c] : terms_) {
    BigInt red = c % p;
    if (red < 0) red += p;
    std::uint64_t term = static_cast<std::uint64_t>(red);
    for (auto [v, e] : m.factors)
      term = gf.mul(term, gf.pow(values.at(v), e));
    acc = gf.add(acc, term);
  }
  return acc;
}

Equivalence equivalent(const SparsePoly& g, const SparsePoly& h) {
  Equivalence out;
  if (g.isZero() || h.isZero()) {
    out.equivalent = g.isZero() && h.isZero();
    out.num = 1;
    return out;
  }
  if (g.termCount() != h.termCount()) return out;
  auto ig = g.terms().begin();
  auto ih = h.terms().begin();
  // c = g0/h0; every pair must satisfy g_k * h0 == h_k * g0.
  const BigInt g0 = ig->second, h0 = ih->second;
  for (; ig != g.terms().end(); ++ig, ++ih) {
    if (ig->first != ih->first) return out;
    if (ig->second * h0 != ih->second * g0) return out;
  }
  BigInt d = boost::multiprecision::gcd(boost::multiprecision::abs(g0),
                                        boost::multiprecision::abs(h0));
  out.num = g0 / d;
  out.den = h0 / d;
  if (out.den < 0) {
    out.num = -out.num;
    out.den = -out.den;
  }
  out.equivalent = true;
  return out;
}

SparsePoly symbolicChannelGain(const Dag& dag, EdgeId e1, EdgeId e2,
                               size_t budget) {
  if (e1 < 0 || e1 >= dag.edgeCount()) throw UnknownEdge(std::to_string(e1));
  if (e2 < 0 || e2 >= dag.edgeCount()) throw UnknownEdge(std::to_string(e2));
  if (e1 == e2) return SparsePoly::constant(1);
  std::vector<SparsePoly> g(dag.edgeCount());
  g[e1] = SparsePoly::constant(1);
  const auto& topo = dag.topoEdges();
  size_t total = 0;
  for (size_t i = dag.topoRank(e1) + 1; i < topo.size(); ++i) {
    EdgeId f = topo[i];
    SparsePoly acc;
    for (EdgeId e : dag.inEdges(dag.tail(f))) {
      if (g[e].isZero()) continue;
      acc = acc + g[e].mulBudgeted(SparsePoly::variable(dag.pairIndex(e, f)),
                                   budget);
    }
    total += acc.termCount();
    if (acc.termCount() > budget || total > 4 * budget) throw BudgetExceeded();
    g[f] = std::move(acc);
    if (f == e2) break;
  }
  return g[e2];
}

SparsePoly symbolicSessionGain(const AnaNetwork& net, int j, int i,
                               size_t budget) {
  return symbolicChannelGain(net.dag(), net.sourceEdge(i),
                             net.destinationEdge(j), budget);
}

std::pair<SparsePoly, SparsePoly> alphaBetaSymbolic(const AnaNetwork& net,
                                                    size_t budget) {
  auto m = [&](int j, int i) { return symbolicSessionGain(net, j, i, budget); };
  SparsePoly alpha =
      m(2, 0).mulBudgeted(m(1, 2), budget).mulBudgeted(m(0, 1), budget);
  SparsePoly beta =
      m(1, 0).mulBudgeted(m(2, 1), budget).mulBudgeted(m(0, 2), budget);
  return {alpha, beta};
}

FactorCheckResult factorCheck(const Dag& dag, EdgeId e_s, EdgeId e_d,
                              size_t budget) {
  FactorCheckResult res;
  res.segments = factorChannelGain(dag, e_s, e_d);
  SparsePoly whole = symbolicChannelGain(dag, e_s, e_d, budget);

  switch (res.segments.kind) {
    case SegmentList::Kind::Zero:
      res.pass = whole.isZero();
      if (!res.pass) res.detail = "cut value 0 but gain nonzero";
      return res;

    case SegmentList::Kind::Factored: {
      const auto& cuts = res.segments.boundaries;
      std::vector<SparsePoly> factors;
      factors.push_back(symbolicChannelGain(dag, e_s, cuts.front(), budget));
      for (size_t i = 0; i + 1 < cuts.size(); ++i)
        factors.push_back(
            symbolicChannelGain(dag, cuts[i], cuts[i + 1], budget));
      factors.push_back(symbolicChannelGain(dag, cuts.back(), e_d, budget));
      SparsePoly prod = SparsePoly::constant(1);
      for (const auto& f : factors) prod = prod.mulBudgeted(f, budget);
      if (!(prod == whole)) {
        res.detail = "segment product differs from the whole gain";
        return res;
      }
      for (size_t a = 0; a < factors.size(); ++a)
        for (size_t b = a + 1; b < factors.size(); ++b)
          if (equivalent(factors[a], factors[b]).equivalent) {
            res.detail = "two segment factors are equivalent";
            return res;
          }
      res.pass = true;
      return res;
    }

    case SegmentList::Kind::Irreducible: {
      // No interior edge may split the gain into a two-segment product.
      for (EdgeId e = 0; e < dag.edgeCount(); ++e) {
        if (e == e_s || e == e_d) continue;
        if (!dag.edgeUpstream(e_s, e) || !dag.edgeUpstream(e, e_d)) continue;
        SparsePoly left = symbolicChannelGain(dag, e_s, e, budget);
        SparsePoly right = symbolicChannelGain(dag, e, e_d, budget);
        if (equivalent(left.mulBudgeted(right, budget), whole).equivalent) {
          res.detail =
              "gain decomposes at non-cut edge " + dag.edgeLabel(e);
          return res;
        }
      }
      res.pass = true;
      return res;
    }
  }
  return res;
}

FactorCheckResult factorCheck(const AnaNetwork& net, EdgeId e_s, EdgeId e_d,
                              size_t budget) {
  return factorCheck(net.dag(), e_s, e_d, budget);
}

}  // namespace ana
