#ifndef ANA_POLY_HPP
#define ANA_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ana/dag.hpp"
#include "ana/gf.hpp"
#include "ana/network.hpp"

namespace ana {

using BigInt = boost::multiprecision::cpp_int;

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("polynomial term budget exceeded") {}
};

inline constexpr size_t kDefaultTermBudget = 1'000'000;

/// Sorted (variable, exponent) pairs, exponents > 0. Variables are indices
/// into the owning Dag's adjacentPairs() list.
struct Monomial {
  std::vector<std::pair<int, int>> factors;
  auto operator<=>(const Monomial&) const = default;
  int degree() const {
    int d = 0;
    for (auto [v, e] : factors) d += e;
    return d;
  }
};

Monomial mulMonomial(const Monomial& a, const Monomial& b);

/// Exact sparse multivariate polynomial over arbitrary-precision integers.
/// No zero coefficients are stored; equality is structural.
class SparsePoly {
 public:
  SparsePoly() = default;
  static SparsePoly constant(BigInt c);
  static SparsePoly variable(int var);

  bool isZero() const { return terms_.empty(); }
  size_t termCount() const { return terms_.size(); }
  int totalDegree() const;
  const std::map<Monomial, BigInt>& terms() const { return terms_; }

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

  SparsePoly mulBudgeted(const SparsePoly& o, size_t budget) const;

  /// Drops every term containing a variable outside kept.
  SparsePoly restrictTo(const std::set<int>& kept) const;

  std::uint64_t evaluate(const Gf& gf,
                         const std::vector<std::uint64_t>& values) const;

  void addTerm(Monomial m, BigInt c);

 private:
  std::map<Monomial, BigInt> terms_;
};

/// g = (num/den) * h with num/den a nonzero reduced rational. The zero
/// polynomial is equivalent only to zero (with c = 1).
struct Equivalence {
  bool equivalent = false;
  BigInt num = 0, den = 1;
};

Equivalence equivalent(const SparsePoly& g, const SparsePoly& h);

/// The exact channel-gain polynomial from e1 to e2 (path-sum of kernel
/// products), computed by DP; throws BudgetExceeded when the running term
/// count passes the budget.
SparsePoly symbolicChannelGain(const Dag& dag, EdgeId e1, EdgeId e2,
                               size_t budget = kDefaultTermBudget);

/// Gain from s_i to d_j of the network.
SparsePoly symbolicSessionGain(const AnaNetwork& net, int j, int i,
                               size_t budget = kDefaultTermBudget);

/// alpha = m31 m23 m12 and beta = m21 m32 m13, exactly.
std::pair<SparsePoly, SparsePoly> alphaBetaSymbolic(
    const AnaNetwork& net, size_t budget = kDefaultTermBudget);

struct FactorCheckResult {
  bool pass = false;
  SegmentList segments;
  std::string detail;
};

/// Symbolic audit of the cut-driven factor structure of m_{e_d; e_s}:
/// with a single chain of 1-edge cuts the gain must equal the product of
/// the consecutive segment gains with pairwise non-equivalent factors;
/// with cut value >= 2 no single-edge product decomposition may exist.
FactorCheckResult factorCheck(const AnaNetwork& net, EdgeId e_s, EdgeId e_d,
                              size_t budget = kDefaultTermBudget);
FactorCheckResult factorCheck(const Dag& dag, EdgeId e_s, EdgeId e_d,
                              size_t budget = kDefaultTermBudget);

}  // namespace ana

#endif
