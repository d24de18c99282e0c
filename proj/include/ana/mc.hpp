#ifndef ANA_MC_HPP
#define ANA_MC_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ana/channel.hpp"
#include "ana/gf.hpp"
#include "ana/network.hpp"
#include "ana/poly.hpp"

namespace ana {

/// A product of session channel gains with alpha/beta powers; the only
/// expression family the scheme analysis needs.
struct GainExpr {
  struct Factor {
    int dst, src;  // 0-based session indices: gain m_{dst+1, src+1}
  };
  std::vector<Factor> gains;
  int alpha_pow = 0;
  int beta_pow = 0;

  GainExpr& gain(int dst, int src) {
    gains.push_back({dst, src});
    return *this;
  }
  GainExpr& alpha(int k = 1) {
    alpha_pow += k;
    return *this;
  }
  GainExpr& beta(int k = 1) {
    beta_pow += k;
    return *this;
  }
  std::string describe() const;
};

/// Evaluate the expression at one slot of an assignment.
std::uint64_t evalGainExpr(const AnaNetwork& net, const Gf& gf,
                           const KernelAssignment& asg, int slot,
                           const GainExpr& expr);

/// Symbolic counterpart via the exact oracle (budget-guarded).
SparsePoly symbolicGainExpr(const AnaNetwork& net, const GainExpr& expr,
                            size_t budget = kDefaultTermBudget);

struct McVerdict {
  enum class Kind {
    IdenticallyRelated,  // probabilistic, carries the failure bound
    Distinct,            // certain, witnessed by a point
    DegenerateH          // reference expression vanished at every trial
  };
  Kind kind = Kind::IdenticallyRelated;
  int trials = 0;
  std::uint64_t degree_bound = 0;  // per-trial Schwartz-Zippel numerator
  std::uint64_t modulus = 0;
  std::uint64_t witness_seed = 0;  // seed of the distinguishing point
  std::uint64_t constant = 0;      // c with g = c*h at the anchor point

  /// Aggregate false-"identical" probability bound: trials * D / p.
  double failureBound() const {
    return static_cast<double>(trials) * static_cast<double>(degree_bound) /
           static_cast<double>(modulus);
  }
};

inline constexpr int kDefaultMcTrials = 8;

/// Schwartz-Zippel test of g being a nonzero constant multiple of h:
/// anchor a point with h != 0, fix c = g/h there, then require g - c h = 0
/// at fresh points. A nonzero evaluation certifies distinctness.
McVerdict mcEquivalent(const AnaNetwork& net, const Gf& gf, const GainExpr& g,
                       const GainExpr& h, int trials, std::uint64_t seed);

/// The six pairwise product non-equivalences the cross cut values decide:
/// {m11 m32 vs m12 m31, m11 m23 vs m13 m21, m22 m31 vs m21 m32,
///  m22 m13 vs m23 m12, m33 m21 vs m31 m23, m33 m12 vs m32 m13}.
std::array<McVerdict, 6> mcCofConditions(const AnaNetwork& net, const Gf& gf,
                                         int trials, std::uint64_t seed);

/// Row evaluator for the generic linear-independence test: value of one
/// expression at one fresh variable copy (slot).
using RowFn =
    std::function<std::uint64_t(const KernelAssignment&, int slot)>;

/// Determinant test on the row-invariant matrix built from N expressions
/// evaluated at N independent kernel draws; independent iff some trial
/// determinant is nonzero.
McVerdict mcLinearIndependence(const AnaNetwork& net, const Gf& gf,
                               const std::vector<RowFn>& exprs,
                               std::uint64_t degree_bound, int trials,
                               std::uint64_t seed);
McVerdict mcLinearIndependence(const AnaNetwork& net, const Gf& gf,
                               const std::vector<GainExpr>& exprs, int trials,
                               std::uint64_t seed);

/// Degree bound: longest path length (in edges) times the number of
/// channel-gain factors, alpha/beta counting three gains each.
std::uint64_t totalDegreeBound(const AnaNetwork& net, const GainExpr& expr);
int longestPathEdges(const Dag& dag);

}  // namespace ana

#endif
