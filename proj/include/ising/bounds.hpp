#pragma once

#include <map>
#include <string>
#include <vector>

#include "ising/boolfn.hpp"
#include "ising/norms.hpp"

namespace ising {

enum class BoundKind {
  multilevel,     // min over derivative levels and partitions
  linfty,         // t^{2/d} / (n max|a|^{2/d})
  hanson_wright,  // min(t^2/hs^2, t/op)
  bonami,         // t / hs
  degree3,        // three-branch form for homogeneous cubics, h = 0
  convex_plp,     // threshold-per-p form for convex Lipschitz functions
  quad_upper,     // upper tail of nonnegative definite quadratic forms
  quad_lower,     // lower tail of the same
};

struct BranchInfo {
  int k = 0;              // derivative level (formula kinds)
  std::string partition;  // partition label of the active branch
};

/// A tail bound evaluated as a nonincreasing function t -> bound(t).
/// Formula kinds return 2 exp(-c * g(t)); threshold kinds invert an
/// increasing threshold function s(p) and return 4 exp(-p*(t)) where
/// p*(t) = sup{p : constant * s(p) <= t}, resolved conservatively on a
/// precomputed p-grid so the result stays a valid upper bound.
class TailBound {
 public:
  /// Theorem-style multilevel bound: norms ||E grad^k f(X)||_I for all
  /// k <= deg f and partitions I of [k].
  static TailBound multilevel(const TetrahedralPolynomial& poly,
                              const ExactLaw& law, double c_d,
                              int order_cap = kDefaultOrderCap,
                              const NormOptions& norm_opts = {});

  static TailBound hanson_wright(double hs, double op, double c);
  static TailBound bonami(double hs, double c);

  /// For a homogeneous coefficient tensor: bound with the single branch
  /// t^{2/d} / (n * max|a|^{2/d}).
  static TailBound linfty(const SymmetricTensor& A, double c);

  /// Three-branch bound for a homogeneous cubic with symmetric tetrahedral
  /// coefficient tensor under a symmetric (h = 0) law.
  static TailBound degree3(const SymmetricTensor& A, const ExactLaw& law,
                           double c, const NormOptions& norm_opts = {});

  /// Convex Lipschitz threshold bound: tail mass 4 exp(-p / K^2) at
  /// threshold C * ||grad||_{{1},p}; `grad` is the linear-case gradient.
  static TailBound convex_plp(std::vector<double> grad, double C, double K);

  /// Cumulative thresholds of the nonnegative-definite quadratic-form
  /// bound; A must be symmetric with smallest eigenvalue >= -1e-9.
  static TailBound quad_upper(const SymmetricTensor& A, double C_K,
                              const NormOptions& norm_opts = {});
  static TailBound quad_lower(const SymmetricTensor& A, double C_K,
                              const NormOptions& norm_opts = {});

  double eval(double t) const;
  BranchInfo active_branch(double t) const;

  /// Copy with the calibratable constant replaced.
  TailBound with_constant(double value) const;
  double constant() const;
  /// True when increasing the constant tightens (lowers) the bound.
  bool tighter_when_larger() const;

  BoundKind kind() const { return kind_; }
  const std::map<std::string, double>& constants() const { return constants_; }
  const std::map<std::string, double>& precomputed_norms() const {
    return norms_;
  }

 private:
  struct Level {
    int k;
    std::string partition;
    int block_count;
    double norm;
  };

  BoundKind kind_ = BoundKind::multilevel;
  std::map<std::string, double> constants_;
  std::map<std::string, double> norms_;
  std::string calib_name_ = "c";
  std::vector<Level> levels_;        // formula kinds
  std::vector<double> p_grid_;       // threshold kinds
  std::vector<double> s_grid_;       // raw threshold values on p_grid_
  double exponent_scale_ = 1.0;      // divides p in the tail mass (1/K^2)

  double threshold_inverse(double t) const;
};

/// Upper/lower deviation thresholds of the quadratic-form bound at a given
/// p, together with the tail mass 4 e^{-p}. Checks nonnegative definiteness
/// (smallest eigenvalue >= -1e-9 by iterative estimate).
struct QuadThresholds {
  double upper;
  double lower;
  double tail_mass;
};
QuadThresholds quad_bounds(const SymmetricTensor& A, double p, double C_K,
                           const NormOptions& norm_opts = {});

/// Survival data on an increasing positive t-grid.
struct SurvivalCurve {
  std::vector<double> t;
  std::vector<double> survival;
  std::vector<double> stderr_;
  std::size_t samples = 0;
};

/// Largest constant (in the tightening direction of the bound) such that
/// bound(t) >= survival(t) + 2 stderr(t) on every grid point; bisection to
/// `rel_tol`. Returns `cap` when the curve never binds. For kinds whose
/// constant loosens the bound as it grows (the C_K scale of threshold
/// bounds), the minimal valid constant is returned instead.
double calibrate_constant(const TailBound& bound, const SurvivalCurve& curve,
                          double cap = 1e6, double rel_tol = 1e-4);

/// Re-centering of a homogeneous multilinear form by lower-degree
/// corrections so that every expected derivative of order 1..d-1 vanishes
/// under the law; built top-down from exact moments.
TetrahedralPolynomial recentered_polynomial(const TetrahedralPolynomial& poly,
                                            const ExactLaw& law);

}  // namespace ising
