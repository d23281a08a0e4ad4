#pragma once

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ising/kernels.hpp"

namespace ising {

/// Enumeration limit for full probability tables (2^n doubles).
inline constexpr int kDefaultEnumCap = 20;

/// Thrown when an operation would exceed an enumeration or order cap.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Spin configurations are bit-encoded: bit i set means sigma_i = +1.
using SpinMask = std::uint32_t;

inline int spin(SpinMask m, int i) { return (m >> i) & 1u ? +1 : -1; }

struct SpinConfig {
  std::vector<std::int8_t> spins;  // entries are exactly +1 or -1

  static SpinConfig from_mask(SpinMask m, int n);
  SpinMask to_mask() const;  // rejects entries other than +-1
};

/// Pairwise-interaction model on {-1,+1}^n. The unnormalized weight of a
/// configuration sigma is
///   exp( (1/2) sum_{i,j} J_ij s_i s_j  -  sum_i h_i s_i ),
/// with J symmetric and zero on the diagonal.
struct IsingModel {
  int n = 0;
  std::vector<double> J;  // dense n*n, row-major
  std::vector<double> h;

  double coupling(int i, int j) const {
    return J[static_cast<std::size_t>(i) * n + j];
  }

  /// Builds from sparse triplets (i, j, value). Rejects diagonal entries,
  /// out-of-range indices, non-finite values, and conflicting duplicates
  /// (an asymmetric pair is a conflict, never averaged away).
  static IsingModel from_triplets(
      int n, const std::vector<std::tuple<int, int, double>>& triplets,
      std::vector<double> h);

  void validate() const;
};

/// Full probability table over {-1,1}^n, indexed by SpinMask. Immutable
/// after construction; entries are strictly positive and sum to 1.
struct ExactLaw {
  int n = 0;
  std::vector<double> probs;
};

struct DobrushinReport {
  double rho;         // 1 - max_i sum_j |J_ij|
  double alpha;       // max_i |h_i|
  double max_row_l1;  // max_i sum_j |J_ij|
  bool holds;         // rho > 0
};

DobrushinReport dobrushin_margin(const IsingModel& model);

/// P(sigma_i = +1 | all other coordinates of `rest`). Bit i of `rest` is
/// ignored. Equals 1 / (1 + exp(-2 m_i)) with m_i = sum_j J_ij s_j - h_i.
double conditional_plus_prob(const IsingModel& model, int site, SpinMask rest);
double conditional_plus_prob(const IsingModel& model, int site,
                             const SpinConfig& rest);

/// Log of the unnormalized Gibbs weight of `config`.
double log_weight(const IsingModel& model, SpinMask config);

/// Exact law by enumeration; weights accumulate in the log domain.
/// Throws capacity_error when n exceeds `cap`.
ExactLaw exact_law(const IsingModel& model, int cap = kDefaultEnumCap,
                   Exec mode = Exec::Parallel);

/// E prod_{i in S} X_i for the bit-encoded site set S; moment(law, 0) == 1.
double moment(const ExactLaw& law, SpinMask subset, Exec mode = Exec::Parallel);

/// Mean / variance of a table of per-configuration values under the law.
double expectation(const std::vector<double>& values, const ExactLaw& law,
                   Exec mode = Exec::Parallel);
double variance(const std::vector<double>& values, const ExactLaw& law,
                Exec mode = Exec::Parallel);

}  // namespace ising
