#pragma once

#include <cstdint>
#include <vector>

#include "ising/kernels.hpp"
#include "ising/partition.hpp"
#include "ising/tensor.hpp"

namespace ising {

/// Result of a norm maximization. `value` is always certified: it equals the
/// underlying bilinear/multilinear form evaluated at `witness`, so it is a
/// valid lower bound of the true supremum even when the search is heuristic.
struct NormResult {
  double value = 0.0;
  std::vector<std::vector<double>> witness;  // one flat array per block
  bool converged = true;
  int restarts_used = 0;
};

struct NormOptions {
  int restarts = 64;
  int max_sweeps = 10000;
  double tol = 1e-12;     // sweep-to-sweep improvement threshold
  int stall_sweeps = 3;   // consecutive small improvements to stop
  std::uint64_t seed = 0x6c8e944d1f3a5b71ULL;
  Exec exec = Exec::Parallel;
  /// Extra deterministic initializations tried before the random restarts;
  /// each entry is one block-vector set matching the partition shape.
  std::vector<std::vector<std::vector<double>>> warm_starts;
};

/// The partition norm: sup of sum_i a_i prod_l x^(l)_{i_{I_l}} over block
/// vectors of unit Euclidean norm. Closed form (Frobenius) for the
/// single-block partition; alternating maximization with multi-restart
/// otherwise (for matrices and the {1}{2} partition this is the classical
/// singular-value power method). Values for two or more blocks are certified
/// lower bounds, not certificates of global optimality.
NormResult partition_norm(const SymmetricTensor& A, const Partition& I,
                          const NormOptions& opts = {});

/// The vector interpolation norm
///   sup{ <x, y> : |y|_2 <= sqrt(p), |y|_inf <= 1 },
/// computed exactly by the sorted water-filling breakpoint scan.
double latala_vector_norm(const std::vector<double>& x, double p);

/// The exact maximizer y of <c, y> over the same feasible set.
std::vector<double> latala_maximizer(const std::vector<double>& c, double p);

/// ||A||_{{1,2},p}: the vector norm applied to the row Euclidean lengths.
/// Exact. A must be square symmetric.
double matrix_norm_12p(const SymmetricTensor& A, double p);

/// ||A||_{{1}{2},p} = sup{ x^T A y : |x|_2,|y|_2 <= sqrt(p),
/// |x|_inf,|y|_inf <= 1 }, by alternating exact water-filling steps with
/// multi-restart; certified lower bound. Witness blocks are x and y.
NormResult matrix_norm_1_2_p(const SymmetricTensor& A, double p,
                             const NormOptions& opts = {});

/// Largest eigenvalue of a symmetric nonnegative matrix (power iteration
/// from the all-ones vector); used for influence-matrix diagnostics.
double opnorm_nonneg_sym(const std::vector<double>& m, int n);

/// Extreme eigenvalues of a symmetric matrix by power iteration with
/// spectral shift; returns {lambda_min, lambda_max}.
std::pair<double, double> sym_eig_extremes(const std::vector<double>& m, int n);

}  // namespace ising
