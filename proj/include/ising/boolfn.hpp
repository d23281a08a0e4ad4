#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ising/model.hpp"
#include "ising/tensor.hpp"

namespace ising {

/// Default cap on the order of materialized derivative tensors (n^k doubles).
inline constexpr int kDefaultOrderCap = 4;

/// Multilinear (affine in every variable) polynomial on R^n in the
/// Fourier-Walsh basis: f(x) = sum_S a_S prod_{i in S} x_i, with S a
/// bit-encoded subset of sites. This is the unique such representation of
/// any function on {-1,1}^n.
struct TetrahedralPolynomial {
  int n = 0;
  std::vector<std::pair<std::uint32_t, double>> terms;  // sorted by mask

  /// Sorts, merges duplicates, drops exact zeros, validates masks < 2^n.
  static TetrahedralPolynomial from_terms(
      int n, std::vector<std::pair<std::uint32_t, double>> terms);

  int degree() const;
  double coefficient(std::uint32_t mask) const;
};

/// In-place character-sum transform: v[S] <- sum_m v[m] chi_S(m), where
/// chi_S(m) = prod_{i in S} sigma_i(m). Length must be a power of two.
void walsh_hadamard(std::vector<double>& v, Exec mode = Exec::Parallel);

/// The unique multilinear polynomial agreeing with `values` on {-1,1}^n;
/// the table is indexed by SpinMask. O(n 2^n) butterfly.
TetrahedralPolynomial walsh_transform(const std::vector<double>& values,
                                      Exec mode = Exec::Parallel);

/// sum_S a_S prod_{i in S} x_i at an arbitrary real point.
double evaluate(const TetrahedralPolynomial& poly, std::span<const double> x);

/// Evaluation at a hypercube point, via the parity of S \ config.
double evaluate_pm1(const TetrahedralPolynomial& poly, SpinMask config);

/// All 2^n subset moments of the law, indexed by subset mask; one
/// Walsh-Hadamard pass over the probability table.
std::vector<double> all_subset_moments(const ExactLaw& law,
                                       Exec mode = Exec::Parallel);

/// Order-k tensor of classical partial derivatives of the multilinear
/// extension at x: entry (i_1..i_k) = d^k f / dx_{i_1}..dx_{i_k}(x).
/// Symmetric, zero on repeated indices; identically zero when k > deg f.
/// Note the convention: for a homogeneous degree-d polynomial written with a
/// symmetric coefficient tensor A, the top derivative equals d! * A.
SymmetricTensor derivative_tensor(const TetrahedralPolynomial& poly, int k,
                                  std::span<const double> x,
                                  int order_cap = kDefaultOrderCap);

/// Entry-wise expectation E d^k f(X) under the law (equivalently, the
/// derivative tensor with tail monomials replaced by their moments).
SymmetricTensor expected_derivative(const TetrahedralPolynomial& poly, int k,
                                    const ExactLaw& law,
                                    int order_cap = kDefaultOrderCap);

/// Same, with the subset moments precomputed by all_subset_moments.
SymmetricTensor expected_derivative(const TetrahedralPolynomial& poly, int k,
                                    const std::vector<double>& subset_moments,
                                    int order_cap = kDefaultOrderCap);

}  // namespace ising
