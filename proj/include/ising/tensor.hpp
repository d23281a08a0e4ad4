#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace ising {

/// Dense d-index array with dimension n per index, row-major (first index
/// slowest). Producers keep it invariant under index permutations; the
/// `tetrahedral` flag additionally asserts vanishing entries on repeated
/// index tuples.
struct SymmetricTensor {
  int order = 0;
  int dim = 0;
  std::vector<double> entries;
  bool tetrahedral = false;

  static SymmetricTensor zeros(int order, int dim) {
    if (order < 1 || dim < 1)
      throw std::invalid_argument("tensor: order and dim must be positive");
    SymmetricTensor t;
    t.order = order;
    t.dim = dim;
    std::size_t sz = 1;
    for (int k = 0; k < order; ++k) sz *= static_cast<std::size_t>(dim);
    t.entries.assign(sz, 0.0);
    return t;
  }

  /// Wraps a row-major n*n matrix as an order-2 tensor.
  static SymmetricTensor from_matrix(int n, std::vector<double> a) {
    if (a.size() != static_cast<std::size_t>(n) * n)
      throw std::invalid_argument("tensor: matrix size mismatch");
    SymmetricTensor t;
    t.order = 2;
    t.dim = n;
    t.entries = std::move(a);
    return t;
  }

  std::size_t flat(std::span<const int> idx) const {
    std::size_t f = 0;
    for (int k = 0; k < order; ++k)
      f = f * static_cast<std::size_t>(dim) + static_cast<std::size_t>(idx[k]);
    return f;
  }

  double at(std::span<const int> idx) const { return entries[flat(idx)]; }
  double& at(std::span<const int> idx) { return entries[flat(idx)]; }
  double at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  /// Writes `value` at every permutation of `idx`.
  void set_sym(std::span<const int> idx, double value) {
    std::vector<int> p(idx.begin(), idx.end());
    std::sort(p.begin(), p.end());
    do {
      entries[flat(p)] = value;
    } while (std::next_permutation(p.begin(), p.end()));
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : entries) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_symmetric(double tol) const {
    std::vector<int> idx(order, 0);
    const std::size_t sz = entries.size();
    for (std::size_t f = 0; f < sz; ++f) {
      std::vector<int> p = idx;
      std::sort(p.begin(), p.end());
      if (std::abs(entries[f] - entries[flat(p)]) > tol) return false;
      for (int k = order - 1; k >= 0; --k) {
        if (++idx[k] < dim) break;
        idx[k] = 0;
      }
    }
    return true;
  }
};

inline double frobenius(const SymmetricTensor& t) {
  double s = 0.0;
  for (double v : t.entries) s += v * v;
  return std::sqrt(s);
}

}  // namespace ising
