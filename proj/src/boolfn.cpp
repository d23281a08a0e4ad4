#include "ising/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ising {

TetrahedralPolynomial TetrahedralPolynomial::from_terms(
    int n, std::vector<std::pair<std::uint32_t, double>> terms) {
  if (n < 0 || n > 31)
    throw std::invalid_argument("polynomial: n must be in [0, 31]");
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  TetrahedralPolynomial p;
  p.n = n;
  for (const auto& [mask, coef] : terms) {
    if (n < 31 && mask >= (std::uint32_t(1) << n))
      throw std::invalid_argument("polynomial: subset outside [n]");
    if (!std::isfinite(coef))
      throw std::invalid_argument("polynomial: non-finite coefficient");
    if (!p.terms.empty() && p.terms.back().first == mask)
      p.terms.back().second += coef;
    else
      p.terms.emplace_back(mask, coef);
  }
  std::erase_if(p.terms, [](const auto& t) { return t.second == 0.0; });
  return p;
}

int TetrahedralPolynomial::degree() const {
  int d = 0;
  for (const auto& [mask, coef] : terms)
    d = std::max(d, std::popcount(mask));
  return d;
}

double TetrahedralPolynomial::coefficient(std::uint32_t mask) const {
  auto it = std::lower_bound(
      terms.begin(), terms.end(), mask,
      [](const auto& t, std::uint32_t m) { return t.first < m; });
  return (it != terms.end() && it->first == mask) ? it->second : 0.0;
}

void walsh_hadamard(std::vector<double>& v, Exec mode) {
  const std::size_t len = v.size();
  if (len == 0 || (len & (len - 1)) != 0)
    throw std::invalid_argument("walsh_hadamard: length must be a power of two");
  for (std::size_t half = 1; half < len; half <<= 1) {
    const std::size_t npairs = len >> 1;
    parallel_for(
        npairs,
        [&](std::size_t t) {
          // Pair t maps to (m0, m0 | half).
          const std::size_t m0 = (t / half) * (half << 1) + (t % half);
          const std::size_t m1 = m0 | half;
          const double lo = v[m0];  // sigma_bit = -1 branch
          const double hi = v[m1];
          v[m0] = hi + lo;
          v[m1] = hi - lo;
        },
        len >= (std::size_t(1) << 14) ? mode : Exec::Serial);
  }
}

TetrahedralPolynomial walsh_transform(const std::vector<double>& values,
                                      Exec mode) {
  const std::size_t len = values.size();
  if (len == 0 || (len & (len - 1)) != 0)
    throw std::invalid_argument("walsh_transform: table length must be 2^n");
  const int n = std::countr_zero(len);
  std::vector<double> v = values;
  walsh_hadamard(v, mode);
  const double scale = std::ldexp(1.0, -n);  // exact division by 2^n
  std::vector<std::pair<std::uint32_t, double>> terms;
  for (std::size_t s = 0; s < len; ++s) {
    const double c = v[s] * scale;
    if (c != 0.0) terms.emplace_back(static_cast<std::uint32_t>(s), c);
  }
  return TetrahedralPolynomial::from_terms(n, std::move(terms));
}

double evaluate(const TetrahedralPolynomial& poly, std::span<const double> x) {
  if (static_cast<int>(x.size()) != poly.n)
    throw std::invalid_argument("evaluate: dimension mismatch");
  double s = 0.0;
  for (const auto& [mask, coef] : poly.terms) {
    double prod = coef;
    for (std::uint32_t m = mask; m != 0; m &= m - 1)
      prod *= x[std::countr_zero(m)];
    s += prod;
  }
  return s;
}

double evaluate_pm1(const TetrahedralPolynomial& poly, SpinMask config) {
  double s = 0.0;
  for (const auto& [mask, coef] : poly.terms) {
    const int par = std::popcount(mask & ~config) & 1;
    s += par ? -coef : coef;
  }
  return s;
}

std::vector<double> all_subset_moments(const ExactLaw& law, Exec mode) {
  std::vector<double> m = law.probs;
  walsh_hadamard(m, mode);
  return m;
}

namespace {

// Shared skeleton of derivative_tensor / expected_derivative: the entry at a
// k-tuple T of distinct indices is sum_{S >= T} a_S * tail(S \ T), where tail
// is either the monomial value at x or the subset moment.
template <class Tail>
SymmetricTensor derivative_impl(const TetrahedralPolynomial& poly, int k,
                                int order_cap, Tail&& tail) {
  if (k < 1 || k > poly.n)
    throw std::invalid_argument("derivative: order k out of range");
  if (k > order_cap)
    throw capacity_error("derivative: order " + std::to_string(k) +
                         " exceeds the tensor order cap " +
                         std::to_string(order_cap));
  SymmetricTensor t = SymmetricTensor::zeros(k, poly.n);
  t.tetrahedral = true;
  std::vector<int> bits;
  std::vector<int> comb(k);
  for (const auto& [mask, coef] : poly.terms) {
    const int sz = std::popcount(mask);
    if (sz < k) continue;
    bits.clear();
    for (std::uint32_t m = mask; m != 0; m &= m - 1)
      bits.push_back(std::countr_zero(m));
    // Iterate k-combinations of the set bits.
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      std::uint32_t tmask = 0;
      for (int i = 0; i < k; ++i) tmask |= std::uint32_t(1) << bits[comb[i]];
      const double base = coef * tail(mask & ~tmask);
      if (base != 0.0) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = bits[comb[i]];
        do {
          t.entries[t.flat(idx)] += base;
        } while (std::next_permutation(idx.begin(), idx.end()));
      }
      int pos = k - 1;
      while (pos >= 0 && comb[pos] == sz - k + pos) --pos;
      if (pos < 0) break;
      ++comb[pos];
      for (int i = pos + 1; i < k; ++i) comb[i] = comb[i - 1] + 1;
    }
  }
  return t;
}

}  // namespace

SymmetricTensor derivative_tensor(const TetrahedralPolynomial& poly, int k,
                                  std::span<const double> x, int order_cap) {
  if (static_cast<int>(x.size()) != poly.n)
    throw std::invalid_argument("derivative_tensor: dimension mismatch");
  return derivative_impl(poly, k, order_cap, [&](std::uint32_t rest) {
    double prod = 1.0;
    for (std::uint32_t m = rest; m != 0; m &= m - 1)
      prod *= x[std::countr_zero(m)];
    return prod;
  });
}

SymmetricTensor expected_derivative(const TetrahedralPolynomial& poly, int k,
                                    const std::vector<double>& subset_moments,
                                    int order_cap) {
  if (subset_moments.size() < (std::size_t(1) << poly.n))
    throw std::invalid_argument("expected_derivative: moment table too small");
  return derivative_impl(poly, k, order_cap, [&](std::uint32_t rest) {
    return subset_moments[rest];
  });
}

SymmetricTensor expected_derivative(const TetrahedralPolynomial& poly, int k,
                                    const ExactLaw& law, int order_cap) {
  if (law.n != poly.n)
    throw std::invalid_argument("expected_derivative: law dimension mismatch");
  return expected_derivative(poly, k, all_subset_moments(law), order_cap);
}

}  // namespace ising
