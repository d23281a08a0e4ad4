#include "ising/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ising/rng.hpp"

namespace ising {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

std::vector<double> random_unit(Rng& rng, std::size_t dim) {
  std::vector<double> v(dim);
  double n = 0.0;
  while (n == 0.0) {
    for (auto& x : v) x = rng.normal();
    n = norm2(v);
  }
  for (auto& x : v) x /= n;
  return v;
}

// Water-filling solution of sup{ <mags, y> : |y|_2 <= sqrt(p), 0 <= y <= 1 }
// for a nonnegative weight vector. `lambda` parameterizes the maximizer
// y_i = min(1, lambda * mags_i); all_ones marks the l1 regime (p >= support).
struct WaterFill {
  double value = 0.0;
  double lambda = 0.0;
  bool all_ones = false;
};

WaterFill water_fill(std::vector<double> mags, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("water_fill: p must be positive");
  std::stable_sort(mags.begin(), mags.end(), std::greater<double>());
  const std::size_t n = mags.size();
  std::size_t support = 0;
  while (support < n && mags[support] > 0.0) ++support;
  WaterFill w;
  if (support == 0) {
    w.all_ones = true;
    return w;
  }
  if (p >= static_cast<double>(support)) {
    w.all_ones = true;
    w.value = std::accumulate(mags.begin(), mags.begin() + support, 0.0);
    return w;
  }
  // Suffix squared sums: tail[m] = sum_{i >= m} mags_i^2.
  std::vector<double> tail(support + 1, 0.0);
  for (std::size_t i = support; i-- > 0;)
    tail[i] = tail[i + 1] + mags[i] * mags[i];
  double prefix = 0.0;
  for (std::size_t m = 0; m < support && static_cast<double>(m) < p; ++m) {
    const double lam = std::sqrt((p - static_cast<double>(m)) / tail[m]);
    const bool hi_ok = (m == 0) || (lam * mags[m - 1] >= 1.0 - 1e-12);
    const bool lo_ok = lam * mags[m] <= 1.0 + 1e-12;
    if (hi_ok && lo_ok) {
      w.lambda = lam;
      w.value = prefix + std::sqrt((p - static_cast<double>(m)) * tail[m]);
      return w;
    }
    prefix += mags[m];
  }
  // Rounding pushed every breakpoint out of tolerance; fall back to a
  // bisection on the budget function g(lam) = sum min(1, lam mags_i)^2.
  double lo = 0.0, hi = 1.0 / mags[support - 1];
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    double g = 0.0;
    for (std::size_t i = 0; i < support; ++i)
      g += std::min(1.0, mid * mags[i]) * std::min(1.0, mid * mags[i]);
    (g < p ? lo : hi) = mid;
  }
  w.lambda = 0.5 * (lo + hi);
  for (std::size_t i = 0; i < support; ++i)
    w.value += std::min(1.0, w.lambda * mags[i]) * mags[i];
  return w;
}

}  // namespace

double latala_vector_norm(const std::vector<double>& x, double p) {
  if (!(p > 0.0))
    throw std::invalid_argument("latala_vector_norm: p must be positive");
  std::vector<double> mags(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) mags[i] = std::abs(x[i]);
  return water_fill(std::move(mags), p).value;
}

std::vector<double> latala_maximizer(const std::vector<double>& c, double p) {
  if (!(p > 0.0))
    throw std::invalid_argument("latala_maximizer: p must be positive");
  std::vector<double> mags(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) mags[i] = std::abs(c[i]);
  const WaterFill w = water_fill(mags, p);
  std::vector<double> y(c.size(), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0.0) continue;
    const double mag = w.all_ones ? 1.0 : std::min(1.0, w.lambda * mags[i]);
    y[i] = c[i] > 0.0 ? mag : -mag;
  }
  return y;
}

namespace {

void require_square_symmetric(const SymmetricTensor& A, const char* who) {
  if (A.order != 2)
    throw std::invalid_argument(std::string(who) + ": expected a matrix");
  const int n = A.dim;
  const double scale = std::max(1.0, A.max_abs());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double a = A.entries[static_cast<std::size_t>(i) * n + j];
      const double b = A.entries[static_cast<std::size_t>(j) * n + i];
      if (std::abs(a - b) > 1e-12 * scale)
        throw std::invalid_argument(std::string(who) + ": matrix not symmetric");
    }
}

}  // namespace

double matrix_norm_12p(const SymmetricTensor& A, double p) {
  require_square_symmetric(A, "matrix_norm_12p");
  const int n = A.dim;
  std::vector<double> rows(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    const double* row = A.entries.data() + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) s += row[j] * row[j];
    rows[i] = std::sqrt(s);
  }
  return latala_vector_norm(rows, p);
}

namespace {

std::vector<double> matvec(const SymmetricTensor& A,
                           const std::vector<double>& v) {
  const int n = A.dim;
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double* row = A.entries.data() + static_cast<std::size_t>(i) * n;
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += row[j] * v[j];
    out[i] = s;
  }
  return out;
}

struct RestartOutcome {
  double value = 0.0;
  std::vector<std::vector<double>> blocks;
  bool converged = false;
};

}  // namespace

NormResult matrix_norm_1_2_p(const SymmetricTensor& A, double p,
                             const NormOptions& opts) {
  require_square_symmetric(A, "matrix_norm_1_2_p");
  if (!(p > 0.0))
    throw std::invalid_argument("matrix_norm_1_2_p: p must be positive");
  const int n = A.dim;
  const std::size_t total =
      opts.warm_starts.size() + static_cast<std::size_t>(opts.restarts);
  NormResult res;
  res.restarts_used = static_cast<int>(total);
  if (A.max_abs() == 0.0 || total == 0) {
    res.witness = {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    return res;
  }
  for (const auto& ws : opts.warm_starts)
    if (ws.size() != 2 || ws[0].size() != static_cast<std::size_t>(n) ||
        ws[1].size() != static_cast<std::size_t>(n))
      throw std::invalid_argument(
          "matrix_norm_1_2_p: warm start shape mismatch");
  std::vector<RestartOutcome> out(total);
  parallel_for(
      total,
      [&](std::size_t r) {
        std::vector<double> y;
        if (r < opts.warm_starts.size()) {
          y = opts.warm_starts[r][1];
        } else {
          Rng rng(mix_seed(opts.seed, r));
          y = random_unit(rng, n);
          double ymax = 0.0;
          for (double v : y) ymax = std::max(ymax, std::abs(v));
          const double scale = std::min(std::sqrt(p), 1.0 / ymax);
          for (double& v : y) v *= scale;
        }
        std::vector<double> x(n, 0.0);
        double prev = -1.0, val = 0.0;
        int stall = 0;
        bool converged = false;
        for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
          x = latala_maximizer(matvec(A, y), p);
          const std::vector<double> c = matvec(A, x);
          y = latala_maximizer(c, p);
          val = dot(c, y);
          if (val - prev < opts.tol) {
            if (++stall >= opts.stall_sweeps) {
              converged = true;
              break;
            }
          } else {
            stall = 0;
          }
          prev = val;
        }
        out[r].value = dot(matvec(A, y), x);  // certified at the witness
        out[r].blocks = {std::move(x), std::move(y)};
        out[r].converged = converged;
      },
      opts.exec);
  std::size_t best = 0;
  for (std::size_t r = 1; r < total; ++r)
    if (out[r].value > out[best].value) best = r;
  res.value = out[best].value;
  res.witness = std::move(out[best].blocks);
  res.converged = out[best].converged;
  return res;
}

namespace {

// Nonzero entries of a tensor together with the per-block offsets of each
// entry, so alternating sweeps touch only the support.
struct CompiledForm {
  int nblocks = 0;
  std::vector<std::size_t> block_size;
  std::vector<double> vals;
  std::vector<std::uint32_t> offs;  // offs[e * nblocks + l]

  double value_at(const std::vector<std::vector<double>>& x) const {
    double s = 0.0;
    for (std::size_t e = 0; e < vals.size(); ++e) {
      double prod = vals[e];
      for (int l = 0; l < nblocks; ++l)
        prod *= x[l][offs[e * nblocks + l]];
      s += prod;
    }
    return s;
  }
};

CompiledForm compile_form(const SymmetricTensor& A, const Partition& I) {
  const int d = A.order;
  const int n = A.dim;
  CompiledForm cf;
  cf.nblocks = I.block_count();
  cf.block_size.resize(cf.nblocks);
  for (int l = 0; l < cf.nblocks; ++l) {
    std::size_t sz = 1;
    for (std::size_t r = 0; r < I.blocks[l].size(); ++r)
      sz *= static_cast<std::size_t>(n);
    cf.block_size[l] = sz;
  }
  std::vector<std::size_t> stride(d);
  stride[d - 1] = 1;
  for (int j = d - 2; j >= 0; --j)
    stride[j] = stride[j + 1] * static_cast<std::size_t>(n);
  std::vector<int> digit(d);
  for (std::size_t t = 0; t < A.entries.size(); ++t) {
    if (A.entries[t] == 0.0) continue;
    for (int j = 0; j < d; ++j)
      digit[j] = static_cast<int>((t / stride[j]) % static_cast<std::size_t>(n));
    cf.vals.push_back(A.entries[t]);
    for (int l = 0; l < cf.nblocks; ++l) {
      std::size_t off = 0;
      for (int pos : I.blocks[l])
        off = off * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(digit[pos]);
      cf.offs.push_back(static_cast<std::uint32_t>(off));
    }
  }
  return cf;
}

}  // namespace

NormResult partition_norm(const SymmetricTensor& A, const Partition& I,
                          const NormOptions& opts) {
  if (I.d != A.order)
    throw std::invalid_argument("partition_norm: partition does not match order");
  NormResult res;
  if (I.block_count() == 1) {
    // Single block: the supremum over one unit Frobenius-norm block vector
    // is attained at A / ||A||_F, giving the Frobenius norm exactly.
    const double v = frobenius(A);
    res.value = v;
    std::vector<double> w(A.entries.size(), 0.0);
    if (v > 0.0)
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = A.entries[i] / v;
    res.witness = {std::move(w)};
    return res;
  }

  const CompiledForm cf = compile_form(A, I);
  const int k = cf.nblocks;
  const std::size_t total =
      opts.warm_starts.size() + static_cast<std::size_t>(opts.restarts);
  res.restarts_used = static_cast<int>(total);
  if (cf.vals.empty() || total == 0) {
    for (int l = 0; l < k; ++l)
      res.witness.emplace_back(cf.block_size[l], 0.0);
    return res;
  }

  for (const auto& ws : opts.warm_starts) {
    if (static_cast<int>(ws.size()) != k)
      throw std::invalid_argument("partition_norm: warm start shape mismatch");
    for (int l = 0; l < k; ++l)
      if (ws[l].size() != cf.block_size[l])
        throw std::invalid_argument(
            "partition_norm: warm start block size mismatch");
  }
  std::vector<RestartOutcome> out(total);
  parallel_for(
      total,
      [&](std::size_t r) {
        std::vector<std::vector<double>> x(k);
        if (r < opts.warm_starts.size()) {
          for (int l = 0; l < k; ++l) x[l] = opts.warm_starts[r][l];
        } else {
          Rng rng(mix_seed(opts.seed, r));
          for (int l = 0; l < k; ++l) x[l] = random_unit(rng, cf.block_size[l]);
        }
        double prev = -1.0, val = 0.0;
        int stall = 0;
        bool converged = false;
        std::vector<double> c;
        for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
          bool degenerate = false;
          for (int l = 0; l < k; ++l) {
            c.assign(cf.block_size[l], 0.0);
            for (std::size_t e = 0; e < cf.vals.size(); ++e) {
              double prod = cf.vals[e];
              const std::uint32_t* o = cf.offs.data() + e * k;
              for (int m = 0; m < k; ++m)
                if (m != l) prod *= x[m][o[m]];
              c[o[l]] += prod;
            }
            const double nrm = norm2(c);
            if (nrm == 0.0) {
              degenerate = true;
              break;
            }
            for (std::size_t i = 0; i < c.size(); ++i) x[l][i] = c[i] / nrm;
            val = nrm;
          }
          if (degenerate) break;
          if (val - prev < opts.tol) {
            if (++stall >= opts.stall_sweeps) {
              converged = true;
              break;
            }
          } else {
            stall = 0;
          }
          prev = val;
        }
        out[r].value = cf.value_at(x);  // certified at the witness
        out[r].blocks = std::move(x);
        out[r].converged = converged;
      },
      opts.exec);
  std::size_t best = 0;
  for (std::size_t r = 1; r < total; ++r)
    if (out[r].value > out[best].value) best = r;
  res.value = out[best].value;
  res.witness = std::move(out[best].blocks);
  res.converged = out[best].converged;
  return res;
}

double opnorm_nonneg_sym(const std::vector<double>& m, int n) {
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double lam = 0.0;
  for (int it = 0; it < 10000; ++it) {
    std::vector<double> w(n, 0.0);
    for (int i = 0; i < n; ++i) {
      const double* row = m.data() + static_cast<std::size_t>(i) * n;
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += row[j] * v[j];
      w[i] = s;
    }
    const double nrm = norm2(w);
    if (nrm == 0.0) return 0.0;
    for (int i = 0; i < n; ++i) v[i] = w[i] / nrm;
    if (std::abs(nrm - lam) <= 1e-14 * std::max(1.0, nrm) && it > 3) return nrm;
    lam = nrm;
  }
  return lam;
}

std::pair<double, double> sym_eig_extremes(const std::vector<double>& m, int n) {
  // Gershgorin radius bounds the spectrum; power-iterate the two shifts.
  double r = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j)
      s += std::abs(m[static_cast<std::size_t>(i) * n + j]);
    r = std::max(r, s);
  }
  if (r == 0.0) return {0.0, 0.0};
  auto shifted_top = [&](double shift_sign) {
    Rng rng(0x5eed5eedULL);
    std::vector<double> v = random_unit(rng, n);
    double lam = 0.0;
    for (int it = 0; it < 20000; ++it) {
      std::vector<double> w(n, 0.0);
      for (int i = 0; i < n; ++i) {
        const double* row = m.data() + static_cast<std::size_t>(i) * n;
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += row[j] * v[j];
        w[i] = shift_sign * s + r * v[i];
      }
      const double nrm = norm2(w);
      if (nrm == 0.0) return 0.0;
      for (int i = 0; i < n; ++i) v[i] = w[i] / nrm;
      if (std::abs(nrm - lam) <= 1e-13 * std::max(1.0, nrm) && it > 3)
        return nrm;
      lam = nrm;
    }
    return lam;
  };
  const double lam_max = shifted_top(+1.0) - r;   // top of  M + rI
  const double lam_min = -(shifted_top(-1.0) - r);  // top of -M + rI
  return {lam_min, lam_max};
}

}  // namespace ising
