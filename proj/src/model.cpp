#include "ising/model.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace ising {

SpinConfig SpinConfig::from_mask(SpinMask m, int n) {
  SpinConfig c;
  c.spins.resize(n);
  for (int i = 0; i < n; ++i)
    c.spins[i] = static_cast<std::int8_t>(spin(m, i));
  return c;
}

SpinMask SpinConfig::to_mask() const {
  SpinMask m = 0;
  for (std::size_t i = 0; i < spins.size(); ++i) {
    if (spins[i] != 1 && spins[i] != -1)
      throw std::invalid_argument("SpinConfig: entries must be +1 or -1");
    if (spins[i] == 1) m |= SpinMask(1) << i;
  }
  return m;
}

IsingModel IsingModel::from_triplets(
    int n, const std::vector<std::tuple<int, int, double>>& triplets,
    std::vector<double> h) {
  if (n < 1) throw std::invalid_argument("model: n must be >= 1");
  if (static_cast<int>(h.size()) != n)
    throw std::invalid_argument("model: h must have length n");
  IsingModel m;
  m.n = n;
  m.h = std::move(h);
  m.J.assign(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [i, j, v] : triplets) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw std::invalid_argument("model: coupling index out of range");
    if (i == j)
      throw std::invalid_argument(
          "model: diagonal coupling not allowed (J has vanishing diagonal)");
    if (!std::isfinite(v))
      throw std::invalid_argument("model: non-finite coupling value");
    const std::size_t a = static_cast<std::size_t>(i) * n + j;
    const std::size_t b = static_cast<std::size_t>(j) * n + i;
    if (seen[a] && m.J[a] != v)
      throw std::invalid_argument(
          "model: conflicting values for coupling (" + std::to_string(i) +
          "," + std::to_string(j) + "); symmetry is asserted, not averaged");
    m.J[a] = m.J[b] = v;
    seen[a] = seen[b] = 1;
  }
  m.validate();
  return m;
}

void IsingModel::validate() const {
  if (n < 1) throw std::invalid_argument("model: n must be >= 1");
  if (J.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("model: J must be n x n");
  if (h.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("model: h must have length n");
  for (double v : h)
    if (!std::isfinite(v))
      throw std::invalid_argument("model: non-finite field value");
  for (int i = 0; i < n; ++i) {
    if (coupling(i, i) != 0.0)
      throw std::invalid_argument("model: J diagonal must vanish");
    for (int j = 0; j < n; ++j) {
      const double v = coupling(i, j);
      if (!std::isfinite(v))
        throw std::invalid_argument("model: non-finite coupling value");
      if (v != coupling(j, i))
        throw std::invalid_argument("model: J must be symmetric");
    }
  }
}

DobrushinReport dobrushin_margin(const IsingModel& model) {
  DobrushinReport r{};
  double max_row = 0.0;
  for (int i = 0; i < model.n; ++i) {
    double s = 0.0;
    for (int j = 0; j < model.n; ++j) s += std::abs(model.coupling(i, j));
    max_row = std::max(max_row, s);
  }
  double alpha = 0.0;
  for (double v : model.h) alpha = std::max(alpha, std::abs(v));
  r.max_row_l1 = max_row;
  r.rho = 1.0 - max_row;
  r.alpha = alpha;
  r.holds = r.rho > 0.0;
  return r;
}

double conditional_plus_prob(const IsingModel& model, int site, SpinMask rest) {
  if (site < 0 || site >= model.n)
    throw std::invalid_argument("conditional_plus_prob: site out of range");
  double m = -model.h[site];
  const double* row = model.J.data() + static_cast<std::size_t>(site) * model.n;
  for (int j = 0; j < model.n; ++j)
    if (j != site) m += row[j] * spin(rest, j);
  return 1.0 / (1.0 + std::exp(-2.0 * m));
}

double conditional_plus_prob(const IsingModel& model, int site,
                             const SpinConfig& rest) {
  return conditional_plus_prob(model, site, rest.to_mask());
}

double log_weight(const IsingModel& model, SpinMask config) {
  double e = 0.0;
  for (int i = 0; i < model.n; ++i) {
    const int si = spin(config, i);
    const double* row = model.J.data() + static_cast<std::size_t>(i) * model.n;
    double acc = 0.0;
    for (int j = i + 1; j < model.n; ++j) acc += row[j] * spin(config, j);
    e += si * acc - model.h[i] * si;
  }
  return e;
}

ExactLaw exact_law(const IsingModel& model, int cap, Exec mode) {
  model.validate();
  if (model.n > cap)
    throw capacity_error("exact_law: n=" + std::to_string(model.n) +
                         " exceeds the enumeration cap " + std::to_string(cap));
  const std::size_t count = std::size_t(1) << model.n;
  ExactLaw law;
  law.n = model.n;
  law.probs.resize(count);
  std::vector<double>& p = law.probs;
  parallel_for(
      count,
      [&](std::size_t m) { p[m] = log_weight(model, static_cast<SpinMask>(m)); },
      mode);
  const double top = block_max(count, [&](std::size_t m) { return p[m]; }, mode);
  parallel_for(count, [&](std::size_t m) { p[m] = std::exp(p[m] - top); }, mode);
  const double z = block_sum(count, [&](std::size_t m) { return p[m]; }, mode);
  parallel_for(count, [&](std::size_t m) { p[m] /= z; }, mode);
  return law;
}

double moment(const ExactLaw& law, SpinMask subset, Exec mode) {
  const std::size_t count = law.probs.size();
  if (subset == 0) return 1.0;
  return block_sum(
      count,
      [&](std::size_t m) {
        const int par = std::popcount(subset & ~static_cast<SpinMask>(m)) & 1;
        return par ? -law.probs[m] : law.probs[m];
      },
      mode);
}

double expectation(const std::vector<double>& values, const ExactLaw& law,
                   Exec mode) {
  if (values.size() != law.probs.size())
    throw std::invalid_argument("expectation: table size mismatch");
  return block_sum(
      values.size(), [&](std::size_t m) { return values[m] * law.probs[m]; },
      mode);
}

double variance(const std::vector<double>& values, const ExactLaw& law,
                Exec mode) {
  const double mean = expectation(values, law, mode);
  return block_sum(
      values.size(),
      [&](std::size_t m) {
        const double d = values[m] - mean;
        return d * d * law.probs[m];
      },
      mode);
}

}  // namespace ising
